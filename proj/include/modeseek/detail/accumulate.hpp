#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace modeseek::detail {

// Above this sample count kernel sums switch from plain left-to-right
// accumulation to Neumaier-compensated accumulation, keeping long sums stable
// without changing small-n results that tests pin bitwise.
inline constexpr std::size_t kCompensatedThreshold = 10'000;

template <typename Term>
double sample_sum(std::span<const double> xs, Term&& term) {
    if (xs.size() < kCompensatedThreshold) {
        double sum = 0.0;
        for (double x : xs) {
            sum += term(x);
        }
        return sum;
    }
    double sum = 0.0;
    double compensation = 0.0;
    for (double x : xs) {
        const double t = term(x);
        const double next = sum + t;
        if (std::abs(sum) >= std::abs(t)) {
            compensation += (sum - next) + t;
        } else {
            compensation += (t - next) + sum;
        }
        sum = next;
    }
    return sum + compensation;
}

} // namespace modeseek::detail

#include "modeseek/mixture.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace modeseek {

double standard_normal_draw(std::mt19937_64& engine) {
    constexpr double scale = 0x1p-53;
    const double u1 = (static_cast<double>(engine() >> 11) + 1.0) * scale;
    const double u2 = static_cast<double>(engine() >> 11) * scale;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

SampleSet generate_mixture(std::uint64_t seed, std::size_t n_pos,
                           std::size_t n_neg, double mu_pos, double mu_neg,
                           double sigma) {
    if (n_pos + n_neg == 0) {
        throw std::invalid_argument("mixture needs at least one sample");
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("sigma must be positive and finite");
    }
    if (!std::isfinite(mu_pos) || !std::isfinite(mu_neg)) {
        throw std::invalid_argument("component means must be finite");
    }
    std::mt19937_64 engine(seed);
    std::vector<double> points;
    points.reserve(n_pos + n_neg);
    for (std::size_t i = 0; i < n_pos; ++i) {
        points.push_back(mu_pos + sigma * standard_normal_draw(engine));
    }
    for (std::size_t i = 0; i < n_neg; ++i) {
        points.push_back(mu_neg + sigma * standard_normal_draw(engine));
    }
    return SampleSet(std::move(points));
}

} // namespace modeseek

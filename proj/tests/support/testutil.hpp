#pragma once

#include "modeseek/density.hpp"
#include "modeseek/experiment.hpp"
#include "modeseek/mixture.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace testutil {

// Ten reference starts used by the summary-shaped experiment and the
// acceptance suite.
inline const std::vector<double> kReferenceStarts = {
    6.045, -6.575, 0.905, -0.575, 4.457, -4.759, 0.588, -0.602, 5.076, -5.160};

inline modeseek::DensityModel make_model(std::vector<double> points,
                                         const char* kernel, double h) {
    return modeseek::DensityModel(modeseek::SampleSet(std::move(points)),
                                  modeseek::find_profile(kernel), h);
}

// The bundled two-component reference fixture: 500 draws around +3, then 500
// around -3, unit variance.
inline modeseek::SampleSet reference_mixture() {
    return modeseek::generate_mixture(modeseek::kDefaultMixtureSeed, 500, 500,
                                      3.0, -3.0, 1.0);
}

// Engine-bit uniforms, independent of any distribution implementation, so
// randomized tests replay identically everywhere.
inline double uniform_unit(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1p-53;
}

inline double uniform_in(std::mt19937_64& engine, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(engine);
}

inline std::size_t uniform_index(std::mt19937_64& engine, std::size_t lo,
                                 std::size_t hi) {
    return lo + static_cast<std::size_t>(engine() % (hi - lo + 1));
}

template <typename F>
double central_diff(F&& f, double x, double delta) {
    return (f(x + delta) - f(x - delta)) / (2.0 * delta);
}

// Composite Simpson rule; intervals must be even.
template <typename F>
double simpson(F&& f, double a, double b, int intervals) {
    const double h = (b - a) / intervals;
    double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) {
        sum += f(a + h * i) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

} // namespace testutil

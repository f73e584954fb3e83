#pragma once

#include "modeseek/density.hpp"

#include <cstdint>
#include <random>

namespace modeseek {

// One standard-normal draw via the Box-Muller transform, pinned bit-for-bit:
// two engine outputs z1, z2 become u1 = ((z1 >> 11) + 1) * 2^-53 in (0, 1]
// and u2 = (z2 >> 11) * 2^-53 in [0, 1); the draw is
// sqrt(-2 ln u1) * cos(2 pi u2). Fixtures regenerate exactly from the seed.
double standard_normal_draw(std::mt19937_64& engine);

// Deterministic two-component normal mixture: n_pos draws from
// N(mu_pos, sigma^2) followed by n_neg draws from N(mu_neg, sigma^2), in
// generation order.
SampleSet generate_mixture(std::uint64_t seed, std::size_t n_pos,
                           std::size_t n_neg, double mu_pos, double mu_neg,
                           double sigma);

} // namespace modeseek

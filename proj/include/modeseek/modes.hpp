#pragma once

#include "modeseek/density.hpp"
#include "modeseek/meanshift.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace modeseek {

// Pruned mode locations with the density at each. assignments is filled only
// by clustering runs: one entry per sample in insertion order, empty where the
// sample's run hit degenerate weights.
struct ModeSet {
    std::vector<double> modes;      // strictly increasing
    std::vector<double> densities;  // density at each mode
    std::vector<std::optional<std::size_t>> assignments;
};

// Brute-force mode locator, independent of the iteration machinery: scans a
// uniform grid for sign changes of the analytic derivative (positive to
// non-positive) and refines each bracket with 60 bisection steps.
ModeSet grid_modes_oracle(const DensityModel& model, double lo, double hi,
                          std::size_t resolution);

// Same, over [min - 3h, max + 3h] at resolution 4097.
ModeSet grid_modes_oracle(const DensityModel& model);

// Sorts the estimates, merges runs whose consecutive gaps are within
// merge_radius, keeps the highest-density member of each run, and drops
// representatives that classify as repelling fixed points.
ModeSet prune_modes(std::vector<double> estimates, const DensityModel& model,
                    double merge_radius);

// Runs mean shift from every sample, prunes the endpoints with merge radius
// 2 * config.epsilon, and assigns each sample to its nearest pruned mode.
ModeSet assign_clusters(const SampleSet& samples, const DensityModel& model,
                        const IterationConfig& config = {});

} // namespace modeseek

#pragma once

#include "modeseek/density.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace modeseek {

struct IterationConfig {
    double epsilon = 5e-4;               // stop once |y_{j+1} - y_j| drops below this
    std::size_t max_iterations = 10'000; // hard cap on update steps
};

enum class Termination { converged, max_iterations, degenerate_weights };

const char* to_string(Termination t);

struct TrajectoryStep {
    double y = 0.0;
    double f_hat = 0.0;
    double f_hat_prime = 0.0;
    std::optional<double> step_to_next; // |y_{j+1} - y_j|; empty on the final record
};

// Mode estimate sequence from one run. steps.front().y is the start,
// steps.back().y the final estimate; every y lies in the sample hull except
// possibly the start itself.
struct Trajectory {
    double start = 0.0;
    std::vector<TrajectoryStep> steps;
    Termination terminated_by = Termination::converged;
    double epsilon = 5e-4; // stopping threshold the run used

    double final_estimate() const { return steps.back().y; }
    std::vector<double> estimates() const;
};

// Displacement from x to the g-weighted sample mean.
// Throws DegenerateWeightsError when every weight vanishes at x.
double mean_shift_scalar(const DensityModel& model, double x);

// One fixed-point update: the g-weighted sample mean at y, clamped into
// [min(points), max(points)] where it lies mathematically.
double mode_update(const DensityModel& model, double y);

// Iterates mode_update from start until the step size drops below
// config.epsilon or the update cap is hit. A degenerate-weights point ends
// the run with the steps recorded so far.
Trajectory run_mean_shift(const DensityModel& model, double start,
                          const IterationConfig& config = {});

// Central-difference estimate of the update map's derivative at x.
// The default step is 1e-5 * bandwidth.
double map_derivative(const DensityModel& model, double x, double fd_step);
double map_derivative(const DensityModel& model, double x);

} // namespace modeseek

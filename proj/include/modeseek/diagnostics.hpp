#pragma once

#include "modeseek/density.hpp"
#include "modeseek/meanshift.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace modeseek {

// Slack and band constants shared by the trajectory checks, kept in one place
// so every caller pins the same numbers.
struct DiagnosticTolerances {
    double ascent_slack = 1e-12;      // permitted per-step density decrease
    double inequality_slack = 1e-12;  // slack subtracted from the step lower bound
    double ratio_slack = 0.05;        // relative slack on the error-ratio bounds
    double marginal_band = 0.05;      // |m'| band around 1 classified as marginal
    int interval_samples = 33;        // interior m' samples when bounding over an interval
    double noise_floor_factor = 10.0; // skip error ratios once e_j < factor * epsilon
};

struct AscentReport {
    bool ok = true;
    // 1-based index j of the first step with f(y_{j+1}) < f(y_j) - slack.
    std::optional<std::size_t> first_violation;
};

struct StepInequalityRecord {
    std::size_t j = 0;  // 1-based index of the step's left endpoint
    double lhs = 0.0;   // f(y_{j+1}) - f(y_j)
    double rhs = 0.0;   // (c / h^2) * (y_{j+1} - y_j)^2 * phi
    bool holds = false; // lhs >= rhs - slack
};

enum class StabilityClass { attracting, repelling, marginal };

const char* to_string(StabilityClass c);

struct FixedPointReport {
    double location = 0.0;
    double map_derivative_abs = 0.0;
    StabilityClass stability = StabilityClass::attracting;
    double gradient_at_limit = 0.0;
};

enum class TailDirection { increasing, decreasing, constant };

const char* to_string(TailDirection d);

struct MonotoneTailReport {
    std::size_t tail_start = 1; // smallest 1-based N with {y_j : j >= N} monotone
    TailDirection direction = TailDirection::constant;
    bool is_fully_monotone = false; // tail_start == 1
};

// Verifies f(y_1) <= f(y_2) <= ... within tol.ascent_slack, using the density
// values recorded on the trajectory.
AscentReport check_density_ascent(const Trajectory& traj,
                                  const DiagnosticTolerances& tol = {});

// Per-step lower bound on the density increase: for each consecutive pair,
// f(y_{j+1}) - f(y_j) >= (c / h^2) * (y_{j+1} - y_j)^2 * phi, where phi is
// the minimum kernel weight over the sample diameter.
std::vector<StepInequalityRecord> check_step_inequality(
    const Trajectory& traj, const DensityModel& model,
    const DiagnosticTolerances& tol = {});

// phi = g(d_max^2 / h^2), the weight floor used by the step bound.
double phi_bound(const DensityModel& model);

// Smallest N such that the tail {y_N, y_{N+1}, ...} is monotone, with its
// direction. Ties between directions mean the tail is constant.
MonotoneTailReport detect_monotone_tail(const Trajectory& traj);

// Default tolerance for the terminal-gradient check: 1% of the largest |f'|
// of the model over the standard evaluation window, floored at 1e-6. The
// scale must come from the model, not the trajectory: a run that starts on
// a shallow slope never records a large gradient, and epsilon-sized steps
// near a slow mode leave a terminal gradient that is small only relative to
// the density's overall variation.
double default_gradient_tolerance(const DensityModel& model);

// True iff |f'(y_final)| < tol. Only defined for converged trajectories;
// throws InapplicableCheckError otherwise.
bool check_gradient_at_limit(const Trajectory& traj, const DensityModel& model,
                             double tol);
bool check_gradient_at_limit(const Trajectory& traj, const DensityModel& model);

// Classifies x* by the finite-difference |m'(x*)|: attracting below 1 - tau,
// repelling above 1 + tau, marginal within the band.
FixedPointReport classify_fixed_point(const DensityModel& model, double x_star,
                                      double tau = 0.05);

// Checks that each error ratio e_{j+1} / e_j lies between the sampled min and
// max of |m'| on the interval from y_j to x_star, with tol.ratio_slack
// relative slack. Ratios with e_j below noise_floor_factor * epsilon are
// skipped. Requires a converged trajectory.
bool check_error_ratio_bound(const DensityModel& model, const Trajectory& traj,
                             double x_star, const DiagnosticTolerances& tol = {});

// Same check against an arbitrary iteration map, for fixtures with known m'.
bool check_error_ratio_bound_for_map(const std::function<double(double)>& map_fn,
                                     const std::vector<double>& estimates,
                                     double x_star, double noise_floor,
                                     double fd_step,
                                     const DiagnosticTolerances& tol = {});

} // namespace modeseek

#include "modeseek/diagnostics.hpp"

#include "modeseek/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace modeseek {

namespace {

void require_steps(const Trajectory& traj, std::size_t min_steps) {
    if (traj.steps.size() < min_steps) {
        throw std::invalid_argument("trajectory is too short for this check");
    }
}

// Sampled range of |m'| over the open interval between a and b.
struct DerivativeRange {
    double min = 0.0;
    double max = 0.0;
};

DerivativeRange sample_map_derivative_range(
    const std::function<double(double)>& map_fn, double a, double b,
    double fd_step, int samples) {
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    DerivativeRange range{std::numeric_limits<double>::infinity(), 0.0};
    for (int i = 1; i <= samples; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) /
                                  static_cast<double>(samples + 1);
        const double d = std::abs((map_fn(t + fd_step) - map_fn(t - fd_step)) /
                                  (2.0 * fd_step));
        range.min = std::min(range.min, d);
        range.max = std::max(range.max, d);
    }
    return range;
}

} // namespace

const char* to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::attracting: return "attracting";
        case StabilityClass::repelling: return "repelling";
        case StabilityClass::marginal: return "marginal";
    }
    return "unknown";
}

const char* to_string(TailDirection d) {
    switch (d) {
        case TailDirection::increasing: return "increasing";
        case TailDirection::decreasing: return "decreasing";
        case TailDirection::constant: return "constant";
    }
    return "unknown";
}

AscentReport check_density_ascent(const Trajectory& traj,
                                  const DiagnosticTolerances& tol) {
    require_steps(traj, 2);
    AscentReport report;
    for (std::size_t i = 0; i + 1 < traj.steps.size(); ++i) {
        if (traj.steps[i + 1].f_hat < traj.steps[i].f_hat - tol.ascent_slack) {
            report.ok = false;
            report.first_violation = i + 1;
            return report;
        }
    }
    return report;
}

double phi_bound(const DensityModel& model) {
    const double d = model.samples().d_max();
    const double h = model.bandwidth();
    return g_eval(model.profile(), (d * d) / (h * h));
}

std::vector<StepInequalityRecord> check_step_inequality(
    const Trajectory& traj, const DensityModel& model,
    const DiagnosticTolerances& tol) {
    const double h = model.bandwidth();
    const double phi = phi_bound(model);
    const double factor = model.profile().norm_const_1d / (h * h) * phi;

    std::vector<StepInequalityRecord> records;
    records.reserve(traj.steps.size() - 1);
    for (std::size_t i = 0; i + 1 < traj.steps.size(); ++i) {
        const double dy = traj.steps[i + 1].y - traj.steps[i].y;
        StepInequalityRecord rec;
        rec.j = i + 1;
        rec.lhs = traj.steps[i + 1].f_hat - traj.steps[i].f_hat;
        rec.rhs = factor * dy * dy;
        rec.holds = rec.lhs >= rec.rhs - tol.inequality_slack;
        records.push_back(rec);
    }
    return records;
}

MonotoneTailReport detect_monotone_tail(const Trajectory& traj) {
    require_steps(traj, 2);
    const std::size_t n = traj.steps.size();
    auto y = [&](std::size_t i) { return traj.steps[i].y; };

    // Walk backwards to find the longest non-decreasing and non-increasing
    // suffixes; the monotone tail starts at the earlier of the two.
    std::size_t inc_start = n - 1;
    while (inc_start > 0 && y(inc_start - 1) <= y(inc_start)) {
        --inc_start;
    }
    std::size_t dec_start = n - 1;
    while (dec_start > 0 && y(dec_start - 1) >= y(dec_start)) {
        --dec_start;
    }

    MonotoneTailReport report;
    report.tail_start = std::min(inc_start, dec_start) + 1;
    if (inc_start < dec_start) {
        report.direction = TailDirection::increasing;
    } else if (dec_start < inc_start) {
        report.direction = TailDirection::decreasing;
    } else {
        // Both suffixes start together, so the tail is both non-decreasing
        // and non-increasing: constant.
        report.direction = TailDirection::constant;
    }
    report.is_fully_monotone = report.tail_start == 1;
    return report;
}

double default_gradient_tolerance(const DensityModel& model) {
    const double h = model.bandwidth();
    const double lo = model.samples().min() - 3.0 * h;
    const double hi = model.samples().max() + 3.0 * h;
    constexpr std::size_t kResolution = 4097;
    double max_abs = 0.0;
    for (std::size_t i = 0; i < kResolution; ++i) {
        const double x =
            lo + (hi - lo) * static_cast<double>(i) /
                     static_cast<double>(kResolution - 1);
        max_abs = std::max(max_abs, std::abs(density_gradient_at(model, x)));
    }
    return std::max(1e-2 * max_abs, 1e-6);
}

bool check_gradient_at_limit(const Trajectory& traj, const DensityModel& model,
                             double tol) {
    if (traj.terminated_by != Termination::converged) {
        throw InapplicableCheckError(
            "terminal-gradient check requires a converged trajectory");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("gradient tolerance must be positive");
    }
    return std::abs(density_gradient_at(model, traj.final_estimate())) < tol;
}

bool check_gradient_at_limit(const Trajectory& traj, const DensityModel& model) {
    return check_gradient_at_limit(traj, model,
                                   default_gradient_tolerance(model));
}

FixedPointReport classify_fixed_point(const DensityModel& model, double x_star,
                                      double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument("tau must be positive and finite");
    }
    FixedPointReport report;
    report.location = x_star;
    report.map_derivative_abs = std::abs(map_derivative(model, x_star));
    if (report.map_derivative_abs < 1.0 - tau) {
        report.stability = StabilityClass::attracting;
    } else if (report.map_derivative_abs > 1.0 + tau) {
        report.stability = StabilityClass::repelling;
    } else {
        report.stability = StabilityClass::marginal;
    }
    report.gradient_at_limit = density_gradient_at(model, x_star);
    return report;
}

bool check_error_ratio_bound_for_map(
    const std::function<double(double)>& map_fn,
    const std::vector<double>& estimates, double x_star, double noise_floor,
    double fd_step, const DiagnosticTolerances& tol) {
    if (estimates.size() < 2) {
        throw std::invalid_argument("need at least two estimates");
    }
    if (tol.interval_samples < 1) {
        throw std::invalid_argument("interval_samples must be at least 1");
    }
    for (std::size_t j = 0; j + 1 < estimates.size(); ++j) {
        const double e_j = std::abs(x_star - estimates[j]);
        const double e_next = std::abs(x_star - estimates[j + 1]);
        if (e_j < noise_floor) {
            continue;
        }
        const double ratio = e_next / e_j;
        const DerivativeRange range = sample_map_derivative_range(
            map_fn, estimates[j], x_star, fd_step, tol.interval_samples);
        // Additive slack: x_star is itself an estimate, off by up to
        // epsilon * |m'| / (1 - |m'|), which shifts ratios near the noise
        // floor by up to |m'| * epsilon / noise_floor. With the default
        // floor of 10 epsilon that is below 0.05 for contraction rates up
        // to one half; a relative margin would not cover it.
        if (ratio < range.min - tol.ratio_slack ||
            ratio > range.max + tol.ratio_slack) {
            return false;
        }
    }
    return true;
}

bool check_error_ratio_bound(const DensityModel& model, const Trajectory& traj,
                             double x_star, const DiagnosticTolerances& tol) {
    if (traj.terminated_by != Termination::converged) {
        throw InapplicableCheckError(
            "error-ratio check requires a converged trajectory");
    }
    return check_error_ratio_bound_for_map(
        [&](double y) { return mode_update(model, y); }, traj.estimates(),
        x_star, tol.noise_floor_factor * traj.epsilon,
        1e-5 * model.bandwidth(), tol);
}

} // namespace modeseek

#include "modeseek/meanshift.hpp"

#include "modeseek/detail/accumulate.hpp"
#include "modeseek/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modeseek {

namespace {

// g-weighted sample mean at x; the common core of the shift scalar and the
// fixed-point update. Throws when the weight sum is exactly zero.
double weighted_mean(const DensityModel& model, double x) {
    const double h = model.bandwidth();
    const KernelProfile& profile = model.profile();
    const auto xs = model.samples().ascending();
    const double denominator = detail::sample_sum(xs, [&](double xi) {
        const double u = (x - xi) / h;
        return profile.g(u * u);
    });
    if (denominator == 0.0) {
        throw DegenerateWeightsError(x);
    }
    const double numerator = detail::sample_sum(xs, [&](double xi) {
        const double u = (x - xi) / h;
        return xi * profile.g(u * u);
    });
    return numerator / denominator;
}

TrajectoryStep make_step(const DensityModel& model, double y) {
    TrajectoryStep step;
    step.y = y;
    step.f_hat = density_at(model, y);
    step.f_hat_prime = density_gradient_at(model, y);
    return step;
}

} // namespace

const char* to_string(Termination t) {
    switch (t) {
        case Termination::converged: return "converged";
        case Termination::max_iterations: return "max_iterations";
        case Termination::degenerate_weights: return "degenerate_weights";
    }
    return "unknown";
}

std::vector<double> Trajectory::estimates() const {
    std::vector<double> ys;
    ys.reserve(steps.size());
    for (const TrajectoryStep& step : steps) {
        ys.push_back(step.y);
    }
    return ys;
}

double mean_shift_scalar(const DensityModel& model, double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("evaluation point must be finite");
    }
    return weighted_mean(model, x) - x;
}

double mode_update(const DensityModel& model, double y) {
    if (!std::isfinite(y)) {
        throw std::invalid_argument("evaluation point must be finite");
    }
    // The weighted mean lies in the hull of the samples; the clamp only
    // removes the last-ulp excursions of the division.
    return std::clamp(weighted_mean(model, y), model.samples().min(),
                      model.samples().max());
}

Trajectory run_mean_shift(const DensityModel& model, double start,
                          const IterationConfig& config) {
    if (!std::isfinite(start)) {
        throw std::invalid_argument("start must be finite");
    }
    if (!std::isfinite(config.epsilon) || config.epsilon <= 0.0) {
        throw std::invalid_argument("epsilon must be positive and finite");
    }
    if (config.max_iterations == 0) {
        throw std::invalid_argument("max_iterations must be at least 1");
    }

    Trajectory traj;
    traj.start = start;
    traj.epsilon = config.epsilon;
    traj.steps.push_back(make_step(model, start));

    double y = start;
    for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
        double next;
        try {
            next = mode_update(model, y);
        } catch (const DegenerateWeightsError&) {
            traj.terminated_by = Termination::degenerate_weights;
            return traj;
        }
        const double step = std::abs(next - y);
        traj.steps.back().step_to_next = step;
        traj.steps.push_back(make_step(model, next));
        y = next;
        if (step < config.epsilon) {
            traj.terminated_by = Termination::converged;
            return traj;
        }
    }
    traj.terminated_by = Termination::max_iterations;
    return traj;
}

double map_derivative(const DensityModel& model, double x, double fd_step) {
    if (!(fd_step > 0.0) || !std::isfinite(fd_step)) {
        throw std::invalid_argument("fd_step must be positive and finite");
    }
    const double left = mode_update(model, x - fd_step);
    const double right = mode_update(model, x + fd_step);
    return (right - left) / (2.0 * fd_step);
}

double map_derivative(const DensityModel& model, double x) {
    return map_derivative(model, x, 1e-5 * model.bandwidth());
}

} // namespace modeseek

#include "modeseek/modes.hpp"

#include "modeseek/errors.hpp"
#include "modeseek/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modeseek {

namespace {

// Nearest mode by distance; ties go to the lower index.
std::size_t nearest_mode(const std::vector<double>& modes, double x) {
    std::size_t best = 0;
    double best_dist = std::abs(x - modes[0]);
    for (std::size_t i = 1; i < modes.size(); ++i) {
        const double dist = std::abs(x - modes[i]);
        if (dist < best_dist) {
            best = i;
            best_dist = dist;
        }
    }
    return best;
}

} // namespace

ModeSet grid_modes_oracle(const DensityModel& model, double lo, double hi,
                          std::size_t resolution) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("oracle window must satisfy lo < hi");
    }
    if (resolution < 3) {
        throw std::invalid_argument("oracle resolution must be at least 3");
    }

    const double step = (hi - lo) / static_cast<double>(resolution - 1);
    ModeSet result;
    double prev_x = lo;
    double prev_d = density_gradient_at(model, lo);
    for (std::size_t i = 1; i < resolution; ++i) {
        const double x = lo + step * static_cast<double>(i);
        const double d = density_gradient_at(model, x);
        if (prev_d > 0.0 && d <= 0.0) {
            // Bracket holds a maximum; bisect keeping f' > 0 on the left.
            double a = prev_x;
            double b = x;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (a + b);
                if (density_gradient_at(model, mid) > 0.0) {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            const double mode = 0.5 * (a + b);
            result.modes.push_back(mode);
            result.densities.push_back(density_at(model, mode));
        }
        prev_x = x;
        prev_d = d;
    }
    return result;
}

ModeSet grid_modes_oracle(const DensityModel& model) {
    const double h = model.bandwidth();
    return grid_modes_oracle(model, model.samples().min() - 3.0 * h,
                             model.samples().max() + 3.0 * h, 4097);
}

ModeSet prune_modes(std::vector<double> estimates, const DensityModel& model,
                    double merge_radius) {
    if (estimates.empty()) {
        throw std::invalid_argument("cannot prune an empty estimate list");
    }
    if (!(merge_radius > 0.0) || !std::isfinite(merge_radius)) {
        throw std::invalid_argument("merge_radius must be positive and finite");
    }
    std::sort(estimates.begin(), estimates.end());

    ModeSet result;
    std::size_t run_begin = 0;
    for (std::size_t i = 1; i <= estimates.size(); ++i) {
        const bool run_ends = i == estimates.size() ||
                              estimates[i] - estimates[i - 1] > merge_radius;
        if (!run_ends) {
            continue;
        }
        double best = estimates[run_begin];
        double best_density = density_at(model, best);
        for (std::size_t k = run_begin + 1; k < i; ++k) {
            const double density = density_at(model, estimates[k]);
            if (density > best_density) {
                best = estimates[k];
                best_density = density;
            }
        }
        bool repelling = false;
        try {
            repelling = classify_fixed_point(model, best).stability ==
                        StabilityClass::repelling;
        } catch (const DegenerateWeightsError&) {
            // Unclassifiable representative: keep it rather than silently
            // dropping a candidate mode.
        }
        if (!repelling) {
            result.modes.push_back(best);
            result.densities.push_back(best_density);
        }
        run_begin = i;
    }
    return result;
}

ModeSet assign_clusters(const SampleSet& samples, const DensityModel& model,
                        const IterationConfig& config) {
    std::vector<std::optional<double>> endpoints(samples.size());
    std::vector<double> converged;
    converged.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Trajectory traj = run_mean_shift(model, samples.points()[i], config);
        if (traj.terminated_by == Termination::degenerate_weights) {
            continue;
        }
        endpoints[i] = traj.final_estimate();
        converged.push_back(traj.final_estimate());
    }

    ModeSet result;
    result.assignments.assign(samples.size(), std::nullopt);
    if (converged.empty()) {
        return result;
    }
    ModeSet pruned = prune_modes(std::move(converged), model, 2.0 * config.epsilon);
    result.modes = std::move(pruned.modes);
    result.densities = std::move(pruned.densities);
    if (result.modes.empty()) {
        return result;
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (endpoints[i]) {
            result.assignments[i] = nearest_mode(result.modes, *endpoints[i]);
        }
    }
    return result;
}

} // namespace modeseek

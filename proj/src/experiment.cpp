#include "modeseek/experiment.hpp"

#include "modeseek/errors.hpp"
#include "modeseek/mixture.hpp"
#include "modeseek/sample_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace modeseek {

namespace {

// Shortest decimal form that parses back to the same double; CSV stays
// locale-independent this way.
std::string format_value(double v) {
    char buf[40];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) {
        throw std::runtime_error("failed to format a floating-point value");
    }
    return std::string(buf, ptr);
}

std::ofstream open_output(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    return out;
}

void write_trajectories_csv(const std::filesystem::path& path,
                            const std::vector<StartOutcome>& outcomes) {
    std::ofstream out = open_output(path);
    out << "start,iteration,y,f_hat,f_hat_prime,step\n";
    for (const StartOutcome& outcome : outcomes) {
        const auto& steps = outcome.trajectory.steps;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            out << format_value(outcome.start) << ',' << i + 1 << ','
                << format_value(steps[i].y) << ',' << format_value(steps[i].f_hat)
                << ',' << format_value(steps[i].f_hat_prime) << ',';
            if (steps[i].step_to_next) {
                out << format_value(*steps[i].step_to_next);
            }
            out << '\n';
        }
    }
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

// Estimate after the (k-1)-th update, held at the final value once the run
// is shorter than k records.
double estimate_at(const Trajectory& traj, std::size_t k) {
    const std::size_t idx = std::min(k, traj.steps.size()) - 1;
    return traj.steps[idx].y;
}

void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<StartOutcome>& outcomes,
                       const ModeSet& modes) {
    constexpr std::size_t sample_points[] = {1, 5, 10, 20, 40, 80};
    std::ofstream out = open_output(path);
    out << "start,iterations";
    for (std::size_t k : sample_points) {
        out << ",estimate_" << k;
    }
    out << ",estimate_final,assigned_mode\n";
    for (const StartOutcome& outcome : outcomes) {
        out << format_value(outcome.start) << ','
            << outcome.trajectory.steps.size() - 1;
        for (std::size_t k : sample_points) {
            out << ',' << format_value(estimate_at(outcome.trajectory, k));
        }
        out << ',' << format_value(outcome.trajectory.final_estimate()) << ',';
        if (outcome.mode_index) {
            out << format_value(modes.modes[*outcome.mode_index]);
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

nlohmann::json outcome_to_json(const StartOutcome& outcome) {
    nlohmann::json j;
    j["start"] = outcome.start;
    j["final_estimate"] = outcome.trajectory.final_estimate();
    j["iterations"] = outcome.trajectory.steps.size() - 1;
    j["terminated_by"] = to_string(outcome.trajectory.terminated_by);
    if (outcome.monotone_tail) {
        j["monotone_tail"] = {
            {"tail_start", outcome.monotone_tail->tail_start},
            {"direction", to_string(outcome.monotone_tail->direction)},
            {"is_fully_monotone", outcome.monotone_tail->is_fully_monotone},
        };
    } else {
        j["monotone_tail"] = nullptr;
    }
    if (outcome.fixed_point) {
        j["fixed_point"] = {
            {"location", outcome.fixed_point->location},
            {"map_derivative_abs", outcome.fixed_point->map_derivative_abs},
            {"stability_class", to_string(outcome.fixed_point->stability)},
            {"gradient_at_limit", outcome.fixed_point->gradient_at_limit},
        };
    } else {
        j["fixed_point"] = nullptr;
    }
    auto opt_bool = [](const std::optional<bool>& b) {
        return b ? nlohmann::json(*b) : nlohmann::json(nullptr);
    };
    j["density_ascent"] = opt_bool(outcome.density_ascent);
    j["step_inequality"] = opt_bool(outcome.step_inequality);
    j["gradient_at_limit"] = opt_bool(outcome.gradient_at_limit);
    if (outcome.mode_index) {
        j["mode_index"] = *outcome.mode_index;
    } else {
        j["mode_index"] = nullptr;
    }
    return j;
}

void write_diagnostics_json(const std::filesystem::path& path,
                            const ExperimentConfig& config,
                            const ExperimentResult& result) {
    nlohmann::json j;
    j["kernel"] = config.kernel_name;
    j["bandwidth"] = config.bandwidth;
    j["epsilon"] = config.epsilon;
    j["max_iterations"] = config.max_iterations;
    j["sample_count"] = result.samples.size();
    if (const auto* mixture = std::get_if<MixtureSpec>(&config.data)) {
        j["data"] = {
            {"type", "mixture"},   {"seed", mixture->seed},
            {"n_pos", mixture->n_pos}, {"n_neg", mixture->n_neg},
            {"mu_pos", mixture->mu_pos}, {"mu_neg", mixture->mu_neg},
            {"sigma", mixture->sigma},
        };
    } else {
        j["data"] = {
            {"type", "file"},
            {"path", std::get<FileSource>(config.data).path.string()},
        };
    }
    nlohmann::json modes = nlohmann::json::array();
    for (std::size_t i = 0; i < result.modes.modes.size(); ++i) {
        modes.push_back({{"location", result.modes.modes[i]},
                         {"density", result.modes.densities[i]}});
    }
    j["modes"] = std::move(modes);
    nlohmann::json starts = nlohmann::json::array();
    for (const StartOutcome& outcome : result.outcomes) {
        starts.push_back(outcome_to_json(outcome));
    }
    j["starts"] = std::move(starts);

    std::ofstream out = open_output(path);
    out << j.dump(2) << '\n';
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

SampleSet resolve_samples(const ExperimentConfig& config) {
    if (const auto* mixture = std::get_if<MixtureSpec>(&config.data)) {
        return generate_mixture(mixture->seed, mixture->n_pos, mixture->n_neg,
                                mixture->mu_pos, mixture->mu_neg, mixture->sigma);
    }
    return load_samples(std::get<FileSource>(config.data).path);
}

std::size_t nearest_mode_index(const std::vector<double>& modes, double x) {
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

ExperimentResult run_experiment(const ExperimentConfig& config) {
    SampleSet samples = resolve_samples(config);
    DensityModel model(samples, find_profile(config.kernel_name),
                       config.bandwidth);

    std::vector<double> starts;
    if (config.starts_all_samples) {
        starts.assign(samples.points().begin(), samples.points().end());
    } else {
        starts = config.starts;
    }
    if (starts.empty()) {
        throw std::invalid_argument("experiment needs at least one start");
    }
    for (double s : starts) {
        if (!std::isfinite(s)) {
            throw std::invalid_argument("starts must be finite");
        }
    }

    const IterationConfig iter_config{config.epsilon, config.max_iterations};
    const double gradient_tol = default_gradient_tolerance(model);
    std::vector<StartOutcome> outcomes;
    outcomes.reserve(starts.size());
    std::vector<double> endpoints;
    endpoints.reserve(starts.size());
    for (double start : starts) {
        StartOutcome outcome;
        outcome.start = start;
        outcome.trajectory = run_mean_shift(model, start, iter_config);
        const Trajectory& traj = outcome.trajectory;
        if (traj.steps.size() >= 2) {
            outcome.monotone_tail = detect_monotone_tail(traj);
            outcome.density_ascent = check_density_ascent(traj).ok;
            const auto records = check_step_inequality(traj, model);
            outcome.step_inequality =
                std::all_of(records.begin(), records.end(),
                            [](const StepInequalityRecord& r) { return r.holds; });
        }
        if (traj.terminated_by == Termination::converged) {
            outcome.gradient_at_limit =
                check_gradient_at_limit(traj, model, gradient_tol);
        }
        if (traj.terminated_by != Termination::degenerate_weights) {
            try {
                outcome.fixed_point =
                    classify_fixed_point(model, traj.final_estimate());
            } catch (const DegenerateWeightsError&) {
                // Endpoint sits where the map's difference quotient is
                // undefined; leave the classification empty.
            }
            endpoints.push_back(traj.final_estimate());
        }
        outcomes.push_back(std::move(outcome));
    }

    ModeSet modes;
    if (!endpoints.empty()) {
        ModeSet pruned =
            prune_modes(std::move(endpoints), model, 2.0 * config.epsilon);
        modes.modes = std::move(pruned.modes);
        modes.densities = std::move(pruned.densities);
    }
    if (!modes.modes.empty()) {
        for (StartOutcome& outcome : outcomes) {
            if (outcome.trajectory.terminated_by !=
                Termination::degenerate_weights) {
                outcome.mode_index = nearest_mode_index(
                    modes.modes, outcome.trajectory.final_estimate());
            }
        }
    }
    if (config.starts_all_samples) {
        modes.assignments.assign(samples.size(), std::nullopt);
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            modes.assignments[i] = outcomes[i].mode_index;
        }
    }

    ExperimentResult result{std::move(samples), std::move(outcomes),
                            std::move(modes)};
    if (!config.outputs.trajectories.empty()) {
        write_trajectories_csv(config.outputs.trajectories, result.outcomes);
    }
    if (!config.outputs.summary.empty()) {
        write_summary_csv(config.outputs.summary, result.outcomes, result.modes);
    }
    if (!config.outputs.diagnostics.empty()) {
        write_diagnostics_json(config.outputs.diagnostics, config, result);
    }
    return result;
}

} // namespace modeseek

#pragma once

#include "modeseek/density.hpp"
#include "modeseek/diagnostics.hpp"
#include "modeseek/meanshift.hpp"
#include "modeseek/modes.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace modeseek {

// Seed of the bundled two-component reference fixture (500 draws around +3,
// 500 around -3, unit variance).
inline constexpr std::uint64_t kDefaultMixtureSeed = 20260822;

struct MixtureSpec {
    std::uint64_t seed = kDefaultMixtureSeed;
    std::size_t n_pos = 500;
    std::size_t n_neg = 500;
    double mu_pos = 3.0;
    double mu_neg = -3.0;
    double sigma = 1.0;
};

struct FileSource {
    std::filesystem::path path;
};

// Any empty path suppresses that output file.
struct OutputPaths {
    std::filesystem::path trajectories;
    std::filesystem::path diagnostics;
    std::filesystem::path summary;
};

struct ExperimentConfig {
    std::string kernel_name = "gaussian";
    double bandwidth = 1.0;
    double epsilon = 5e-4;
    std::size_t max_iterations = 10'000;
    std::variant<MixtureSpec, FileSource> data = MixtureSpec{};
    std::vector<double> starts;     // ignored when starts_all_samples is set
    bool starts_all_samples = false;
    OutputPaths outputs;
};

// Everything recorded about one start: the trajectory, the five checks (each
// empty when inapplicable to that run), and the pruned mode it landed in.
struct StartOutcome {
    double start = 0.0;
    Trajectory trajectory;
    std::optional<MonotoneTailReport> monotone_tail;
    std::optional<FixedPointReport> fixed_point;
    std::optional<bool> density_ascent;
    std::optional<bool> step_inequality;
    std::optional<bool> gradient_at_limit;
    std::optional<std::size_t> mode_index;
};

struct ExperimentResult {
    SampleSet samples;
    std::vector<StartOutcome> outcomes;
    ModeSet modes;
};

// Resolves the data source, runs mean shift from every start, evaluates the
// per-start checks, prunes the endpoints into a mode list, and writes the
// requested output files.
ExperimentResult run_experiment(const ExperimentConfig& config);

} // namespace modeseek

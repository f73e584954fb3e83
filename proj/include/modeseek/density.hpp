#pragma once

#include "modeseek/kernel.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace modeseek {

// Immutable collection of 1-D sample points. The caller's ordering is kept
// for I/O and per-sample bookkeeping; an ascending copy is cached alongside,
// and every kernel sum iterates that ascending view, so numeric results do
// not depend on how the input happened to be ordered.
class SampleSet {
public:
    explicit SampleSet(std::vector<double> points);

    std::span<const double> points() const noexcept { return points_; }
    std::span<const double> ascending() const noexcept { return ascending_; }
    std::size_t size() const noexcept { return points_.size(); }
    double min() const noexcept { return ascending_.front(); }
    double max() const noexcept { return ascending_.back(); }

    // Largest pairwise distance; in one dimension this is max() - min(),
    // and 0 exactly when all points coincide.
    double d_max() const noexcept { return ascending_.back() - ascending_.front(); }

private:
    std::vector<double> points_;
    std::vector<double> ascending_;
};

// A kernel density estimate: samples, profile, and bandwidth h > 0.
class DensityModel {
public:
    DensityModel(SampleSet samples, KernelProfile profile, double bandwidth);

    const SampleSet& samples() const noexcept { return samples_; }
    const KernelProfile& profile() const noexcept { return profile_; }
    double bandwidth() const noexcept { return bandwidth_; }

private:
    SampleSet samples_;
    KernelProfile profile_;
    double bandwidth_;
};

// f(x) = (c / (n h)) * sum_i k(((x - x_i) / h)^2).
double density_at(const DensityModel& model, double x);

// Analytic derivative f'(x) = (2 c / (n h^3)) * sum_i g(((x - x_i) / h)^2) * (x_i - x);
// positive where the density increases with x.
double density_gradient_at(const DensityModel& model, double x);

} // namespace modeseek

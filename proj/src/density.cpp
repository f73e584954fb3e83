#include "modeseek/density.hpp"

#include "modeseek/detail/accumulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace modeseek {

SampleSet::SampleSet(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty()) {
        throw std::invalid_argument("sample set must contain at least one point");
    }
    for (double x : points_) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("sample values must be finite");
        }
    }
    ascending_ = points_;
    std::sort(ascending_.begin(), ascending_.end());
}

DensityModel::DensityModel(SampleSet samples, KernelProfile profile, double bandwidth)
    : samples_(std::move(samples)), profile_(std::move(profile)), bandwidth_(bandwidth) {
    if (!std::isfinite(bandwidth_) || bandwidth_ <= 0.0) {
        throw std::invalid_argument("bandwidth must be positive and finite");
    }
    if (!profile_.k || !profile_.g) {
        throw std::invalid_argument("kernel profile must define both k and g");
    }
}

double density_at(const DensityModel& model, double x) {
    const double h = model.bandwidth();
    const KernelProfile& profile = model.profile();
    const double sum = detail::sample_sum(model.samples().ascending(), [&](double xi) {
        const double u = (x - xi) / h;
        return profile.k(u * u);
    });
    const double n = static_cast<double>(model.samples().size());
    // Dividing the sum first keeps n identical samples exact: sum / (n h)
    // reduces to k(0) without a rounded prefactor.
    return profile.norm_const_1d * (sum / (n * h));
}

double density_gradient_at(const DensityModel& model, double x) {
    const double h = model.bandwidth();
    const KernelProfile& profile = model.profile();
    const double sum = detail::sample_sum(model.samples().ascending(), [&](double xi) {
        const double u = (x - xi) / h;
        return profile.g(u * u) * (xi - x);
    });
    const double n = static_cast<double>(model.samples().size());
    return 2.0 * profile.norm_const_1d * (sum / (n * h * h * h));
}

} // namespace modeseek

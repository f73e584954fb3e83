#include "modeseek/kernel.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace modeseek {

namespace {

void require_profile_arg(double x) {
    if (!(x >= 0.0)) {
        throw std::domain_error("profile argument must be nonnegative, got " +
                                std::to_string(x));
    }
}

struct Registry {
    std::mutex mutex;
    std::map<std::string, KernelProfile> profiles;

    Registry() {
        profiles.emplace("gaussian", gaussian_profile());
        profiles.emplace("epanechnikov", epanechnikov_profile());
    }
};

Registry& registry() {
    static Registry instance;
    return instance;
}

} // namespace

double profile_eval(const KernelProfile& profile, double x) {
    require_profile_arg(x);
    return profile.k(x);
}

double g_eval(const KernelProfile& profile, double x) {
    require_profile_arg(x);
    return profile.g(x);
}

KernelProfile gaussian_profile() {
    KernelProfile p;
    p.name = "gaussian";
    p.k = [](double x) { return std::exp(-0.5 * x); };
    p.g = [](double x) { return 0.5 * std::exp(-0.5 * x); };
    p.norm_const_1d = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    p.strictly_decreasing_g = true;
    p.convex_profile = true;
    return p;
}

KernelProfile epanechnikov_profile() {
    KernelProfile p;
    p.name = "epanechnikov";
    p.k = [](double x) { return x <= 1.0 ? 1.0 - x : 0.0; };
    // k has a corner at x = 1; g there takes the outer branch so samples
    // exactly one bandwidth away carry no weight.
    p.g = [](double x) { return x < 1.0 ? 1.0 : 0.0; };
    p.norm_const_1d = 0.75;
    p.strictly_decreasing_g = false;
    p.convex_profile = true;
    return p;
}

KernelProfile find_profile(const std::string& name) {
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    auto it = reg.profiles.find(name);
    if (it == reg.profiles.end()) {
        throw std::invalid_argument("unknown kernel profile: " + name);
    }
    return it->second;
}

void register_profile(KernelProfile profile) {
    if (profile.name.empty()) {
        throw std::invalid_argument("kernel profile must have a name");
    }
    if (!profile.k || !profile.g) {
        throw std::invalid_argument("kernel profile must define both k and g");
    }
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    reg.profiles.insert_or_assign(profile.name, std::move(profile));
}

std::vector<std::string> registered_profile_names() {
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    std::vector<std::string> names;
    names.reserve(reg.profiles.size());
    for (const auto& [name, profile] : reg.profiles) {
        names.push_back(name);
    }
    return names;
}

} // namespace modeseek

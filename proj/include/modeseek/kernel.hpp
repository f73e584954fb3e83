#pragma once

#include <functional>
#include <string>
#include <vector>

namespace modeseek {

// A radially symmetric kernel K(x) = c * k(x^2), described by its profile k,
// the negated profile derivative g = -k', and capability flags that gate
// which convergence guarantees hold. Flags are declared, never inferred.
struct KernelProfile {
    std::string name;
    std::function<double(double)> k;   // profile on [0, inf)
    std::function<double(double)> g;   // -k' on [0, inf)
    double norm_const_1d = 0.0;        // c making the 1-D kernel integrate to 1
    bool strictly_decreasing_g = false;
    bool convex_profile = false;
};

// Profile value k(x). Throws std::domain_error for negative x.
double profile_eval(const KernelProfile& profile, double x);

// Weight value g(x) = -k'(x). Throws std::domain_error for negative x.
double g_eval(const KernelProfile& profile, double x);

KernelProfile gaussian_profile();
KernelProfile epanechnikov_profile();

// Lookup by name; "gaussian" and "epanechnikov" are always present.
// Throws std::invalid_argument for unknown names.
KernelProfile find_profile(const std::string& name);

// Adds or replaces a named profile in the registry.
void register_profile(KernelProfile profile);

std::vector<std::string> registered_profile_names();

} // namespace modeseek

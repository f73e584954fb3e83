#pragma once

#include <stdexcept>
#include <string>

namespace modeseek {

// Thrown when every kernel weight vanishes at an evaluation point. Compactly
// supported profiles do this once the point is more than one bandwidth from
// every sample; the update map is undefined there.
class DegenerateWeightsError : public std::runtime_error {
public:
    explicit DegenerateWeightsError(double where)
        : std::runtime_error("all kernel weights vanish at x = " + std::to_string(where)),
          location_(where) {}

    double location() const noexcept { return location_; }

private:
    double location_;
};

// Thrown when a diagnostic is asked about a trajectory it does not apply to,
// e.g. a terminal-gradient check on a run that never converged.
class InapplicableCheckError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace modeseek

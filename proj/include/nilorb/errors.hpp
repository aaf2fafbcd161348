#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilorb {

/// Caller supplied something outside an operation's domain.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size budget (e.g. polynomial term count) was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TrialStats {
    std::size_t trials = 0;
    std::size_t screened_out = 0;  // rejected by the modular screen
    long omega_bound = 0;
    std::size_t g2_dim = 0;
};

/// Every random trial failed to produce h in [x, g(-2)]. With high
/// probability the weighted diagram does not belong to a nilpotent orbit.
class ProbablyInvalidDiagram : public std::runtime_error {
public:
    ProbablyInvalidDiagram(const std::string& what, TrialStats stats)
        : std::runtime_error(what), stats_(stats) {}
    const TrialStats& stats() const noexcept { return stats_; }

private:
    TrialStats stats_;
};

}  // namespace nilorb

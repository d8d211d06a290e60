#pragma once

#include <stdexcept>
#include <string>

namespace magspec {

// Error taxonomy shared by all modules. Every failure mode carries a
// distinct type so callers (and the CLI exit-code mapping) can tell
// validation problems from data inconsistencies.

struct rank_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct unsupported_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed or contradictory numerical input (ground-state tables etc.).
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct inconsistent_spectrum_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_gram_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degenerate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct convergence_error : std::runtime_error {
    convergence_error(const std::string& what, double residual)
        : std::runtime_error(what), residual(residual) {}
    double residual;
};

} // namespace magspec

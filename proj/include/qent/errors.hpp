// errors.hpp
// Exception types shared across the library. Callers that need exit-code
// mapping (the CLI) translate these to process status.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qent {

// A state object violates its own invariants (e.g. unnormalized amplitudes).
struct InvalidStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request exceeds a hard memory/size guard (qubit caps, enumeration guards).
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative solver did not reach the requested residual.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual(residual) {}
    double residual;
};

// gcd(a, N) != 1 in order finding; the gcd itself is already a factor.
struct NonCoprimeError : std::invalid_argument {
    NonCoprimeError(const std::string& what, std::uint64_t common_factor)
        : std::invalid_argument(what), common_factor(common_factor) {}
    std::uint64_t common_factor;
};

}  // namespace qent

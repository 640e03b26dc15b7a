#pragma once

#include <stdexcept>
#include <string>

namespace sptw {

// Hilbert-space dimension above the configured cap, or a request that would
// overflow it.  CLI maps this to exit code 3.
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated an operation's contract (non-Hermitian input, broken
// group table, non-unitary gate, ...).  CLI maps this to exit code 2.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative solver failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
    double best_residual;
    ConvergenceError(const std::string& msg, double res)
        : std::runtime_error(msg), best_residual(res) {}
};

// A quantity is ill-defined for the given state (e.g. correlation function
// on a degenerate ground space without an explicit vector choice).
struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed configuration or input file.  CLI maps this to exit code 3.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sptw

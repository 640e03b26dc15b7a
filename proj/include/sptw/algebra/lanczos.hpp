#pragma once

#include <cstdint>
#include <vector>

#include "sptw/algebra/sparse.hpp"

namespace sptw::alg {

struct LanczosOptions {
    int basis_size = 0;      // 0 = auto: min(dim, max(2k+16, 32))
    int max_restarts = 500;
    double tol = 1e-10;      // relative residual target during iteration
    double final_tol = 1e-8; // contract: ||Hv - lv|| <= final_tol * ||H||_est
};

struct LanczosResult {
    std::vector<double> values;                  // ascending, size k
    std::vector<std::vector<cdouble>> vectors;   // orthonormal
    double norm_estimate = 0.0;                  // spectral-radius estimate
    double max_residual = 0.0;
};

// Thick-restart Lanczos with full reorthogonalization.  Deterministic for a
// fixed seed.  Throws ConvergenceError (carrying the best residual) if the
// final residual contract cannot be met within max_restarts.
LanczosResult lanczos_lowest(const LinearOperator& op, int k, std::uint64_t seed,
                             const LanczosOptions& opts = {});

}  // namespace sptw::alg

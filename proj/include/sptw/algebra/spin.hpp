#pragma once

#include "sptw/algebra/complex_matrix.hpp"

namespace sptw::alg {

struct SpinMatrices {
    ComplexMatrix sx, sy, sz;
};

// Irreducible su(2) generators on C^d in the weight basis:
// sz = diag(s, s-1, ..., -s) with s = (d-1)/2, [sx, sy] = i sz cyclically.
// d < 2 raises ContractError.
SpinMatrices spin_matrices(int d);

// Pauli matrices (d = 2 spin matrices times 2).
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// exp(i a) for Hermitian a, via spectral decomposition.
ComplexMatrix hermitian_exp_i(const ComplexMatrix& a);

}  // namespace sptw::alg

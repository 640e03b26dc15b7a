#pragma once

#include <vector>

#include "sptw/algebra/complex_matrix.hpp"

namespace sptw::alg {

struct EigResult {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

// Dense Hermitian eigensolver: Householder tridiagonalization followed by
// implicit-shift QL.  Input must be Hermitian to 1e-12 * max(1, |A|_max),
// otherwise ContractError.
EigResult hermitian_eig(const ComplexMatrix& a);

// Eigenvalues of a real symmetric tridiagonal matrix (d = diagonal,
// e = subdiagonal, e.size() == d.size() - 1).  If z is non-null it must hold
// an n x n matrix whose columns get rotated along (pass identity to obtain
// the eigenvector matrix).  Results ascending; z columns permuted to match.
void tridiag_eig(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z);

// Singular value decomposition by one-sided Jacobi: a = U diag(s) V^dagger
// with s descending.  Deterministic phase convention: in each column of U the
// first component of magnitude > 1e-12 * s_max is made real positive.
struct SvdResult {
    ComplexMatrix u;
    std::vector<double> s;
    ComplexMatrix v;
};
SvdResult svd(const ComplexMatrix& a);

// Largest singular value.
double operator_norm(const ComplexMatrix& a);

}  // namespace sptw::alg

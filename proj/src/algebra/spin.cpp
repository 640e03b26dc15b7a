#include "sptw/algebra/spin.hpp"

#include <cmath>

#include "sptw/algebra/eig.hpp"
#include "sptw/errors.hpp"

namespace sptw::alg {

SpinMatrices spin_matrices(int d) {
    if (d < 2) throw ContractError("spin_matrices: need d >= 2");
    const double s = 0.5 * (d - 1);
    ComplexMatrix sp(d, d);  // raising operator
    for (int k = 0; k + 1 < d; ++k) {
        const double m = s - (k + 1);
        sp(k, k + 1) = std::sqrt(s * (s + 1) - m * (m + 1));
    }
    const ComplexMatrix sm = sp.adjoint();
    SpinMatrices out;
    out.sx = 0.5 * (sp + sm);
    out.sy = cdouble{0.0, -0.5} * (sp - sm);
    out.sz = ComplexMatrix(d, d);
    for (int k = 0; k < d; ++k) out.sz(k, k) = s - k;
    return out;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m(0, 1) = cdouble{0.0, -1.0};
    m(1, 0) = cdouble{0.0, 1.0};
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix hermitian_exp_i(const ComplexMatrix& a) {
    EigResult e = hermitian_eig(a);
    const int n = a.rows();
    ComplexMatrix out(n, n);
    for (int k = 0; k < n; ++k) {
        const cdouble ph = std::exp(cdouble{0.0, e.values[k]});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += ph * e.vectors(i, k) * std::conj(e.vectors(j, k));
    }
    return out;
}

}  // namespace sptw::alg

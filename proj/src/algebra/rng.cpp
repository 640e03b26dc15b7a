#include "sptw/algebra/rng.hpp"

namespace sptw::alg {

ComplexMatrix Rng::unitary(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cdouble{gaussian(), gaussian()};
    // modified Gram-Schmidt on columns
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            cdouble d = 0.0;
            for (int r = 0; r < n; ++r) d += std::conj(m(r, k)) * m(r, j);
            for (int r = 0; r < n; ++r) m(r, j) -= d * m(r, k);
        }
        double nn = 0.0;
        for (int r = 0; r < n; ++r) nn += std::norm(m(r, j));
        const double inv = 1.0 / std::sqrt(nn);
        for (int r = 0; r < n; ++r) m(r, j) *= inv;
    }
    return m;
}

}  // namespace sptw::alg

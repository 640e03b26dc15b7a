#include "sptw/algebra/eig.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "sptw/errors.hpp"

namespace sptw::alg {

namespace {

// Implicit-shift QL on a real symmetric tridiagonal matrix.  The rotate
// callback receives (column index i, c, s) for every applied plane rotation
// on columns (i, i+1).
void tqli(std::vector<double>& d, std::vector<double>& e,
          const std::function<void(int, double, double)>& rotate) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    e.push_back(0.0);  // sentinel
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 80)
                    throw ConvergenceError("tqli: too many QL iterations", std::abs(e[l]));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    rotate(i, c, s);
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    e.pop_back();
}

}  // namespace

void tridiag_eig(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z) {
    const int n = static_cast<int>(d.size());
    auto rotate = [&](int i, double c, double s) {
        if (!z) return;
        for (int k = 0; k < n; ++k) {
            const double f = (*z)[static_cast<std::size_t>(k) * n + i + 1];
            const double g = (*z)[static_cast<std::size_t>(k) * n + i];
            (*z)[static_cast<std::size_t>(k) * n + i + 1] = s * g + c * f;
            (*z)[static_cast<std::size_t>(k) * n + i] = c * g - s * f;
        }
    };
    tqli(d, e, rotate);
    // sort ascending
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
    std::vector<double> ds(n);
    for (int i = 0; i < n; ++i) ds[i] = d[idx[i]];
    d = ds;
    if (z) {
        std::vector<double> zs(z->size());
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                zs[static_cast<std::size_t>(k) * n + j] = (*z)[static_cast<std::size_t>(k) * n + idx[j]];
        *z = zs;
    }
}

EigResult hermitian_eig(const ComplexMatrix& a) {
    const int n = a.rows();
    if (n != a.cols()) throw ContractError("hermitian_eig: matrix not square");
    const double htol = 1e-12 * std::max(1.0, a.max_abs());
    if (!a.is_hermitian(htol)) throw ContractError("hermitian_eig: input not Hermitian");

    // work on the symmetrized copy
    ComplexMatrix b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    ComplexMatrix q = ComplexMatrix::identity(n);

    // Householder reduction to tridiagonal form
    for (int k = 0; k + 2 < n; ++k) {
        const int m = n - k - 1;  // length of the column below the diagonal
        double xnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm2 += std::norm(b(i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;
        const cdouble alpha = b(k + 1, k);
        const cdouble phase = (std::abs(alpha) > 0.0) ? alpha / std::abs(alpha) : cdouble{1.0};
        const cdouble beta = -phase * xnorm;
        std::vector<cdouble> v(m);
        for (int i = 0; i < m; ++i) v[i] = b(k + 1 + i, k);
        v[0] -= beta;
        const double vn = vec_norm(v);
        if (vn <= 1e-300) continue;
        for (auto& x : v) x /= vn;

        // rank-2 update of the trailing block: B <- (1-2vv*) B (1-2vv*)
        std::vector<cdouble> p(m, 0.0);
        for (int i = 0; i < m; ++i) {
            cdouble s = 0.0;
            for (int j = 0; j < m; ++j) s += b(k + 1 + i, k + 1 + j) * v[j];
            p[i] = s;
        }
        const double c2 = std::real(vec_dot(v, p));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                b(k + 1 + i, k + 1 + j) += -2.0 * v[i] * std::conj(p[j]) -
                                           2.0 * p[i] * std::conj(v[j]) +
                                           4.0 * c2 * v[i] * std::conj(v[j]);
        b(k + 1, k) = beta;
        b(k, k + 1) = std::conj(beta);
        for (int i = k + 2; i < n; ++i) {
            b(i, k) = 0.0;
            b(k, i) = 0.0;
        }
        // accumulate Q <- Q (1-2vv*)
        for (int r = 0; r < n; ++r) {
            cdouble w = 0.0;
            for (int j = 0; j < m; ++j) w += q(r, k + 1 + j) * v[j];
            for (int j = 0; j < m; ++j) q(r, k + 1 + j) -= 2.0 * w * std::conj(v[j]);
        }
    }

    // make the subdiagonal real by a diagonal phase similarity
    std::vector<double> d(n), e(std::max(0, n - 1));
    std::vector<cdouble> u(n, 1.0);
    for (int i = 0; i + 1 < n; ++i) {
        const cdouble s = b(i + 1, i);
        const double r = std::abs(s);
        e[i] = r;
        u[i + 1] = (r > 0.0) ? u[i] * std::conj(s / r) : u[i];
    }
    for (int i = 0; i < n; ++i) d[i] = std::real(b(i, i));
    for (int j = 0; j < n; ++j) {
        const cdouble f = std::conj(u[j]);
        for (int r = 0; r < n; ++r) q(r, j) *= f;
    }

    auto rotate = [&](int i, double c, double s) {
        for (int k = 0; k < n; ++k) {
            const cdouble f = q(k, i + 1);
            const cdouble g = q(k, i);
            q(k, i + 1) = s * g + c * f;
            q(k, i) = c * g - s * f;
        }
    };
    tqli(d, e, rotate);

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return d[x] < d[y]; });
    EigResult res;
    res.values.resize(n);
    res.vectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        res.values[j] = d[idx[j]];
        for (int r = 0; r < n; ++r) res.vectors(r, j) = q(r, idx[j]);
    }
    return res;
}

SvdResult svd(const ComplexMatrix& a) {
    if (a.rows() < a.cols()) {
        SvdResult t = svd(a.adjoint());
        return {t.v, t.s, t.u};
    }
    const int m = a.rows(), n = a.cols();
    ComplexMatrix w = a;
    ComplexMatrix v = ComplexMatrix::identity(n);
    auto col_dot = [&](int i, int j) {  // w_i^dagger w_j
        cdouble s = 0.0;
        for (int r = 0; r < m; ++r) s += std::conj(w(r, i)) * w(r, j);
        return s;
    };
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool converged = true;
        for (int i = 0; i < n - 1; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const cdouble g = col_dot(i, j);
                double aa = 0.0, bb = 0.0;
                for (int r = 0; r < m; ++r) {
                    aa += std::norm(w(r, i));
                    bb += std::norm(w(r, j));
                }
                const double ag = std::abs(g);
                if (ag <= 1e-30 + 1e-15 * std::sqrt(aa * bb)) continue;
                converged = false;
                const cdouble p = g / ag;
                const double zeta = (bb - aa) / (2.0 * ag);
                const double t = std::copysign(1.0, zeta) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int r = 0; r < m; ++r) {
                    const cdouble wi = w(r, i), wj = w(r, j);
                    w(r, i) = c * wi - s * std::conj(p) * wj;
                    w(r, j) = s * p * wi + c * wj;
                }
                for (int r = 0; r < n; ++r) {
                    const cdouble vi = v(r, i), vj = v(r, j);
                    v(r, i) = c * vi - s * std::conj(p) * vj;
                    v(r, j) = s * p * vi + c * vj;
                }
            }
        }
        if (converged) break;
    }
    std::vector<double> s(n);
    for (int j = 0; j < n; ++j) {
        double nn = 0.0;
        for (int r = 0; r < m; ++r) nn += std::norm(w(r, j));
        s[j] = std::sqrt(nn);
    }
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return s[x] > s[y]; });
    SvdResult res;
    res.s.resize(n);
    res.u = ComplexMatrix(m, n);
    res.v = ComplexMatrix(n, n);
    const double smax = (n > 0) ? s[idx[0]] : 0.0;
    for (int j = 0; j < n; ++j) {
        const int c = idx[j];
        res.s[j] = s[c];
        if (s[c] > 1e-300) {
            // phase convention: first significant component of u_j real positive
            cdouble ph = 1.0;
            for (int r = 0; r < m; ++r) {
                const cdouble x = w(r, c) / s[c];
                if (std::abs(x) > 1e-12) {
                    ph = std::conj(x / std::abs(x));
                    break;
                }
            }
            for (int r = 0; r < m; ++r) res.u(r, j) = ph * w(r, c) / s[c];
            for (int r = 0; r < n; ++r) res.v(r, j) = ph * v(r, c);
        } else {
            for (int r = 0; r < n; ++r) res.v(r, j) = v(r, c);
        }
    }
    (void)smax;
    return res;
}

double operator_norm(const ComplexMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    return svd(a).s[0];
}

}  // namespace sptw::alg

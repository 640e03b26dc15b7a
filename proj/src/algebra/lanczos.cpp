#include "sptw/algebra/lanczos.hpp"

#include <algorithm>
#include <cmath>

#include "sptw/algebra/eig.hpp"
#include "sptw/algebra/rng.hpp"
#include "sptw/errors.hpp"

namespace sptw::alg {

namespace {

// two-pass modified Gram-Schmidt of w against locked + basis[0..count-1]
void reorthogonalize(std::vector<cdouble>& w,
                     const std::vector<std::vector<cdouble>>& locked,
                     const std::vector<std::vector<cdouble>>& basis, int count) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& l : locked) {
            const cdouble d = vec_dot(l, w);
            vec_axpy(-d, l, w);
        }
        for (int i = 0; i < count; ++i) {
            const cdouble d = vec_dot(basis[i], w);
            vec_axpy(-d, basis[i], w);
        }
    }
}

LanczosResult dense_fallback(const LinearOperator& op, int k) {
    const int n = static_cast<int>(op.dim());
    ComplexMatrix h(n, n);
    std::vector<cdouble> e(n, 0.0), col(n);
    for (int j = 0; j < n; ++j) {
        e[j] = 1.0;
        op.apply(e, col);
        e[j] = 0.0;
        for (int i = 0; i < n; ++i) h(i, j) = col[i];
    }
    // symmetrize roundoff before the strict Hermiticity gate
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const cdouble v = 0.5 * (h(i, j) + std::conj(h(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    EigResult eg = hermitian_eig(h);
    LanczosResult res;
    for (int i = 0; i < k; ++i) {
        res.values.push_back(eg.values[i]);
        std::vector<cdouble> v(n);
        for (int r = 0; r < n; ++r) v[r] = eg.vectors(r, i);
        res.vectors.push_back(std::move(v));
    }
    res.norm_estimate = std::max(std::abs(eg.values.front()), std::abs(eg.values.back()));
    return res;
}

struct SinglePair {
    double value = 0.0;
    std::vector<cdouble> vector;
    double residual = 0.0;
    double norm_estimate = 0.0;
};

// Thick-restart Lanczos for the lowest eigenpair of op restricted to the
// orthogonal complement of `locked`.  Degenerate multiplicities are handled by
// the caller via sequential deflation: each call sees one fewer copy.
SinglePair lowest_deflated(const LinearOperator& op, Rng& rng,
                           const std::vector<std::vector<cdouble>>& locked,
                           const LanczosOptions& opts) {
    const std::int64_t dim = op.dim();
    const int m = opts.basis_size > 0
                      ? static_cast<int>(std::min<std::int64_t>(dim, opts.basis_size))
                      : static_cast<int>(std::min<std::int64_t>(dim, 40));

    std::vector<std::vector<cdouble>> basis(m);
    std::vector<double> theta;     // kept Ritz values (thick-restart block)
    std::vector<double> coupling;  // arrow couplings
    int nkeep = 0;

    auto fresh_vector = [&]() { return rng.complex_vector(static_cast<std::size_t>(dim)); };

    std::vector<cdouble> r = fresh_vector();
    double norm_est = 0.0;
    double best_residual = 1e300;

    for (int restart = 0; restart < opts.max_restarts; ++restart) {
        reorthogonalize(r, locked, basis, nkeep);
        double rn = vec_norm(r);
        while (rn <= 1e-12) {  // direction exhausted: reseed
            r = fresh_vector();
            reorthogonalize(r, locked, basis, nkeep);
            rn = vec_norm(r);
        }
        vec_scale(1.0 / rn, r);
        basis[nkeep] = r;

        std::vector<double> alpha(m, 0.0), beta(m, 0.0);
        std::vector<cdouble> w(static_cast<std::size_t>(dim));
        for (int j = nkeep; j < m; ++j) {
            op.apply(basis[j], w);
            alpha[j] = std::real(vec_dot(basis[j], w));
            reorthogonalize(w, locked, basis, j + 1);
            beta[j] = vec_norm(w);
            if (j + 1 < m) {
                if (beta[j] <= 1e-12) {
                    std::vector<cdouble> f = fresh_vector();
                    reorthogonalize(f, locked, basis, j + 1);
                    double fn = vec_norm(f);
                    while (fn <= 1e-12) {
                        f = fresh_vector();
                        reorthogonalize(f, locked, basis, j + 1);
                        fn = vec_norm(f);
                    }
                    vec_scale(1.0 / fn, f);
                    basis[j + 1] = std::move(f);
                    beta[j] = 0.0;
                } else {
                    basis[j + 1] = w;
                    vec_scale(1.0 / beta[j], basis[j + 1]);
                }
            }
        }
        const double beta_last = beta[m - 1];
        if (beta_last > 1e-12) {
            r = w;
            vec_scale(1.0 / beta_last, r);
        } else {
            r = fresh_vector();
        }

        // projected matrix: arrowhead over the kept block + tridiagonal tail
        ComplexMatrix t(m, m);
        for (int i = 0; i < nkeep; ++i) {
            t(i, i) = theta[i];
            t(i, nkeep) = coupling[i];
            t(nkeep, i) = coupling[i];
        }
        for (int i = nkeep; i < m; ++i) {
            t(i, i) = alpha[i];
            if (i + 1 < m) {
                t(i, i + 1) = beta[i];
                t(i + 1, i) = beta[i];
            }
        }
        EigResult te = hermitian_eig(t);
        norm_est = std::max({norm_est, std::abs(te.values.front()), std::abs(te.values.back())});
        const double gate = opts.tol * std::max(norm_est, 1e-30);
        const double resid0 = std::abs(beta_last) * std::abs(te.vectors(m - 1, 0));
        best_residual = std::min(best_residual, resid0);

        const int nkeep_new = (resid0 <= gate) ? 1 : std::min(10, m - 4);
        std::vector<std::vector<cdouble>> newbasis(
            nkeep_new, std::vector<cdouble>(static_cast<std::size_t>(dim)));
        for (int i = 0; i < nkeep_new; ++i) {
            auto& v = newbasis[i];
            for (int col = 0; col < m; ++col) {
                const cdouble z = te.vectors(col, i);
                if (z != 0.0) vec_axpy(z, basis[col], v);
            }
        }
        theta.assign(te.values.begin(), te.values.begin() + nkeep_new);
        coupling.resize(nkeep_new);
        for (int i = 0; i < nkeep_new; ++i)
            coupling[i] = beta_last * std::real(te.vectors(m - 1, i));
        for (int i = 0; i < nkeep_new; ++i) basis[i] = std::move(newbasis[i]);
        nkeep = nkeep_new;

        if (resid0 <= gate) {
            SinglePair out;
            auto& v = basis[0];
            reorthogonalize(v, locked, basis, 0);
            const double nn = vec_norm(v);
            vec_scale(1.0 / nn, v);
            std::vector<cdouble> hv(static_cast<std::size_t>(dim));
            op.apply(v, hv);
            out.value = std::real(vec_dot(v, hv));
            vec_axpy(-out.value, v, hv);
            // project the residual onto the complement of the locked space:
            // components along locked vectors belong to already-extracted pairs
            for (const auto& l : locked) {
                const cdouble d = vec_dot(l, hv);
                vec_axpy(-d, l, hv);
            }
            out.residual = vec_norm(hv);
            out.norm_estimate = norm_est;
            if (out.residual <= opts.final_tol * std::max(norm_est, 1e-30)) {
                out.vector = v;
                return out;
            }
            // explicit residual missed the contract: keep iterating
        }
    }
    throw ConvergenceError("lanczos_lowest: no convergence within max_restarts", best_residual);
}

}  // namespace

LanczosResult lanczos_lowest(const LinearOperator& op, int k, std::uint64_t seed,
                             const LanczosOptions& opts) {
    const std::int64_t dim = op.dim();
    if (k < 1 || dim < k) throw ContractError("lanczos_lowest: need 1 <= k <= dim");
    if (dim <= std::max<std::int64_t>(128, 4 * k)) return dense_fallback(op, k);

    Rng rng(seed);
    LanczosResult out;
    // sequential lock-and-deflate: each pass converges the lowest eigenpair in
    // the orthogonal complement of the locked set, so degenerate eigenvalues
    // come out with their full multiplicity, in ascending order
    for (int i = 0; i < k; ++i) {
        SinglePair p = lowest_deflated(op, rng, out.vectors, opts);
        out.values.push_back(p.value);
        out.vectors.push_back(std::move(p.vector));
        out.norm_estimate = std::max(out.norm_estimate, p.norm_estimate);
        out.max_residual = std::max(out.max_residual, p.residual);
    }
    // tiny residual crossings within a degenerate cluster can leave values a
    // hair out of order; restore ascending
    for (std::size_t i = 1; i < out.values.size(); ++i)
        for (std::size_t p = i; p > 0 && out.values[p] < out.values[p - 1]; --p) {
            std::swap(out.values[p], out.values[p - 1]);
            std::swap(out.vectors[p], out.vectors[p - 1]);
        }
    return out;
}

}  // namespace sptw::alg

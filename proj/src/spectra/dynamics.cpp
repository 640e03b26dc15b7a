#include "sptw/spectra/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "sptw/algebra/eig.hpp"
#include "sptw/algebra/rng.hpp"
#include "sptw/errors.hpp"

namespace sptw::spectra {

using sptw::alg::EigResult;
using sptw::alg::hermitian_eig;
using sptw::alg::Rng;
using sptw::alg::vec_axpy;
using sptw::alg::vec_dot;
using sptw::alg::vec_norm;
using sptw::alg::vec_scale;
using sptw::model::apply_embedded;
using sptw::model::LocalHamiltonian;
using sptw::model::local_hamiltonian;

ComplexMatrix evolve_heisenberg_picture(const Interaction& phi, const Region& region,
                                        const ComplexMatrix& op_a, double t) {
    ComplexMatrix h = local_hamiltonian(phi, region).to_dense();
    if (op_a.rows() != h.rows() || op_a.cols() != h.cols())
        throw ContractError("evolve_heisenberg_picture: operator dimension mismatch");
    EigResult e = hermitian_eig(h);
    const int n = h.rows();
    // U = V diag(e^{i t E}) V^dagger
    ComplexMatrix u = e.vectors;
    for (int j = 0; j < n; ++j) {
        const cdouble ph = std::exp(cdouble{0.0, t * e.values[j]});
        for (int i = 0; i < n; ++i) u(i, j) *= ph;
    }
    u = u * e.vectors.adjoint();
    return u * op_a * u.adjoint();
}

namespace {

// single Krylov step; on exit *err_est holds the weight on the last basis vector
std::vector<cdouble> krylov_step(const LinearOperator& h, const std::vector<cdouble>& v,
                                 double dt, int m, double* err_est) {
    const double beta0 = vec_norm(v);
    if (beta0 == 0.0) {
        *err_est = 0.0;
        return v;
    }
    const std::int64_t dim = h.dim();
    m = static_cast<int>(std::min<std::int64_t>(m, dim));
    std::vector<std::vector<cdouble>> basis;
    basis.push_back(v);
    vec_scale(1.0 / beta0, basis[0]);
    std::vector<double> alpha, beta;
    std::vector<cdouble> w(static_cast<std::size_t>(dim));
    bool breakdown = false;
    for (int j = 0; j < m; ++j) {
        h.apply(basis[j], w);
        const double a = std::real(vec_dot(basis[j], w));
        alpha.push_back(a);
        // full two-pass reorthogonalization keeps T accurate
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) {
                const cdouble dpr = vec_dot(b, w);
                vec_axpy(-dpr, b, w);
            }
        const double bnorm = vec_norm(w);
        if (j + 1 == m) break;
        if (bnorm <= 1e-13) {
            breakdown = true;
            break;
        }
        beta.push_back(bnorm);
        basis.push_back(w);
        vec_scale(1.0 / bnorm, basis.back());
    }
    const int used = static_cast<int>(alpha.size());
    ComplexMatrix t(used, used);
    for (int i = 0; i < used; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < used) {
            t(i, i + 1) = beta[i];
            t(i + 1, i) = beta[i];
        }
    }
    EigResult te = hermitian_eig(t);
    // y = exp(i dt T) e1
    std::vector<cdouble> y(used, 0.0);
    for (int k = 0; k < used; ++k) {
        const cdouble ph = std::exp(cdouble{0.0, dt * te.values[k]});
        const cdouble coeff = ph * std::conj(te.vectors(0, k));
        for (int i = 0; i < used; ++i) y[i] += te.vectors(i, k) * coeff;
    }
    *err_est = breakdown ? 0.0 : std::abs(y[used - 1]);
    std::vector<cdouble> out(static_cast<std::size_t>(dim), cdouble{0.0, 0.0});
    for (int i = 0; i < used; ++i) vec_axpy(beta0 * y[i], basis[i], out);
    return out;
}

}  // namespace

std::vector<cdouble> krylov_expi(const LinearOperator& h, const std::vector<cdouble>& v, double t,
                                 double tol, int basis) {
    if (t == 0.0) return v;
    std::vector<cdouble> cur = v;
    double remaining = t;
    double dt = t;
    int guard = 0;
    while (std::abs(remaining) > 1e-15 * std::abs(t)) {
        if (++guard > 10000) throw ConvergenceError("krylov_expi: step size underflow", dt);
        if (std::abs(dt) > std::abs(remaining)) dt = remaining;
        double err = 0.0;
        std::vector<cdouble> next = krylov_step(h, cur, dt, basis, &err);
        if (err > tol) {
            dt *= 0.5;
            continue;
        }
        cur = std::move(next);
        remaining -= dt;
        if (err < tol * 1e-3) dt *= 1.5;
    }
    return cur;
}

namespace {

// largest singular value by power iteration on C^dagger C, with C given as a
// pair of apply callbacks
double norm_via_power(
    const std::function<void(const std::vector<cdouble>&, std::vector<cdouble>&)>& apply_c,
    const std::function<void(const std::vector<cdouble>&, std::vector<cdouble>&)>& apply_cdag,
    std::int64_t dim, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<cdouble> x = rng.complex_vector(static_cast<std::size_t>(dim));
    vec_scale(1.0 / vec_norm(x), x);
    std::vector<cdouble> y(x.size()), z(x.size());
    double sigma = 0.0;
    for (int it = 0; it < 200; ++it) {
        apply_c(x, y);
        const double ny = vec_norm(y);
        if (ny < 1e-13) return ny;
        apply_cdag(y, z);
        const double nz = vec_norm(z);
        const double snew = std::sqrt(nz);
        const bool converged = it > 3 && std::abs(snew - sigma) <= 1e-6 * std::max(1e-30, snew);
        sigma = snew;
        if (nz < 1e-26) return std::sqrt(nz);
        vec_scale(1.0 / nz, z);
        x.swap(z);
        if (converged) break;
    }
    return sigma;
}

double dense_operator_norm_power(const ComplexMatrix& m, std::uint64_t seed) {
    auto ap = [&](const std::vector<cdouble>& x, std::vector<cdouble>& y) {
        y = m * x;
    };
    ComplexMatrix md = m.adjoint();
    auto apd = [md = std::move(md)](const std::vector<cdouble>& x, std::vector<cdouble>& y) {
        y = md * x;
    };
    return norm_via_power(ap, apd, m.rows(), seed);
}

}  // namespace

LightconeGrid lieb_robinson_probe(const Interaction& phi, const Region& region,
                                  const ComplexMatrix& op_a, const ComplexMatrix& op_b,
                                  const std::vector<int>& distances,
                                  const std::vector<double>& times, int threads) {
    if (times.empty()) throw ConfigError("lieb_robinson_probe: empty time list");
    if (distances.empty()) throw ConfigError("lieb_robinson_probe: empty distance list");
    const int d = phi.site_dimension();
    const int L = region.length();
    for (int r : distances)
        if (r < 0 || r >= L) throw ContractError("lieb_robinson_probe: distance outside region");
    LocalHamiltonian h(phi, region);
    const std::int64_t dim = h.dim();

    LightconeGrid grid;
    grid.times = times;
    grid.distances = distances;
    grid.norms.assign(times.size(), std::vector<double>(distances.size(), 0.0));

    if (dim <= 256) {
        // dense path: evolve A once per time, then scan distances
        ComplexMatrix a_full = kron(op_a, ComplexMatrix::identity(static_cast<int>(dim) / op_a.rows()));
        for (std::size_t ti = 0; ti < times.size(); ++ti) {
            ComplexMatrix at = evolve_heisenberg_picture(phi, region, a_full, times[ti]);
            for (std::size_t ri = 0; ri < distances.size(); ++ri) {
                const int r = distances[ri];
                int left = 1;
                for (int i = 0; i < r; ++i) left *= d;
                int right = static_cast<int>(dim) / (left * op_b.rows());
                ComplexMatrix b_full = kron(kron(ComplexMatrix::identity(left), op_b),
                                            ComplexMatrix::identity(right));
                ComplexMatrix comm = at * b_full - b_full * at;
                grid.norms[ti][ri] = dense_operator_norm_power(comm, 7u + 13u * ti + ri);
            }
        }
        return grid;
    }

    // matrix-free path: each grid point independent
    struct Point {
        std::size_t ti, ri;
    };
    std::vector<Point> points;
    for (std::size_t ti = 0; ti < times.size(); ++ti)
        for (std::size_t ri = 0; ri < distances.size(); ++ri) points.push_back({ti, ri});

    const int a_span = [&] {
        int s = 0;
        for (std::int64_t q = 1; q < op_a.rows(); q *= d) ++s;
        return s;
    }();
    const int b_span = [&] {
        int s = 0;
        for (std::int64_t q = 1; q < op_b.rows(); q *= d) ++s;
        return s;
    }();
    std::vector<int> a_pos(a_span);
    for (int i = 0; i < a_span; ++i) a_pos[i] = i;
    const ComplexMatrix a_dag = op_a.adjoint();
    const ComplexMatrix b_dag = op_b.adjoint();

    auto work = [&](std::size_t begin, std::size_t end) {
        std::vector<cdouble> t1, t2;
        for (std::size_t pi = begin; pi < end; ++pi) {
            const double t = times[points[pi].ti];
            const int r = distances[points[pi].ri];
            std::vector<int> b_pos(b_span);
            for (int i = 0; i < b_span; ++i) b_pos[i] = r + i;
            if (r + b_span > L) throw ContractError("lieb_robinson_probe: B exceeds region");
            auto tau = [&](const ComplexMatrix& m, const std::vector<cdouble>& x,
                           std::vector<cdouble>& y) {
                // y = e^{itH} M e^{-itH} x
                std::vector<cdouble> u = krylov_expi(h, x, -t);
                std::vector<cdouble> v(u.size());
                apply_embedded(m, a_pos, d, L, u, v, false);
                y = krylov_expi(h, v, t);
            };
            auto apply_c = [&](const std::vector<cdouble>& x, std::vector<cdouble>& y) {
                // C x = tau(A) B x - B tau(A) x
                std::vector<cdouble> bx(x.size());
                apply_embedded(op_b, b_pos, d, L, x, bx, false);
                std::vector<cdouble> tb;
                tau(op_a, bx, tb);
                std::vector<cdouble> tx;
                tau(op_a, x, tx);
                std::vector<cdouble> btx(x.size());
                apply_embedded(op_b, b_pos, d, L, tx, btx, false);
                y = tb;
                vec_axpy(-1.0, btx, y);
            };
            auto apply_cdag = [&](const std::vector<cdouble>& x, std::vector<cdouble>& y) {
                // C^dag x = B^dag tau(A^dag) x - tau(A^dag) B^dag x
                std::vector<cdouble> tx;
                tau(a_dag, x, tx);
                std::vector<cdouble> btx(x.size());
                apply_embedded(b_dag, b_pos, d, L, tx, btx, false);
                std::vector<cdouble> bx(x.size());
                apply_embedded(b_dag, b_pos, d, L, x, bx, false);
                std::vector<cdouble> tb;
                tau(a_dag, bx, tb);
                y = btx;
                vec_axpy(-1.0, tb, y);
            };
            grid.norms[points[pi].ti][points[pi].ri] =
                norm_via_power(apply_c, apply_cdag, dim, 11u + pi);
        }
    };
    if (threads <= 1) {
        work(0, points.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t per = (points.size() + threads - 1) / threads;
        for (int th = 0; th < threads; ++th) {
            const std::size_t b = std::min<std::size_t>(th * per, points.size());
            const std::size_t e = std::min<std::size_t>(b + per, points.size());
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return grid;
}

Circuit::Circuit(int site_dimension, int length) : d_(site_dimension), length_(length) {
    if (site_dimension < 2 || length < 1) throw ContractError("Circuit: bad dimensions");
}

int Circuit::gate_span(const Gate& g) const {
    int span = 0;
    std::int64_t q = 1;
    while (q < g.unitary.rows()) {
        q *= d_;
        ++span;
    }
    if (q != g.unitary.rows() || span == 0)
        throw ContractError("Circuit: gate dimension is not a power of d");
    return span;
}

void Circuit::add_layer(std::vector<Gate> gates) {
    std::vector<std::pair<int, int>> intervals;
    for (const auto& g : gates) {
        const int span = gate_span(g);
        if (g.start < 0 || g.start + span > length_)
            throw ContractError("Circuit: gate support outside the region");
        if (g.unitary.rows() != g.unitary.cols() || !g.unitary.is_unitary(1e-12))
            throw ContractError("Circuit: gate is not unitary");
        intervals.emplace_back(g.start, g.start + span);
    }
    std::sort(intervals.begin(), intervals.end());
    for (std::size_t i = 1; i < intervals.size(); ++i)
        if (intervals[i].first < intervals[i - 1].second)
            throw ContractError("Circuit: overlapping gates within a layer");
    layers_.push_back(std::move(gates));
}

Circuit Circuit::left_of(int cut) const {
    Circuit out(d_, length_);
    for (const auto& layer : layers_) {
        std::vector<Gate> kept;
        for (const auto& g : layer)
            if (g.start + gate_span(g) <= cut) kept.push_back(g);
        out.add_layer(std::move(kept));
    }
    return out;
}

std::vector<cdouble> apply_circuit(const Circuit& c, std::vector<cdouble> psi, bool inverse) {
    const int d = c.site_dimension();
    const int L = c.length();
    std::vector<cdouble> tmp(psi.size());
    auto apply_layer = [&](const std::vector<Gate>& layer, bool adj) {
        for (const auto& g : layer) {
            const int span = c.gate_span(g);
            std::vector<int> pos(span);
            for (int i = 0; i < span; ++i) pos[i] = g.start + i;
            if (adj) {
                apply_embedded(g.unitary.adjoint(), pos, d, L, psi, tmp, false);
            } else {
                apply_embedded(g.unitary, pos, d, L, psi, tmp, false);
            }
            psi.swap(tmp);
        }
    };
    if (!inverse) {
        for (const auto& layer : c.layers()) apply_layer(layer, false);
    } else {
        for (auto it = c.layers().rbegin(); it != c.layers().rend(); ++it)
            apply_layer(*it, true);
    }
    return psi;
}

ComplexMatrix apply_circuit(const Circuit& c, ComplexMatrix op, bool inverse) {
    const int n = op.rows();
    // conjugate column-by-column: op <- U op U^dag via two left-applications
    // and two adjoints per pass
    auto left_apply_all = [&](ComplexMatrix m, bool adj_gates) {
        std::vector<cdouble> x(static_cast<std::size_t>(n));
        for (int col = 0; col < n; ++col) {
            for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = m(i, col);
            std::vector<cdouble> y = apply_circuit(c, x, adj_gates);
            for (int i = 0; i < n; ++i) m(i, col) = y[static_cast<std::size_t>(i)];
        }
        return m;
    };
    // U op U^dag = (U (U op)^dag)^dag
    ComplexMatrix m1 = left_apply_all(std::move(op), inverse);
    return left_apply_all(m1.adjoint(), inverse).adjoint();
}

FactorizationReport factorization_check(const Circuit& c, int cut, std::uint64_t seed) {
    const int d = c.site_dimension();
    const int L = c.length();
    const int depth = c.depth();
    FactorizationReport rep;
    rep.window = depth;
    Circuit sub = c.left_of(cut);
    Rng rng(seed);
    std::int64_t dim = 1;
    for (int i = 0; i < L; ++i) dim *= d;
    for (int p = 0; p + 1 <= cut - 1 - depth; ++p) {
        // random Hermitian two-site operator at [p, p+1]
        ComplexMatrix a(d * d, d * d);
        for (int i = 0; i < d * d; ++i) {
            a(i, i) = rng.gaussian();
            for (int j = i + 1; j < d * d; ++j) {
                const cdouble v{rng.gaussian(), rng.gaussian()};
                a(i, j) = v;
                a(j, i) = std::conj(v);
            }
        }
        const std::vector<int> pos{p, p + 1};
        // deviation operator applied matrix-free:
        //   D x = U A U^dag x  -  U_sub A U_sub^dag x;   D^dag = D (A Hermitian)
        auto apply_d = [&](const std::vector<cdouble>& x, std::vector<cdouble>& y) {
            std::vector<cdouble> u = apply_circuit(c, x, true);
            std::vector<cdouble> au(u.size());
            apply_embedded(a, pos, d, L, u, au, false);
            y = apply_circuit(c, std::move(au), false);
            std::vector<cdouble> us = apply_circuit(sub, x, true);
            std::vector<cdouble> aus(us.size());
            apply_embedded(a, pos, d, L, us, aus, false);
            std::vector<cdouble> ys = apply_circuit(sub, std::move(aus), false);
            vec_axpy(-1.0, ys, y);
        };
        rep.max_deviation =
            std::max(rep.max_deviation, norm_via_power(apply_d, apply_d, dim, seed + 17 * p));
    }
    return rep;
}

}  // namespace sptw::spectra

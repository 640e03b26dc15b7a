#include "sptw/mps/spt.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "sptw/algebra/eig.hpp"
#include "sptw/algebra/rng.hpp"
#include "sptw/errors.hpp"

namespace sptw::mps {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct Dominant {
    cdouble value;
    std::vector<cdouble> vec;  // unit norm
    bool converged = false;
};

// Power iteration with Rayleigh-quotient convergence; handles complex
// dominant eigenvalues (the iterate direction converges up to a rotating
// phase which the residual test absorbs).
Dominant power_dominant(const ComplexMatrix& e, std::uint64_t seed, int max_iter = 5000,
                        double tol = 1e-12) {
    alg::Rng rng(seed);
    std::vector<cdouble> x = rng.complex_vector(static_cast<std::size_t>(e.rows()));
    alg::vec_scale(1.0 / alg::vec_norm(x), x);
    Dominant out;
    for (int it = 0; it < max_iter; ++it) {
        std::vector<cdouble> y = e * x;
        const cdouble lam = alg::vec_dot(x, y);
        std::vector<cdouble> r = y;
        alg::vec_axpy(-lam, x, r);
        const double yn = alg::vec_norm(y);
        if (yn < 1e-300) {
            out.value = 0.0;
            out.vec = x;
            return out;
        }
        if (alg::vec_norm(r) <= tol * yn) {
            out.value = lam;
            alg::vec_scale(1.0 / yn, y);
            out.vec = std::move(y);
            out.converged = true;
            return out;
        }
        alg::vec_scale(1.0 / yn, y);
        x = std::move(y);
    }
    out.value = alg::vec_dot(x, e * x);
    out.vec = std::move(x);
    return out;
}

// Magnitude of the subleading eigenvalue of e, given its dominant pair and
// the dominant left eigenvector.  Growth-ratio estimate; subleading
// eigenvalues may form complex pairs, so directions need not converge.
double subleading_magnitude(const ComplexMatrix& e, const Dominant& right, const Dominant& left,
                            std::uint64_t seed) {
    const int n = e.rows();
    if (n <= 1) return 0.0;
    const cdouble overlap = alg::vec_dot(left.vec, right.vec);
    alg::Rng rng(seed);
    std::vector<cdouble> x = rng.complex_vector(static_cast<std::size_t>(n));
    auto deflate = [&](std::vector<cdouble>& z) {
        if (std::abs(overlap) < 1e-12) return;  // defective pairing; skip projection
        const cdouble c = alg::vec_dot(left.vec, z) / overlap;
        alg::vec_axpy(-c, right.vec, z);
    };
    deflate(x);
    alg::vec_scale(1.0 / alg::vec_norm(x), x);
    double ratio = 0.0;
    for (int it = 0; it < 400; ++it) {
        std::vector<cdouble> y = e * x;
        deflate(y);
        const double yn = alg::vec_norm(y);
        if (yn < 1e-300) return 0.0;
        ratio = yn;  // x has unit norm
        alg::vec_scale(1.0 / yn, y);
        x = std::move(y);
    }
    return ratio;
}

ComplexMatrix reshape_to_matrix(const std::vector<cdouble>& x, int bond) {
    ComplexMatrix m(bond, bond);
    for (int a = 0; a < bond; ++a)
        for (int b = 0; b < bond; ++b) m(a, b) = x[static_cast<std::size_t>(a) * bond + b];
    return m;
}

// Scale so the first component of magnitude > 1e-8 * max is real positive,
// then take the unitary polar factor.
ComplexMatrix phase_fixed_unitary(ComplexMatrix m) {
    const double top = m.max_abs();
    if (top <= 0) throw ContractError("symmetry gauge: zero eigenvector");
    cdouble pivot{};
    for (int i = 0; i < m.rows() && pivot == cdouble{}; ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (std::abs(m(i, j)) > 1e-8 * top) {
                pivot = m(i, j);
                break;
            }
    m *= std::conj(pivot) / std::abs(pivot);

    alg::EigResult h = alg::hermitian_eig(m.adjoint() * m);
    for (double lam : h.values)
        if (lam <= 1e-20 * h.values.back())
            throw ContractError("symmetry gauge: eigenvector is singular, no unitary gauge");
    ComplexMatrix scale(m.cols(), m.cols());
    for (int k = 0; k < m.cols(); ++k) {
        const cdouble inv_root = 1.0 / std::sqrt(h.values[static_cast<std::size_t>(k)]);
        for (int i = 0; i < m.cols(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                scale(i, j) += h.vectors(i, k) * inv_root * std::conj(h.vectors(j, k));
    }
    return m * scale;
}

void try_snap(CocycleData& c, double snap_tol) {
    const long max_den = 4L * c.group.order() * c.group.order();
    coh::PhaseCochain snapped(c.group, c.arity);
    const int n = c.group.order();
    std::vector<int> args(static_cast<std::size_t>(c.arity), 0);
    try {
        for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
            std::size_t rest = idx;
            for (int k = c.arity - 1; k >= 0; --k) {
                args[static_cast<std::size_t>(k)] = static_cast<int>(rest % n);
                rest /= n;
            }
            double frac = std::arg(c.values[idx]) / two_pi;
            frac -= std::floor(frac);
            snapped.set(args, coh::snap_phase(frac, max_den, snap_tol));
        }
        c.snapped = true;
        c.phases = std::move(snapped);
    } catch (const ContractError&) {
        c.snapped = false;
        c.phases.reset();
    }
}

}  // namespace

cdouble CocycleData::value(const std::vector<int>& args) const {
    if (static_cast<int>(args.size()) != arity) throw ContractError("cocycle arity mismatch");
    std::size_t idx = 0;
    for (int g : args) {
        if (g < 0 || g >= group.order()) throw ContractError("cocycle argument out of range");
        idx = idx * static_cast<std::size_t>(group.order()) + static_cast<std::size_t>(g);
    }
    return values[idx];
}

SymmetryGauge symmetry_gauge(const MPSTensor& a, const model::SymmetryAction& action,
                             const GaugeOptions& opts) {
    if (action.site_dimension() != a.d)
        throw ContractError("symmetry gauge: representation dimension != physical dimension");
    if (!a.right_canonical_ok(1e-6))
        throw ContractError("symmetry gauge: tensor is not right-canonical");

    const ComplexMatrix e0 = transfer_matrix(a);
    Dominant right = power_dominant(e0, opts.seed);
    if (std::abs(std::abs(right.value) - 1.0) > 1e-6)
        throw ContractError("symmetry gauge: transfer matrix dominant eigenvalue is not 1");
    Dominant left = power_dominant(e0.adjoint(), opts.seed + 1);
    const double sub = subleading_magnitude(e0, right, left, opts.seed + 2);
    if (1.0 - sub / std::abs(right.value) < opts.injectivity_gap)
        throw ContractError("symmetry gauge: tensor is not injective (transfer gap " +
                            std::to_string(1.0 - sub) + ")");

    const int n = action.group().order();
    SymmetryGauge out{action.group(), std::vector<double>(static_cast<std::size_t>(n), 0.0),
                      std::vector<ComplexMatrix>(static_cast<std::size_t>(n)), 0.0};
    out.v[0] = ComplexMatrix::identity(a.bond);

    for (int g = 1; g < n; ++g) {
        const ComplexMatrix& u = action.rep(g);
        const ComplexMatrix eg = transfer_matrix(a, &u);
        Dominant dom = power_dominant(eg, opts.seed + 10 + static_cast<std::uint64_t>(g));
        if (std::abs(dom.value) < 1.0 - opts.invariance_tol)
            throw ContractError("state is not invariant under group element g=" +
                                std::to_string(g) + " (twisted eigenvalue magnitude " +
                                std::to_string(std::abs(dom.value)) + ")");
        ComplexMatrix m = reshape_to_matrix(dom.vec, a.bond);
        out.v[static_cast<std::size_t>(g)] = phase_fixed_unitary(std::move(m)).adjoint();
        out.theta[static_cast<std::size_t>(g)] = std::arg(dom.value);
    }

    // residual of the gauge equation for every g (including the identity)
    for (int g = 0; g < n; ++g) {
        const ComplexMatrix& u = action.rep(g);
        const ComplexMatrix& v = out.v[static_cast<std::size_t>(g)];
        const cdouble phase = std::exp(cdouble{0.0, out.theta[static_cast<std::size_t>(g)]});
        double worst = 0.0;
        for (int i = 0; i < a.d; ++i) {
            ComplexMatrix lhs(a.bond, a.bond);
            for (int j = 0; j < a.d; ++j) {
                const cdouble c = u(i, j);
                if (c != cdouble{}) lhs += c * a.a[static_cast<std::size_t>(j)];
            }
            ComplexMatrix rhs = phase * (v.adjoint() * a.a[static_cast<std::size_t>(i)] * v);
            worst = std::max(worst, (lhs - rhs).max_abs());
        }
        if (worst > out.max_residual) out.max_residual = worst;
        if (worst > opts.residual_tol)
            throw ContractError("symmetry gauge: equation residual " + std::to_string(worst) +
                                " for g=" + std::to_string(g));
    }
    return out;
}

CocycleData projective_phase(const SymmetryGauge& gauge, double residual_tol, double snap_tol) {
    const int n = gauge.group.order();
    const int bond = gauge.v[0].rows();
    CocycleData out{gauge.group, 2,
                    std::vector<cdouble>(static_cast<std::size_t>(n) * n, cdouble{1.0}), 0.0,
                    false, std::nullopt};
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int gh = gauge.group.mul(g, h);
            ComplexMatrix p = gauge.v[static_cast<std::size_t>(g)] *
                              gauge.v[static_cast<std::size_t>(h)] *
                              gauge.v[static_cast<std::size_t>(gh)].adjoint();
            cdouble c = p.trace() / static_cast<double>(bond);
            ComplexMatrix dev = p;
            dev -= c * ComplexMatrix::identity(bond);
            const double res = dev.max_abs();
            if (res > out.residual) out.residual = res;
            if (res > residual_tol)
                throw ContractError("projective phase: V(g)V(h)V(gh)^† is not scalar at (g,h)=(" +
                                    std::to_string(g) + "," + std::to_string(h) + "), deviation " +
                                    std::to_string(res));
            if (std::abs(std::abs(c) - 1.0) > residual_tol)
                throw ContractError("projective phase: non-unimodular scalar at (g,h)");
            c /= std::abs(c);
            out.values[static_cast<std::size_t>(g) * n + h] = c;
        }
    try_snap(out, snap_tol);
    return out;
}

CocycleData extract_three_cocycle(const coh::FiniteGroup& group, int dim_left,
                                  const std::vector<ComplexMatrix>& w,
                                  const std::vector<ComplexMatrix>& u, double residual_tol,
                                  double snap_tol) {
    const int n = group.order();
    if (static_cast<int>(w.size()) != n || static_cast<int>(u.size()) != n * n)
        throw ContractError("three-cocycle extraction: need |G| W's and |G|^2 u's");
    if (dim_left < 1) throw ContractError("three-cocycle extraction: bad left dimension");
    const int dim_right = u[0].rows();
    const int dim = dim_left * dim_right;
    for (const ComplexMatrix& m : u)
        if (m.rows() != dim_right || !m.is_unitary(1e-10))
            throw ContractError("three-cocycle extraction: u(g,h) must be unitary");
    for (const ComplexMatrix& m : w)
        if (m.rows() != dim || !m.is_unitary(1e-10))
            throw ContractError("three-cocycle extraction: W(g) must be unitary");

    const ComplexMatrix eye_l = ComplexMatrix::identity(dim_left);
    auto lift = [&](const ComplexMatrix& m) { return alg::kron(eye_l, m); };
    auto uu = [&](int g, int h) -> const ComplexMatrix& {
        return u[static_cast<std::size_t>(g) * n + h];
    };

    CocycleData out{group, 3,
                    std::vector<cdouble>(static_cast<std::size_t>(n) * n * n, cdouble{1.0}), 0.0,
                    false, std::nullopt};
    for (int g = 0; g < n; ++g) {
        const ComplexMatrix& wg = w[static_cast<std::size_t>(g)];
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                const int hk = group.mul(h, k);
                const int gh = group.mul(g, h);
                ComplexMatrix x = wg * lift(uu(h, k)) * wg.adjoint() * lift(uu(g, hk));
                ComplexMatrix y = lift(uu(g, h) * uu(gh, k));
                ComplexMatrix z = x * y.adjoint();
                cdouble c = z.trace() / static_cast<double>(dim);
                z -= c * ComplexMatrix::identity(dim);
                const double res = z.max_abs();
                if (res > out.residual) out.residual = res;
                if (res > residual_tol)
                    throw ContractError(
                        "three-cocycle extraction: scalar relation fails at (g,h,k)=(" +
                        std::to_string(g) + "," + std::to_string(h) + "," + std::to_string(k) +
                        "), deviation " + std::to_string(res));
                if (std::abs(std::abs(c) - 1.0) > residual_tol)
                    throw ContractError("three-cocycle extraction: non-unimodular scalar");
                c /= std::abs(c);
                out.values[(static_cast<std::size_t>(g) * n + h) * n + k] = c;
            }
    }
    try_snap(out, snap_tol);
    return out;
}

SynthesizedData synthesize_cocycle_data(const coh::FiniteGroup& group,
                                        const coh::PhaseCochain& omega) {
    if (omega.arity() != 3 || omega.group_order() != group.order())
        throw ContractError("synthesize: omega must be a 3-cochain on the given group");
    if (!coboundary(group, omega).is_zero())
        throw ContractError("synthesize: omega fails the 3-cocycle identity");

    const int n = group.order();
    SynthesizedData out;
    out.dim_left = n;
    out.w.reserve(static_cast<std::size_t>(n));
    out.u.reserve(static_cast<std::size_t>(n) * n);

    std::vector<ComplexMatrix> perm(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g) {
        ComplexMatrix p(n, n);
        for (int x = 0; x < n; ++x) p(group.mul(g, x), x) = 1.0;  // |x> -> |g x>
        perm[static_cast<std::size_t>(g)] = p;
    }
    for (int g = 0; g < n; ++g)
        out.w.push_back(alg::kron(perm[static_cast<std::size_t>(g)],
                                  perm[static_cast<std::size_t>(g)]));

    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int gh_inv = group.inv(group.mul(g, h));
            ComplexMatrix d(n, n);
            for (int x = 0; x < n; ++x) {
                const mpq_class val = omega({g, h, group.mul(gh_inv, x)});
                d(x, x) = std::exp(cdouble{0.0, -two_pi * val.get_d()});
            }
            out.u.push_back(std::move(d));
        }
    return out;
}

nlohmann::json cocycle_to_json(const CocycleData& c) {
    nlohmann::json j;
    j["group_order"] = c.group.order();
    j["arity"] = c.arity;
    j["residual"] = c.residual;
    nlohmann::json vals = nlohmann::json::array();
    for (cdouble v : c.values) vals.push_back({v.real(), v.imag()});
    j["values"] = std::move(vals);
    j["snapped"] = c.snapped;
    if (c.snapped && c.phases) {
        nlohmann::json ph = nlohmann::json::array();
        for (const mpq_class& q : c.phases->values()) ph.push_back(q.get_str());
        j["phases"] = std::move(ph);
    }
    return j;
}

}  // namespace sptw::mps

#include "sptw/spectra/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "sptw/algebra/eig.hpp"
#include "sptw/algebra/lanczos.hpp"
#include "sptw/algebra/rng.hpp"
#include "sptw/errors.hpp"

namespace sptw::spectra {

using sptw::alg::hermitian_eig;
using sptw::alg::lanczos_lowest;
using sptw::alg::LanczosResult;
using sptw::alg::Rng;
using sptw::model::apply_embedded;
using sptw::model::LocalHamiltonian;
using sptw::model::local_hamiltonian;

SpectralData solve_ground(const Interaction& phi, const Region& region, int k,
                          const SolveOptions& opts) {
    if (k < 1) throw ContractError("solve_ground: k >= 1 required");
    LocalHamiltonian h(phi, region);
    const std::int64_t dim = h.dim();
    if (k > dim) throw ContractError("solve_ground: k exceeds the Hilbert dimension");
    SpectralData out;
    out.region = region;
    out.site_dimension = phi.site_dimension();

    SolveMethod method = opts.method;
    if (method == SolveMethod::automatic)
        method = dim <= opts.dense_limit ? SolveMethod::dense : SolveMethod::lanczos;

    if (method == SolveMethod::dense) {
        auto eig = hermitian_eig(local_hamiltonian(phi, region).to_dense());
        out.energies.assign(eig.values.begin(), eig.values.begin() + k);
        out.vectors = ComplexMatrix(static_cast<int>(dim), k);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < dim; ++i)
                out.vectors(static_cast<int>(i), j) = eig.vectors(static_cast<int>(i), j);
    } else {
        LanczosResult res = lanczos_lowest(h, k, opts.seed);
        out.energies = res.values;
        out.vectors = ComplexMatrix(static_cast<int>(dim), k);
        for (int j = 0; j < k; ++j)
            for (std::int64_t i = 0; i < dim; ++i)
                out.vectors(static_cast<int>(i), j) = res.vectors[j][static_cast<std::size_t>(i)];
    }
    out.gap = k >= 2 ? out.energies[1] - out.energies[0] : 0.0;
    out.ground_degeneracy = 1;
    for (int i = 1; i < k; ++i)
        if (out.energies[i] - out.energies[0] <= opts.degeneracy_tol) ++out.ground_degeneracy;
    return out;
}

GapScan gap_scan(const Interaction& phi, const std::vector<int>& sizes, Boundary bc,
                 const SolveOptions& opts) {
    if (sizes.empty()) throw ContractError("gap_scan: no sizes given");
    GapScan out;
    for (int L : sizes) {
        Region reg{0, L - 1, bc};
        // request a few levels so the degeneracy count is meaningful
        std::int64_t dim = 1;
        for (int i = 0; i < L && dim <= 4; ++i) dim *= phi.site_dimension();
        const int k = static_cast<int>(std::min<std::int64_t>(4, dim));
        SpectralData s = solve_ground(phi, reg, std::max(2, k), opts);
        GapScanRow row;
        row.length = L;
        row.e0 = s.energies[0];
        row.gap = s.gap;
        row.degeneracy = s.ground_degeneracy;
        out.rows.push_back(row);
    }
    // least-squares slope of gap vs L
    const int n = static_cast<int>(out.rows.size());
    if (n >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& r : out.rows) {
            sx += r.length;
            sy += r.gap;
            sxx += double(r.length) * r.length;
            sxy += double(r.length) * r.gap;
        }
        out.gap_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return out;
}

double criterion_value(const Interaction& phi, const Region& region,
                       const std::vector<cdouble>& psi, const ComplexMatrix& a,
                       const std::vector<int>& positions) {
    const double nrm = sptw::alg::vec_norm(psi);
    if (std::abs(nrm - 1.0) > 1e-8)
        throw ContractError("criterion_value: state vector must be normalized");
    LocalHamiltonian h(phi, region);
    const int d = phi.site_dimension();
    const int L = region.length();
    std::vector<cdouble> hpsi(psi.size());
    h.apply(psi, hpsi);
    const double e = std::real(sptw::alg::vec_dot(psi, hpsi));
    std::vector<cdouble> apsi(psi.size());
    apply_embedded(a, positions, d, L, psi, apsi, false);
    std::vector<cdouble> hapsi(psi.size());
    h.apply(apsi, hapsi);
    const double val = std::real(sptw::alg::vec_dot(apsi, hapsi)) -
                       e * sptw::alg::vec_norm(apsi) * sptw::alg::vec_norm(apsi);
    return val;
}

CriterionReport ground_criterion_check(const Interaction& phi, const Region& region,
                                       const std::vector<cdouble>& psi, int samples,
                                       std::uint64_t seed) {
    const int d = phi.site_dimension();
    const int L = region.length();
    Rng rng(seed);
    CriterionReport rep;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        // random two-site operator at a random position (single-site on L=1)
        const int span = L >= 2 ? 2 : 1;
        const int pos = static_cast<int>(rng.below(L - span + 1));
        const int dk = span == 2 ? d * d : d;
        ComplexMatrix a(dk, dk);
        for (auto& v : a.data()) v = cdouble{rng.gaussian(), rng.gaussian()};
        std::vector<int> positions = span == 2 ? std::vector<int>{pos, pos + 1}
                                               : std::vector<int>{pos};
        const double val = criterion_value(phi, region, psi, a, positions);
        rep.min_value = std::min(rep.min_value, val);
    }
    rep.max_violation = std::max(0.0, -rep.min_value);
    return rep;
}

cdouble connected_correlation(const SpectralData& spec, const ComplexMatrix& op_a, int x,
                              const ComplexMatrix& op_b, int y, int vector_index) {
    if (vector_index < 0) {
        if (spec.ground_degeneracy != 1)
            throw AmbiguityError(
                "connected_correlation: degenerate ground space, select a vector explicitly");
        vector_index = 0;
    }
    if (vector_index >= spec.vectors.cols())
        throw ContractError("connected_correlation: vector index out of range");
    const int d = spec.site_dimension;
    const int L = spec.region.length();
    const std::int64_t dim = spec.vectors.rows();
    std::vector<cdouble> psi(static_cast<std::size_t>(dim));
    for (std::int64_t i = 0; i < dim; ++i)
        psi[static_cast<std::size_t>(i)] = spec.vectors(static_cast<int>(i), vector_index);
    const double nrm = sptw::alg::vec_norm(psi);
    sptw::alg::vec_scale(1.0 / nrm, psi);

    std::vector<cdouble> bpsi(psi.size()), abpsi(psi.size()), apsi(psi.size());
    apply_embedded(op_b, {y - spec.region.a}, d, L, psi, bpsi, false);
    apply_embedded(op_a, {x - spec.region.a}, d, L, bpsi, abpsi, false);
    apply_embedded(op_a, {x - spec.region.a}, d, L, psi, apsi, false);
    const cdouble ab = sptw::alg::vec_dot(psi, abpsi);
    const cdouble ea = sptw::alg::vec_dot(psi, apsi);
    const cdouble eb = sptw::alg::vec_dot(psi, bpsi);
    return ab - ea * eb;
}

DecayFit fit_decay(const std::vector<int>& distances, const std::vector<double>& values) {
    if (distances.size() != values.size())
        throw ContractError("fit_decay: distance/value length mismatch");
    DecayFit fit;
    fit.distances = distances;
    fit.values = values;
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0.0 || !std::isfinite(values[i])) {
            fit.window_shrunk = true;
            continue;
        }
        xs.push_back(distances[i]);
        ys.push_back(-std::log(std::abs(values[i])));
    }
    if (xs.size() < 3) {
        fit.degenerate = true;
        return fit;
    }
    const int n = static_cast<int>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    fit.mu = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - fit.mu * sx) / n;  // -log C
    fit.c = std::exp(-intercept);
    for (int i = 0; i < n; ++i)
        fit.residual = std::max(fit.residual, std::abs(fit.mu * xs[i] + intercept - ys[i]));
    return fit;
}

}  // namespace sptw::spectra

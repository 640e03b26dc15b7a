#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sptw/coh/cochain.hpp"
#include "sptw/coh/group.hpp"
#include "sptw/model/symmetry.hpp"
#include "sptw/mps/mps.hpp"
#include "json.hpp"

namespace sptw::mps {

// Per-element phase and bond gauge solving
//   sum_j U(g)_ij A_j = e^{i theta_g} V(g)^dagger A_i V(g).
struct SymmetryGauge {
    coh::FiniteGroup group;
    std::vector<double> theta;        // radians
    std::vector<ComplexMatrix> v;     // v[g]: bond x bond unitary, v[e] = I
    double max_residual = 0.0;        // worst gauge-equation deviation over g
};

struct GaugeOptions {
    double residual_tol = 1e-8;    // gauge-equation deviation cap
    double invariance_tol = 1e-6;  // 1 - |dominant twisted eigenvalue| cap
    double injectivity_gap = 1e-8; // required relative transfer spectral gap
    std::uint64_t seed = 0x9a36;   // power-iteration start vector
};

// Extract phases and gauges from the dominant eigenvectors of the U(g)-twisted
// transfer matrices.  Throws ContractError if the tensor is not injective,
// not right-canonical, or not invariant under some g (named in the message).
SymmetryGauge symmetry_gauge(const MPSTensor& a, const model::SymmetryAction& action,
                             const GaugeOptions& opts = {});

// Unit-modulus cochain extracted from operator data, with the worst deviation
// from the defining scalar relation.  Values are dense over G^arity with the
// same indexing as coh::PhaseCochain.  When every value lies within snap_tol
// of a root of unity of denominator <= 4|G|^2 the exact rational phases are
// stored as well.
struct CocycleData {
    coh::FiniteGroup group;
    int arity = 2;
    std::vector<cdouble> values;
    double residual = 0.0;
    bool snapped = false;
    std::optional<coh::PhaseCochain> phases;

    cdouble value(const std::vector<int>& args) const;
};

// sigma(g,h) = tr(V(gh)^dagger V(g) V(h)) / bond after checking that
// V(g)V(h)V(gh)^dagger is scalar to residual_tol.
CocycleData projective_phase(const SymmetryGauge& gauge, double residual_tol = 1e-8,
                             double snap_tol = 1e-6);

// Half-line implementer data: W(g) on H_L (x) H_R and u(g,h) on H_R with
//   W_g (I(x)u(h,k)) W_g^dagger (I(x)u(g,hk)) = c(g,h,k) (I(x)u(g,h)u(gh,k)).
// w is indexed by g; u by g*|G| + h.
CocycleData extract_three_cocycle(const coh::FiniteGroup& group, int dim_left,
                                  const std::vector<ComplexMatrix>& w,
                                  const std::vector<ComplexMatrix>& u,
                                  double residual_tol = 1e-8, double snap_tol = 1e-6);

struct SynthesizedData {
    int dim_left = 0;
    std::vector<ComplexMatrix> w;  // w[g] on H_L (x) H_R
    std::vector<ComplexMatrix> u;  // u[g*|G| + h] on H_R
};

// Deterministic finite-dimensional realization of the scalar relation above
// with c = omega: H_L = H_R = group algebra of G, W_g = P_g (x) P_g with P_g
// the left-translation permutation, and u(g,h) diagonal with entries
// exp(-2 pi i omega(g, h, (gh)^{-1} x)).  Rejects omega (exact rational
// 3-cochain) that fails the cocycle identity.
SynthesizedData synthesize_cocycle_data(const coh::FiniteGroup& group,
                                        const coh::PhaseCochain& omega);

// {"group_order":…, "arity":…, "residual":…, "values":[[re,im],…],
//  "phases":["p/q",…] when snapped}
nlohmann::json cocycle_to_json(const CocycleData& c);

}  // namespace sptw::mps

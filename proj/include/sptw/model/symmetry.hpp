#pragma once

#include <optional>
#include <vector>

#include "sptw/algebra/complex_matrix.hpp"
#include "sptw/coh/cochain.hpp"
#include "sptw/coh/group.hpp"
#include "sptw/model/interaction.hpp"

namespace sptw::model {

// On-site (possibly projective) unitary representation of a finite group.
// U(g)U(h) = mu(g,h) U(gh) with mu from the optional projective factor
// (mu == 1 when absent); validated at construction.
class SymmetryAction {
  public:
    SymmetryAction(coh::FiniteGroup group, std::vector<ComplexMatrix> rep,
                   std::optional<coh::PhaseCochain> projective_factor = std::nullopt);

    const coh::FiniteGroup& group() const { return group_; }
    const ComplexMatrix& rep(int g) const { return rep_[g]; }
    int site_dimension() const { return rep_[0].rows(); }
    const std::optional<coh::PhaseCochain>& projective_factor() const { return mu_; }

  private:
    coh::FiniteGroup group_;
    std::vector<ComplexMatrix> rep_;
    std::optional<coh::PhaseCochain> mu_;
};

// tensor_{x in region} U(g)
ComplexMatrix symmetry_unitary(const SymmetryAction& action, int g, const Region& region);

// identity on sites < cut, U(g) on sites >= cut (cut is an absolute site index)
ComplexMatrix restricted_symmetry_unitary(const SymmetryAction& action, int g,
                                          const Region& region, int cut);

struct InvarianceReport {
    bool invariant = false;
    double max_deviation = 0.0;
};

// max over stored terms X and group elements g of ||beta_g(Phi(X)) - Phi(X)||_max
InvarianceReport is_invariant(const Interaction& phi, const SymmetryAction& action);

}  // namespace sptw::model

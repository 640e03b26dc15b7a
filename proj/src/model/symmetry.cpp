#include "sptw/model/symmetry.hpp"

#include <cmath>
#include <numbers>

#include "sptw/errors.hpp"

namespace sptw::model {

SymmetryAction::SymmetryAction(coh::FiniteGroup group, std::vector<ComplexMatrix> rep,
                               std::optional<coh::PhaseCochain> projective_factor)
    : group_(std::move(group)), rep_(std::move(rep)), mu_(std::move(projective_factor)) {
    const int n = group_.order();
    if (static_cast<int>(rep_.size()) != n)
        throw ContractError("SymmetryAction: need one matrix per group element");
    const int d = rep_[0].rows();
    for (const auto& u : rep_) {
        if (u.rows() != d || u.cols() != d)
            throw ContractError("SymmetryAction: inconsistent matrix dimensions");
        if (!u.is_unitary(1e-12)) throw ContractError("SymmetryAction: matrix is not unitary");
    }
    if (mu_ && (mu_->arity() != 2 || mu_->group_order() != n))
        throw ContractError("SymmetryAction: projective factor must be a 2-cochain on G");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            cdouble mu{1.0, 0.0};
            if (mu_) {
                const mpq_class& q = (*mu_)({g, h});
                const double frac = q.get_d();
                mu = std::exp(cdouble{0.0, 2.0 * std::numbers::pi * frac});
            }
            ComplexMatrix dev = rep_[g] * rep_[h] - mu * rep_[group_.mul(g, h)];
            if (dev.max_abs() > 1e-10)
                throw ContractError("SymmetryAction: U(g)U(h) != mu(g,h) U(gh)");
        }
}

ComplexMatrix symmetry_unitary(const SymmetryAction& action, int g, const Region& region) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (int x = region.a; x <= region.b; ++x) out = kron(out, action.rep(g));
    return out;
}

ComplexMatrix restricted_symmetry_unitary(const SymmetryAction& action, int g,
                                          const Region& region, int cut) {
    const int d = action.site_dimension();
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (int x = region.a; x <= region.b; ++x)
        out = kron(out, x >= cut ? action.rep(g) : ComplexMatrix::identity(d));
    return out;
}

InvarianceReport is_invariant(const Interaction& phi, const SymmetryAction& action) {
    if (phi.site_dimension() != action.site_dimension())
        throw ContractError("is_invariant: site dimensions differ");
    InvarianceReport rep;
    for (const auto& [sites, m] : phi.terms()) {
        for (int g = 0; g < action.group().order(); ++g) {
            ComplexMatrix u = ComplexMatrix::identity(1);
            for (std::size_t i = 0; i < sites.size(); ++i) u = kron(u, action.rep(g));
            ComplexMatrix dev = u * m * u.adjoint() - m;
            rep.max_deviation = std::max(rep.max_deviation, dev.max_abs());
        }
    }
    rep.invariant = rep.max_deviation <= 1e-10;
    return rep;
}

}  // namespace sptw::model

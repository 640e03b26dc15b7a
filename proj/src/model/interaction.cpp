#include "sptw/model/interaction.hpp"

#include <algorithm>
#include <cmath>

#include "sptw/algebra/eig.hpp"
#include "sptw/algebra/spin.hpp"
#include "sptw/errors.hpp"

namespace sptw::model {

using sptw::alg::hilbert_cap;
using sptw::alg::operator_norm;
using sptw::alg::SpinMatrices;
using sptw::alg::spin_matrices;

Interaction::Interaction(int site_dimension, bool translation_invariant)
    : d_(site_dimension), ti_(translation_invariant) {
    if (site_dimension < 2) throw ContractError("Interaction: site dimension >= 2 required");
}

void Interaction::add_term(std::vector<int> sites, ComplexMatrix term) {
    if (sites.empty()) throw ContractError("Interaction: empty support");
    if (!std::is_sorted(sites.begin(), sites.end()) ||
        std::adjacent_find(sites.begin(), sites.end()) != sites.end())
        throw ContractError("Interaction: support must be sorted and distinct");
    if (ti_ && sites.front() != 0)
        throw ContractError("Interaction: translation-invariant terms are stored with min(X)=0");
    std::int64_t dim = 1;
    for (std::size_t i = 0; i < sites.size(); ++i) dim *= d_;
    if (term.rows() != dim || term.cols() != dim)
        throw ContractError("Interaction: term dimension != d^|X|");
    if (!term.is_hermitian(1e-12)) throw ContractError("Interaction: term is not Hermitian");
    range_ = std::max(range_, sites.back() - sites.front());
    bound_ = std::max(bound_, operator_norm(term));
    terms_[std::move(sites)] = std::move(term);
}

Interaction heisenberg(int d) {
    if (d < 2) throw ContractError("heisenberg: d >= 2 required");
    const SpinMatrices s = spin_matrices(d);
    ComplexMatrix t = kron(s.sx, s.sx) + kron(s.sy, s.sy) + kron(s.sz, s.sz);
    Interaction phi(d);
    phi.add_term({0, 1}, std::move(t));
    return phi;
}

Interaction aklt() {
    const SpinMatrices s = spin_matrices(3);
    const ComplexMatrix ss = kron(s.sx, s.sx) + kron(s.sy, s.sy) + kron(s.sz, s.sz);
    // projector onto joint spin 2 of two spin-1 sites
    ComplexMatrix p = 0.5 * ss + (1.0 / 6.0) * (ss * ss) + (1.0 / 3.0) * ComplexMatrix::identity(9);
    Interaction phi(3);
    phi.add_term({0, 1}, std::move(p));
    return phi;
}

Interaction transverse_ising(double h_field) {
    using sptw::alg::pauli_x;
    using sptw::alg::pauli_z;
    Interaction phi(2);
    phi.add_term({0, 1}, -1.0 * kron(pauli_z(), pauli_z()));
    phi.add_term({0}, -h_field * pauli_x());
    return phi;
}

Interaction trivial_onsite(const std::vector<double>& hvec) {
    const int d = static_cast<int>(hvec.size());
    if (d < 2) throw ContractError("trivial_onsite: need at least two levels");
    const double mn = *std::min_element(hvec.begin(), hvec.end());
    if (std::count_if(hvec.begin(), hvec.end(), [&](double v) { return v == mn; }) != 1)
        throw ContractError("trivial_onsite: minimizer must be unique (trivial interaction)");
    ComplexMatrix m(d, d);
    for (int i = 0; i < d; ++i) m(i, i) = hvec[i];
    Interaction phi(d);
    phi.add_term({0}, std::move(m));
    return phi;
}

std::vector<EmbeddedTerm> embedded_terms(const Interaction& phi, const Region& region) {
    const int L = region.length();
    if (L < 1) throw ContractError("embedded_terms: empty region");
    if (region.bc == Boundary::periodic && L < phi.range() + 1)
        throw ContractError("embedded_terms: periodic region shorter than the interaction range");
    std::vector<EmbeddedTerm> out;
    if (phi.translation_invariant()) {
        for (const auto& [sites, m] : phi.terms()) {
            const int span = sites.back();
            if (region.bc == Boundary::open) {
                for (int a = 0; a + span < L; ++a) {
                    EmbeddedTerm t;
                    for (int s : sites) t.positions.push_back(a + s);
                    t.matrix = m;
                    out.push_back(std::move(t));
                }
            } else {
                for (int a = 0; a < L; ++a) {
                    EmbeddedTerm t;
                    for (int s : sites) t.positions.push_back((a + s) % L);
                    t.matrix = m;
                    out.push_back(std::move(t));
                }
            }
        }
    } else {
        for (const auto& [sites, m] : phi.terms()) {
            if (sites.front() < region.a || sites.back() > region.b) continue;
            EmbeddedTerm t;
            for (int s : sites) t.positions.push_back(s - region.a);
            t.matrix = m;
            out.push_back(std::move(t));
        }
    }
    return out;
}

namespace {

std::int64_t hilbert_dim(int d, int L) {
    std::int64_t dim = 1;
    for (int i = 0; i < L; ++i) {
        dim *= d;
        if (dim > hilbert_cap())
            throw SizeError("local_hamiltonian: Hilbert dimension exceeds the configured cap");
    }
    return dim;
}

}  // namespace

SparseOperator local_hamiltonian(const Interaction& phi, const Region& region) {
    const int d = phi.site_dimension();
    const int L = region.length();
    const std::int64_t dim = hilbert_dim(d, L);
    std::vector<std::int64_t> stride(L);
    {
        std::int64_t s = 1;
        for (int p = L - 1; p >= 0; --p) {
            stride[p] = s;
            s *= d;
        }
    }
    std::vector<SparseOperator::Triplet> tr;
    for (const auto& term : embedded_terms(phi, region)) {
        const int k = static_cast<int>(term.positions.size());
        std::int64_t dk = 1;
        for (int i = 0; i < k; ++i) dk *= d;
        // substrides of the k acted-on sites and the L-k spectator sites
        std::vector<int> rest;
        for (int p = 0; p < L; ++p)
            if (std::find(term.positions.begin(), term.positions.end(), p) ==
                term.positions.end())
                rest.push_back(p);
        const int nr = static_cast<int>(rest.size());
        std::vector<int> cfg(nr, 0);
        while (true) {
            std::int64_t base = 0;
            for (int i = 0; i < nr; ++i) base += cfg[i] * stride[rest[i]];
            for (std::int64_t r = 0; r < dk; ++r)
                for (std::int64_t c = 0; c < dk; ++c) {
                    const cdouble v = term.matrix(static_cast<int>(r), static_cast<int>(c));
                    if (v == 0.0) continue;
                    std::int64_t row = base, col = base;
                    std::int64_t rr = r, cc = c;
                    for (int i = k - 1; i >= 0; --i) {
                        row += (rr % d) * stride[term.positions[i]];
                        col += (cc % d) * stride[term.positions[i]];
                        rr /= d;
                        cc /= d;
                    }
                    tr.push_back({static_cast<int>(row), static_cast<int>(col), v});
                }
            int pos = nr - 1;
            while (pos >= 0 && ++cfg[pos] == d) cfg[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return SparseOperator(dim, tr);
}

LocalHamiltonian::LocalHamiltonian(const Interaction& phi, const Region& region)
    : d_(phi.site_dimension()), length_(region.length()) {
    dim_ = hilbert_dim(d_, length_);
    terms_ = embedded_terms(phi, region);
}

void apply_embedded(const ComplexMatrix& m, const std::vector<int>& positions, int d, int length,
                    const std::vector<cdouble>& x, std::vector<cdouble>& y, bool accumulate) {
    std::int64_t dim = 1;
    for (int i = 0; i < length; ++i) dim *= d;
    if (static_cast<std::int64_t>(x.size()) != dim)
        throw ContractError("apply_embedded: vector dimension mismatch");
    if (!accumulate) y.assign(static_cast<std::size_t>(dim), cdouble{0.0, 0.0});
    if (static_cast<std::int64_t>(y.size()) != dim)
        throw ContractError("apply_embedded: output dimension mismatch");
    std::vector<std::int64_t> stride(length);
    {
        std::int64_t s = 1;
        for (int p = length - 1; p >= 0; --p) {
            stride[p] = s;
            s *= d;
        }
    }
    const int k = static_cast<int>(positions.size());
    std::int64_t dk = 1;
    for (int i = 0; i < k; ++i) dk *= d;
    if (m.rows() != dk || m.cols() != dk)
        throw ContractError("apply_embedded: matrix dimension != d^|positions|");
    // offsets of each block state within the full index
    std::vector<std::int64_t> sub(static_cast<std::size_t>(dk), 0);
    for (std::int64_t s = 0; s < dk; ++s) {
        std::int64_t ss = s, off = 0;
        for (int i = k - 1; i >= 0; --i) {
            off += (ss % d) * stride[positions[i]];
            ss /= d;
        }
        sub[static_cast<std::size_t>(s)] = off;
    }
    // enumerate spectator configurations; a full index is base + sub[s]
    std::vector<int> rest;
    for (int p = 0; p < length; ++p)
        if (std::find(positions.begin(), positions.end(), p) == positions.end())
            rest.push_back(p);
    const int nr = static_cast<int>(rest.size());
    std::vector<int> cfg(nr, 0);
    std::vector<cdouble> in(static_cast<std::size_t>(dk));
    while (true) {
        std::int64_t base = 0;
        for (int i = 0; i < nr; ++i) base += cfg[i] * stride[rest[i]];
        for (std::int64_t s = 0; s < dk; ++s)
            in[static_cast<std::size_t>(s)] = x[static_cast<std::size_t>(base + sub[s])];
        for (std::int64_t r = 0; r < dk; ++r) {
            cdouble acc{0.0, 0.0};
            const cdouble* mrow = m.row_ptr(static_cast<int>(r));
            for (std::int64_t c = 0; c < dk; ++c) acc += mrow[c] * in[static_cast<std::size_t>(c)];
            y[static_cast<std::size_t>(base + sub[r])] += acc;
        }
        int pos = nr - 1;
        while (pos >= 0 && ++cfg[pos] == d) cfg[pos--] = 0;
        if (pos < 0) break;
    }
}

void LocalHamiltonian::apply(const std::vector<cdouble>& x, std::vector<cdouble>& y) const {
    if (static_cast<std::int64_t>(x.size()) != dim_)
        throw ContractError("LocalHamiltonian: vector dimension mismatch");
    y.assign(static_cast<std::size_t>(dim_), cdouble{0.0, 0.0});
    for (const auto& term : terms_)
        apply_embedded(term.matrix, term.positions, d_, length_, x, y, true);
}

}  // namespace sptw::model

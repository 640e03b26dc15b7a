#pragma once

#include <vector>

#include "sptw/algebra/integer_matrix.hpp"
#include "sptw/coh/cochain.hpp"
#include "sptw/coh/group.hpp"

namespace sptw::coh {

struct CohomologyClass {
    int degree = 0;
    std::vector<long> factors;      // invariant factors > 1, divisibility chain
    std::vector<long> coordinates;  // residue of the cocycle in each factor
    bool trivial() const {
        for (long c : coordinates)
            if (c != 0) return false;
        return true;
    }
    bool operator==(const CohomologyClass&) const = default;
};

// Boundary map of the normalized bar resolution, C_k -> C_{k-1}, where C_k is
// the free abelian group on (G \ {e})^k.  Tuples acquiring an identity entry
// are dropped.
sptw::alg::IntegerMatrix bar_boundary(const FiniteGroup& g, int k);

// Invariant factors of H^n(G, U(1)) for n in {1,2,3}, computed as the torsion
// of H_n(G, Z) (isomorphic for divisible coefficients): the invariant factors
// > 1 of the boundary matrix d_{n+1}.
std::vector<long> cohomology_group(const FiniteGroup& g, int n);

// Reduce an exact normalized n-cocycle to canonical coordinates against the
// invariant factors of H^n(G, U(1)).  Rejects non-cocycles (naming a violating
// tuple) and non-normalized input.
CohomologyClass classify_cocycle(const FiniteGroup& g, const PhaseCochain& f, int n);

// nu(g,h) = sigma(g,h) - sigma(h,g), a coboundary-invariant antisymmetric
// bicharacter for abelian G.
PhaseCochain commutator_pairing(const FiniteGroup& g, const PhaseCochain& sigma);

}  // namespace sptw::coh

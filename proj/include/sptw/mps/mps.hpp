#pragma once

#include <string>
#include <vector>

#include "sptw/algebra/complex_matrix.hpp"
#include "sptw/model/interaction.hpp"
#include "json.hpp"

namespace sptw::mps {

using sptw::alg::ComplexMatrix;
using sptw::alg::cdouble;

enum class Canonical { none, left, right };

// Uniform (site-independent) matrix-product tensor A_i, i < d, each D x D.
struct MPSTensor {
    int d = 0;
    int bond = 0;
    std::vector<ComplexMatrix> a;  // a[i]: bond x bond
    Canonical form = Canonical::none;

    // sum_i A_i A_i^dagger = I to tol
    bool right_canonical_ok(double tol = 1e-10) const;
};

// One site of an open-boundary chain; a[i] is dl x dr.
struct SiteTensor {
    int dl = 0;
    int d = 0;
    int dr = 0;
    std::vector<ComplexMatrix> a;
};

struct MPSChain {
    std::vector<SiteTensor> sites;
    double fidelity = 1.0;           // |<input | reconstruction>|
    double truncation_error = 0.0;   // sqrt(sum of discarded Schmidt weights)
    bool truncated = false;          // tol was unreachable at the bond cap
    int max_bond = 1;
};

// Sequential right-to-left singular-value factorization of a normalized state
// vector over `region` (site 0 slowest index).  Bond dimension is capped at
// d_max; singular values are discarded greedily while the summed discarded
// weight stays below tol^2.  The local dimension is inferred from the vector
// size and the region length.
MPSChain mps_from_vector(const std::vector<cdouble>& psi, const model::Region& region, int d_max,
                         double tol);

// Contract an open chain back into a state vector (site 0 slowest).
std::vector<cdouble> contract_chain(const MPSChain& chain);

// Site tensor reinterpreted as a uniform bulk tensor; requires dl == dr.
MPSTensor bulk_tensor(const MPSChain& chain, int site);

// Analytic AKLT tensor: d=3, bond=2, right-canonical, built from
// A_+ = sqrt(2/3) sigma^+, A_0 = -sqrt(1/3) sigma_z, A_- = -sqrt(2/3) sigma^-.
MPSTensor aklt_tensor();

// D=1 product tensor with physical vector v (normalized).
MPSTensor product_tensor(const std::vector<cdouble>& v);

// Twisted transfer matrix E[(a a'),(b b')] = sum_{ij} twist_ij A_j[a,b]
// conj(A_i[a',b']); identity twist gives the standard channel.
ComplexMatrix transfer_matrix(const MPSTensor& a, const ComplexMatrix* twist = nullptr);

// Block n adjacent sites into one: d -> d^n, A_(i1..in) = A_{i1} ... A_{in}.
// Preserves right-canonical form.
MPSTensor block_sites(const MPSTensor& a, int n = 2);

// JSON layout: {"d":…, "bond":…, "canonical":"right|left|none",
//               "data":[[re,im],…]} with data flattened over (i, row, col).
nlohmann::json tensor_to_json(const MPSTensor& a);
MPSTensor tensor_from_json(const nlohmann::json& j);

}  // namespace sptw::mps

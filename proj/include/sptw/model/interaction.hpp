#pragma once

#include <map>
#include <vector>

#include "sptw/algebra/complex_matrix.hpp"
#include "sptw/algebra/sparse.hpp"

namespace sptw::model {

using sptw::alg::ComplexMatrix;
using sptw::alg::SparseOperator;
using sptw::alg::cdouble;

enum class Boundary { open, periodic };

// finite interval [a, b] of the chain
struct Region {
    int a = 0;
    int b = 0;
    Boundary bc = Boundary::open;
    int length() const { return b - a + 1; }
};

// Finite-range interaction: Hermitian terms Phi(X) on finite site sets X.
// For translation-invariant interactions the stored representatives have
// min(X) = 0 and are translated over the region at assembly time.
class Interaction {
  public:
    explicit Interaction(int site_dimension, bool translation_invariant = true);

    // X must be sorted, distinct; matrix dimension d^|X|; Hermitian to 1e-12
    void add_term(std::vector<int> sites, ComplexMatrix term);

    int site_dimension() const { return d_; }
    int range() const { return range_; }
    bool translation_invariant() const { return ti_; }
    double bound() const { return bound_; }  // sup over ||Phi(X)||
    const std::map<std::vector<int>, ComplexMatrix>& terms() const { return terms_; }

  private:
    int d_;
    bool ti_;
    int range_ = 0;
    double bound_ = 0.0;
    std::map<std::vector<int>, ComplexMatrix> terms_;
};

// model zoo
Interaction heisenberg(int d);
Interaction aklt();
Interaction transverse_ising(double h_field);
Interaction trivial_onsite(const std::vector<double>& hvec);

// Embedded term of a Hamiltonian on a region: `positions` are 0-based site
// offsets inside the region (site 0 = leftmost kron factor).
struct EmbeddedTerm {
    std::vector<int> positions;
    ComplexMatrix matrix;
};

// All terms of phi embedded in the region (translates + periodic wraps);
// shared by the sparse assembler and the matrix-free operator.
std::vector<EmbeddedTerm> embedded_terms(const Interaction& phi, const Region& region);

// y (+)= (m acting on `positions`, identity elsewhere) x on a chain of
// `length` d-level sites; positions are 0-based offsets, site 0 slowest.
void apply_embedded(const ComplexMatrix& m, const std::vector<int>& positions, int d, int length,
                    const std::vector<cdouble>& x, std::vector<cdouble>& y, bool accumulate);

// H = sum_X Phi(X) as an explicit sparse matrix.  Dimension d^L above the
// configured Hilbert cap raises SizeError.
SparseOperator local_hamiltonian(const Interaction& phi, const Region& region);

// Matrix-free version of the same operator for large regions.
class LocalHamiltonian final : public sptw::alg::LinearOperator {
  public:
    LocalHamiltonian(const Interaction& phi, const Region& region);
    std::int64_t dim() const override { return dim_; }
    void apply(const std::vector<cdouble>& x, std::vector<cdouble>& y) const override;
    const std::vector<EmbeddedTerm>& terms() const { return terms_; }
    int sites() const { return length_; }
    int site_dimension() const { return d_; }

  private:
    int d_;
    int length_;
    std::int64_t dim_;
    std::vector<EmbeddedTerm> terms_;
};

}  // namespace sptw::model

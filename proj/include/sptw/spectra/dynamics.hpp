#pragma once

#include <cstdint>
#include <vector>

#include "sptw/algebra/complex_matrix.hpp"
#include "sptw/algebra/sparse.hpp"
#include "sptw/model/interaction.hpp"

namespace sptw::spectra {

using sptw::alg::ComplexMatrix;
using sptw::alg::cdouble;
using sptw::alg::LinearOperator;
using sptw::model::Interaction;
using sptw::model::Region;

// e^{itH} A e^{-itH} by dense spectral decomposition (small regions only)
ComplexMatrix evolve_heisenberg_picture(const Interaction& phi, const Region& region,
                                        const ComplexMatrix& op_a, double t);

// w = e^{i t H} v via Krylov (Lanczos) propagation with adaptive time steps
std::vector<cdouble> krylov_expi(const LinearOperator& h, const std::vector<cdouble>& v, double t,
                                 double tol = 1e-10, int basis = 40);

struct LightconeGrid {
    std::vector<double> times;
    std::vector<int> distances;
    std::vector<std::vector<double>> norms;  // norms[ti][ri] = ||[tau_t(A), B_r]||
};

// ||[tau_t(A), B]|| for A at site 0 and B at each listed distance.  Dense
// evolution below ~2^9 states, matrix-free Krylov + power iteration above.
// threads > 1 parallelizes the (t, r) grid on the matrix-free path.
LightconeGrid lieb_robinson_probe(const Interaction& phi, const Region& region,
                                  const ComplexMatrix& op_a, const ComplexMatrix& op_b,
                                  const std::vector<int>& distances,
                                  const std::vector<double>& times, int threads = 1);

struct Gate {
    int start = 0;         // leftmost site (0-based offset in the region)
    ComplexMatrix unitary;  // dimension d^span
};

// Finite-depth circuit: layers of disjoint-support gates
class Circuit {
  public:
    Circuit(int site_dimension, int length);
    void add_layer(std::vector<Gate> gates);  // validates unitarity + disjointness
    int depth() const { return static_cast<int>(layers_.size()); }
    int site_dimension() const { return d_; }
    int length() const { return length_; }
    const std::vector<std::vector<Gate>>& layers() const { return layers_; }
    int gate_span(const Gate& g) const;

    // sub-circuit keeping only gates supported entirely on sites < cut
    Circuit left_of(int cut) const;

  private:
    int d_;
    int length_;
    std::vector<std::vector<Gate>> layers_;
};

// U_circuit |psi>; inverse applies the adjoint circuit (reversed layers)
std::vector<cdouble> apply_circuit(const Circuit& c, std::vector<cdouble> psi,
                                   bool inverse = false);
// U_circuit M U_circuit^dagger
ComplexMatrix apply_circuit(const Circuit& c, ComplexMatrix op, bool inverse = false);

struct FactorizationReport {
    double max_deviation = 0.0;
    int window = 0;  // light-cone margin used (= depth for nearest-neighbour gates)
};

// For random two-site operators ending at least `depth` sites left of the cut,
// conjugation by the full circuit must agree with conjugation by the gates
// supported entirely left of the cut.
FactorizationReport factorization_check(const Circuit& c, int cut, std::uint64_t seed);

}  // namespace sptw::spectra

#pragma once

#include <cstdint>
#include <vector>

#include "sptw/algebra/complex_matrix.hpp"
#include "sptw/model/interaction.hpp"

namespace sptw::spectra {

using sptw::alg::ComplexMatrix;
using sptw::alg::cdouble;
using sptw::model::Boundary;
using sptw::model::Interaction;
using sptw::model::Region;

enum class SolveMethod { dense, lanczos, automatic };

struct SpectralData {
    Region region;
    int site_dimension = 0;
    std::vector<double> energies;  // ascending
    ComplexMatrix vectors;         // eigenvectors as columns
    double gap = 0.0;              // E1 - E0 (0 if only one pair was computed)
    int ground_degeneracy = 1;     // levels within degeneracy_tol of E0
};

struct SolveOptions {
    SolveMethod method = SolveMethod::automatic;
    std::uint64_t seed = 0x5eed;       // Lanczos start vectors
    double degeneracy_tol = 1e-3;      // absolute near-degeneracy window above E0
    std::int64_t dense_limit = 2048;   // automatic: dense below, Lanczos above
};

// k lowest eigenpairs of the local Hamiltonian
SpectralData solve_ground(const Interaction& phi, const Region& region, int k,
                          const SolveOptions& opts = {});

struct GapScanRow {
    int length = 0;
    double e0 = 0.0;
    double gap = 0.0;
    int degeneracy = 1;
};

struct GapScan {
    std::vector<GapScanRow> rows;
    double gap_slope = 0.0;  // least-squares slope of gap vs L (trend statistic)
};

GapScan gap_scan(const Interaction& phi, const std::vector<int>& sizes, Boundary bc,
                 const SolveOptions& opts = {});

// <A psi, (H - E_psi) A psi> with E_psi = <psi, H psi>; >= 0 characterizes
// ground vectors
double criterion_value(const Interaction& phi, const Region& region,
                       const std::vector<cdouble>& psi, const ComplexMatrix& a,
                       const std::vector<int>& positions);

struct CriterionReport {
    double min_value = 0.0;      // most negative sampled criterion value
    double max_violation = 0.0;  // max(0, -min_value)
    int samples = 0;
};

// samples random two-site operators at random positions
CriterionReport ground_criterion_check(const Interaction& phi, const Region& region,
                                       const std::vector<cdouble>& psi, int samples,
                                       std::uint64_t seed);

// omega(A_x B_y) - omega(A_x) omega(B_y) in the chosen ground vector.
// vector_index = -1 demands a unique ground state (AmbiguityError otherwise).
cdouble connected_correlation(const SpectralData& spec, const ComplexMatrix& op_a, int x,
                              const ComplexMatrix& op_b, int y, int vector_index = -1);

struct DecayFit {
    std::vector<int> distances;
    std::vector<double> values;
    double mu = 0.0;        // decay rate: |value| ~ C e^{-mu r}
    double c = 0.0;         // prefactor
    double residual = 0.0;  // max log-space deviation over the fit window
    bool degenerate = false;     // fewer than 3 nonzero values
    bool window_shrunk = false;  // zero values dropped from the window
};

DecayFit fit_decay(const std::vector<int>& distances, const std::vector<double>& values);

}  // namespace sptw::spectra

#pragma once

#include <gmpxx.h>

#include <vector>

#include "sptw/coh/group.hpp"

namespace sptw::coh {

// Exact U(1)-valued k-cochain on G: values in Q/Z (v means e^{2 pi i v}),
// stored densely over G^k, always reduced to [0, 1).  Normalized means the
// value is 0 whenever any argument is the identity.
class PhaseCochain {
  public:
    PhaseCochain(const FiniteGroup& g, int arity);

    int arity() const { return k_; }
    int group_order() const { return n_; }

    const mpq_class& operator()(const std::vector<int>& args) const;
    void set(const std::vector<int>& args, const mpq_class& v);

    // raw dense storage, index = ((g1*n + g2)*n + ...) over G^k
    const std::vector<mpq_class>& values() const { return v_; }
    std::size_t index(const std::vector<int>& args) const;

    bool is_normalized() const;
    bool is_zero() const;
    PhaseCochain operator+(const PhaseCochain& o) const;
    PhaseCochain operator-(const PhaseCochain& o) const;

  private:
    int n_ = 0, k_ = 0;
    std::vector<mpq_class> v_;
};

// x mod 1 reduced to [0, 1)
mpq_class mod1(const mpq_class& x);

// (delta f)(g1..g_{k+1}) = f(g2..g_{k+1}) + sum_i (-1)^i f(..g_i g_{i+1}..)
//                          + (-1)^{k+1} f(g1..g_k), additively in Q/Z
PhaseCochain coboundary(const FiniteGroup& g, const PhaseCochain& f);

// Standard generator-scaled 3-cocycle on Z_N:
//   omega_p(a,b,c) = exp(2 pi i * p * a * floor((b+c)/N) / N)
PhaseCochain standard_cyclic_cocycle(int n, int p);

// Snap an angle (radians / 2pi, i.e. a phase fraction in [0,1)) to a rational
// with denominator <= max_den; throws ContractError if no rational is within tol.
mpq_class snap_phase(double frac, long max_den, double tol);

}  // namespace sptw::coh

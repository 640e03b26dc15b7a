#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "sptw/algebra/complex_matrix.hpp"

namespace sptw::alg {

// Deterministic xoshiro-style generator.  Used everywhere a seed is required
// so that runs are bitwise reproducible across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        s_ = seed ? seed : 0x9e3779b97f4a7c15ULL;
        for (int i = 0; i < 8; ++i) next();
    }

    std::uint64_t next() {
        s_ ^= s_ << 13;
        s_ ^= s_ >> 7;
        s_ ^= s_ << 17;
        return s_;
    }

    double uniform() {  // in [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(6.283185307179586 * u2);
        have_spare_ = true;
        return r * std::cos(6.283185307179586 * u2);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    std::vector<cdouble> complex_vector(std::size_t n) {
        std::vector<cdouble> v(n);
        for (auto& x : v) x = cdouble{gaussian(), gaussian()};
        return v;
    }

    // Haar-like random unitary: Gram-Schmidt on a complex Gaussian matrix.
    ComplexMatrix unitary(int n);

  private:
    std::uint64_t s_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace sptw::alg

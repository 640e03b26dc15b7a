#pragma once

#include <gmpxx.h>

#include <vector>

namespace sptw::alg {

// Arbitrary-precision integer matrix (GMP backed).
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static IntegerMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const mpz_class& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    IntegerMatrix operator*(const IntegerMatrix& o) const;
    IntegerMatrix transpose() const;
    bool operator==(const IntegerMatrix& o) const = default;

    mpz_class determinant() const;  // Bareiss, square only

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithResult {
    IntegerMatrix u, d, v;
    int rank = 0;
    std::vector<mpz_class> diag() const;
};

struct SmithOptions {
    bool want_u = true;
    bool want_v = true;
};

SmithResult smith_normal_form(const IntegerMatrix& m, const SmithOptions& opts = {});

}  // namespace sptw::alg

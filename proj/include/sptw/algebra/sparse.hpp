#pragma once

#include <cstdint>
#include <vector>

#include "sptw/algebra/complex_matrix.hpp"

namespace sptw::alg {

// Anything that can act on a state vector.  All implementations are
// deterministic and side-effect free.
class LinearOperator {
  public:
    virtual ~LinearOperator() = default;
    virtual std::int64_t dim() const = 0;
    // y = op * x  (y preallocated to dim, overwritten)
    virtual void apply(const std::vector<cdouble>& x, std::vector<cdouble>& y) const = 0;

    std::vector<cdouble> operator*(const std::vector<cdouble>& x) const {
        std::vector<cdouble> y(static_cast<std::size_t>(dim()));
        apply(x, y);
        return y;
    }
};

// CSR-stored sparse matrix.  Duplicate (row, col) pairs are merged at
// construction; indices are range checked.
class SparseOperator : public LinearOperator {
  public:
    struct Triplet {
        std::int64_t row, col;
        cdouble value;
    };

    SparseOperator() = default;
    SparseOperator(std::int64_t dimension, std::vector<Triplet> entries);

    std::int64_t dim() const override { return dim_; }
    void apply(const std::vector<cdouble>& x, std::vector<cdouble>& y) const override;

    std::int64_t nnz() const { return static_cast<std::int64_t>(vals_.size()); }
    std::vector<Triplet> triplets() const;
    ComplexMatrix to_dense() const;
    bool is_hermitian(double tol = 1e-12) const;

  private:
    std::int64_t dim_ = 0;
    std::vector<std::int64_t> row_ptr_;
    std::vector<std::int32_t> col_;
    std::vector<cdouble> vals_;
};

// Dense matrix viewed as a LinearOperator.
class DenseOperator : public LinearOperator {
  public:
    explicit DenseOperator(ComplexMatrix m) : m_(std::move(m)) {}
    std::int64_t dim() const override { return m_.rows(); }
    void apply(const std::vector<cdouble>& x, std::vector<cdouble>& y) const override {
        y = m_ * x;
    }

  private:
    ComplexMatrix m_;
};

}  // namespace sptw::alg

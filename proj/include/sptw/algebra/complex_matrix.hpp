#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace sptw::alg {

using cdouble = std::complex<double>;

// Largest Hilbert-space dimension any dense or sparse constructor will
// accept.  Mutable so the CLI can lower it for cheap validation runs.
std::int64_t hilbert_cap();
void set_hilbert_cap(std::int64_t cap);

// Dense complex matrix, row-major.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols) { return {rows, cols}; }
    static ComplexMatrix diag(const std::vector<double>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cdouble& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cdouble& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<cdouble>& data() const { return a_; }
    std::vector<cdouble>& data() { return a_; }
    const cdouble* row_ptr(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    cdouble trace() const;

    // max_{ij} |a_ij|
    double max_abs() const;
    double frobenius_norm() const;
    bool is_hermitian(double tol = 1e-12) const;
    bool is_unitary(double tol = 1e-12) const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cdouble s);

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<cdouble> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble s, ComplexMatrix a);

std::vector<cdouble> operator*(const ComplexMatrix& a, const std::vector<cdouble>& x);

// Tensor product, leftmost factor slowest:  (A (x) B)[(i rB + k),(j cB + l)] = A_ij B_kl.
// Throws SizeError if the result would exceed hilbert_cap().
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Vector helpers.
double vec_norm(const std::vector<cdouble>& x);
cdouble vec_dot(const std::vector<cdouble>& x, const std::vector<cdouble>& y);  // <x|y>
void vec_axpy(cdouble alpha, const std::vector<cdouble>& x, std::vector<cdouble>& y);
void vec_scale(cdouble s, std::vector<cdouble>& x);

}  // namespace sptw::alg

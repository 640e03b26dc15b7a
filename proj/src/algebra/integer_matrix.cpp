#include "sptw/algebra/integer_matrix.hpp"

#include <stdexcept>

namespace sptw::alg {

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntegerMatrix: product shape mismatch");
    IntegerMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& v = (*this)(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
        }
    return r;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

mpz_class IntegerMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    const int n = rows_;
    IntegerMatrix m = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::vector<mpz_class> SmithResult::diag() const {
    std::vector<mpz_class> out;
    for (int i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
}

SmithResult smith_normal_form(const IntegerMatrix& m0, const SmithOptions& opts) {
    const int r = m0.rows(), c = m0.cols();
    IntegerMatrix m = m0;
    IntegerMatrix u = opts.want_u ? IntegerMatrix::identity(r) : IntegerMatrix();
    IntegerMatrix v = opts.want_v ? IntegerMatrix::identity(c) : IntegerMatrix();

    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < c; ++j) std::swap(m(a, j), m(b, j));
        if (opts.want_u)
            for (int j = 0; j < r; ++j) std::swap(u(a, j), u(b, j));
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < r; ++i) std::swap(m(i, a), m(i, b));
        if (opts.want_v)
            for (int i = 0; i < c; ++i) std::swap(v(i, a), v(i, b));
    };
    auto row_addmul = [&](int dst, int src, const mpz_class& f) {  // row_dst += f * row_src
        if (f == 0) return;
        for (int j = 0; j < c; ++j) m(dst, j) += f * m(src, j);
        if (opts.want_u)
            for (int j = 0; j < r; ++j) u(dst, j) += f * u(src, j);
    };
    auto col_addmul = [&](int dst, int src, const mpz_class& f) {
        if (f == 0) return;
        for (int i = 0; i < r; ++i) m(i, dst) += f * m(i, src);
        if (opts.want_v)
            for (int i = 0; i < c; ++i) v(i, dst) += f * v(i, src);
    };
    auto row_negate = [&](int a) {
        for (int j = 0; j < c; ++j) m(a, j) = -m(a, j);
        if (opts.want_u)
            for (int j = 0; j < r; ++j) u(a, j) = -u(a, j);
    };

    const int steps = std::min(r, c);
    int t = 0;
    for (; t < steps; ++t) {
        for (;;) {
            // minimal-absolute-value pivot in the trailing block
            int pi = -1, pj = -1;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j)
                    if (m(i, j) != 0 &&
                        (pi < 0 || mpz_cmpabs(m(i, j).get_mpz_t(), m(pi, pj).get_mpz_t()) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) goto done;  // trailing block all zero
            row_swap(t, pi);
            col_swap(t, pj);
            if (m(t, t) < 0) row_negate(t);

            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (m(i, t) == 0) continue;
                mpz_class q;
                // round-to-nearest quotient keeps remainders small
                mpz_class num = 2 * m(i, t) + m(t, t);
                mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), mpz_class(2 * m(t, t)).get_mpz_t());
                row_addmul(i, t, -q);
                if (m(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (m(t, j) == 0) continue;
                mpz_class q;
                mpz_class num = 2 * m(t, j) + m(t, t);
                mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), mpz_class(2 * m(t, t)).get_mpz_t());
                col_addmul(j, t, -q);
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the whole trailing block for the chain d1|d2|...
            bool divides = true;
            for (int i = t + 1; i < r && divides; ++i)
                for (int j = t + 1; j < c && divides; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        row_addmul(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (m(t, t) < 0) row_negate(t);
    }
done:
    SmithResult res;
    res.u = std::move(u);
    res.v = std::move(v);
    res.d = std::move(m);
    res.rank = 0;
    for (int i = 0; i < steps; ++i)
        if (res.d(i, i) != 0) ++res.rank;
    return res;
}

}  // namespace sptw::alg

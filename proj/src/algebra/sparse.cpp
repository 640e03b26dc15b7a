#include "sptw/algebra/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sptw/errors.hpp"

namespace sptw::alg {

SparseOperator::SparseOperator(std::int64_t dimension, std::vector<Triplet> entries)
    : dim_(dimension) {
    if (dimension > hilbert_cap())
        throw SizeError("SparseOperator: dimension exceeds the configured Hilbert cap");
    for (const auto& t : entries) {
        if (t.row < 0 || t.row >= dim_ || t.col < 0 || t.col >= dim_)
            throw ContractError("SparseOperator: index out of range");
    }
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    row_ptr_.assign(static_cast<std::size_t>(dim_) + 1, 0);
    for (std::size_t k = 0; k < entries.size();) {
        std::size_t j = k;
        cdouble v = 0.0;
        while (j < entries.size() && entries[j].row == entries[k].row &&
               entries[j].col == entries[k].col) {
            v += entries[j].value;
            ++j;
        }
        if (v != 0.0) {
            col_.push_back(static_cast<std::int32_t>(entries[k].col));
            vals_.push_back(v);
            ++row_ptr_[static_cast<std::size_t>(entries[k].row) + 1];
        }
        k = j;
    }
    for (std::size_t r = 0; r < static_cast<std::size_t>(dim_); ++r)
        row_ptr_[r + 1] += row_ptr_[r];
}

void SparseOperator::apply(const std::vector<cdouble>& x, std::vector<cdouble>& y) const {
    for (std::size_t r = 0; r < static_cast<std::size_t>(dim_); ++r) {
        cdouble s = 0.0;
        for (std::int64_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            s += vals_[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(col_[static_cast<std::size_t>(k)])];
        y[r] = s;
    }
}

std::vector<SparseOperator::Triplet> SparseOperator::triplets() const {
    std::vector<Triplet> out;
    out.reserve(vals_.size());
    for (std::int64_t r = 0; r < dim_; ++r)
        for (std::int64_t k = row_ptr_[static_cast<std::size_t>(r)];
             k < row_ptr_[static_cast<std::size_t>(r) + 1]; ++k)
            out.push_back({r, col_[static_cast<std::size_t>(k)], vals_[static_cast<std::size_t>(k)]});
    return out;
}

ComplexMatrix SparseOperator::to_dense() const {
    ComplexMatrix m(static_cast<int>(dim_), static_cast<int>(dim_));
    for (const auto& t : triplets()) m(static_cast<int>(t.row), static_cast<int>(t.col)) += t.value;
    return m;
}

bool SparseOperator::is_hermitian(double tol) const {
    std::map<std::pair<std::int64_t, std::int64_t>, cdouble> m;
    for (const auto& t : triplets()) m[{t.row, t.col}] = t.value;
    for (const auto& [rc, v] : m) {
        auto it = m.find({rc.second, rc.first});
        const cdouble other = (it == m.end()) ? cdouble{0.0} : it->second;
        if (std::abs(v - std::conj(other)) > tol) return false;
    }
    return true;
}

}  // namespace sptw::alg

#pragma once

#include <string>
#include <vector>

namespace sptw::coh {

// Finite group given by its multiplication table.  Elements are 0..n-1 with
// 0 the identity; associativity, identity and inverse laws are checked
// exhaustively at construction.
class FiniteGroup {
  public:
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::string name = "custom");

    // zoo
    static FiniteGroup cyclic(int n);                   // Z_N
    static FiniteGroup product_cyclic(int m, int n);    // Z_M x Z_N
    static FiniteGroup dihedral(int n);                 // D_N, order 2N
    static FiniteGroup quaternion8();                   // Q_8
    static FiniteGroup symmetric3();                    // S_3

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    bool is_abelian() const;
    bool is_cyclic() const;
    const std::string& name() const { return name_; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    // canonical key for caches: name-independent serialization of the table
    std::string table_key() const;

  private:
    FiniteGroup() = default;
    int n_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::string name_;
};

}  // namespace sptw::coh

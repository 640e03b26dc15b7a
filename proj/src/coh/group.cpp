#include "sptw/coh/group.hpp"

#include <sstream>

#include "sptw/errors.hpp"

namespace sptw::coh {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw ContractError("group_from_table: empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw ContractError("group_from_table: table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw ContractError("group_from_table: entry out of range 0..n-1");
    }
    for (int a = 0; a < n; ++a) {
        if (table[0][a] != a || table[a][0] != a) {
            std::ostringstream os;
            os << "group_from_table: element 0 is not an identity at " << a;
            throw ContractError(os.str());
        }
    }
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == 0 && table[b][a] == 0) {
                inv[a] = b;
                break;
            }
        if (inv[a] < 0) {
            std::ostringstream os;
            os << "group_from_table: element " << a << " has no two-sided inverse";
            throw ContractError(os.str());
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) {
                    std::ostringstream os;
                    os << "group_from_table: associativity fails at (" << a << "," << b << ","
                       << c << ")";
                    throw ContractError(os.str());
                }
    FiniteGroup g;
    g.n_ = n;
    g.table_ = std::move(table);
    g.inv_ = std::move(inv);
    g.name_ = std::move(name);
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw ContractError("cyclic: need n >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::product_cyclic(int m, int n) {
    if (m < 1 || n < 1) throw ContractError("product_cyclic: need m, n >= 1");
    const int o = m * n;
    // element a*n + b represents (a mod m, b mod n)
    std::vector<std::vector<int>> t(o, std::vector<int>(o));
    for (int x = 0; x < o; ++x)
        for (int y = 0; y < o; ++y) {
            const int a = (x / n + y / n) % m;
            const int b = (x % n + y % n) % n;
            t[x][y] = a * n + b;
        }
    return from_table(std::move(t), "Z" + std::to_string(m) + "xZ" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1) throw ContractError("dihedral: need n >= 1");
    const int o = 2 * n;
    // element s*n + r = (rotation r) * (reflection^s); (r1,s1)(r2,s2) with
    // s r s = r^{-1}:  (r1, 0)(r2, s2) = (r1+r2, s2);  (r1, 1)(r2, s2) = (r1-r2, 1-s2... )
    // use the semidirect rule (r1,s1)*(r2,s2) = (r1 + (-1)^{s1} r2, s1+s2)
    std::vector<std::vector<int>> t(o, std::vector<int>(o));
    for (int x = 0; x < o; ++x)
        for (int y = 0; y < o; ++y) {
            const int r1 = x % n, s1 = x / n;
            const int r2 = y % n, s2 = y / n;
            const int r = ((s1 ? (r1 - r2) : (r1 + r2)) % n + n) % n;
            const int s = (s1 + s2) % 2;
            t[x][y] = s * n + r;
        }
    return from_table(std::move(t), "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::quaternion8() {
    // elements: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    // encode q = (sign, axis) with axis in {1, i, j, k}
    auto enc = [](int sign, int axis) {
        static const int idx[4] = {0, 2, 4, 6};
        return idx[axis] + (sign < 0 ? 1 : 0);
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    // quaternion unit multiplication table over {1,i,j,k} with sign
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            const int a1 = x / 2, s1 = (x % 2) ? -1 : 1;
            const int a2 = y / 2, s2 = (y % 2) ? -1 : 1;
            t[x][y] = enc(s1 * s2 * sg[a1][a2], ax[a1][a2]);
        }
    return from_table(std::move(t), "Q8");
}

FiniteGroup FiniteGroup::symmetric3() {
    // permutations of {0,1,2}; element 0 = identity
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                    {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto find = [](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            int comp[3];  // (x*y)(i) = x(y(i))
            for (int i = 0; i < 3; ++i) comp[i] = perms[x][perms[y][i]];
            t[x][y] = find(comp);
        }
    return from_table(std::move(t), "S3");
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

bool FiniteGroup::is_cyclic() const {
    if (n_ == 1) return true;
    for (int g = 1; g < n_; ++g) {
        int x = g, ord = 1;
        while (x != 0) {
            x = table_[x][g];
            ++ord;
        }
        if (ord == n_) return true;
    }
    return false;
}

std::string FiniteGroup::table_key() const {
    std::ostringstream os;
    os << n_ << ":";
    for (const auto& row : table_)
        for (int v : row) os << v << ",";
    return os.str();
}

}  // namespace sptw::coh

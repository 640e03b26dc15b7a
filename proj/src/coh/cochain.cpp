#include "sptw/coh/cochain.hpp"

#include <cmath>
#include <cstdlib>

#include "sptw/errors.hpp"

namespace sptw::coh {

mpq_class mod1(const mpq_class& x) {
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpq_class out(r, den);
    out.canonicalize();
    return out;
}

namespace {
std::size_t pow_sz(int n, int k) {
    std::size_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<std::size_t>(n);
    return r;
}
}  // namespace

PhaseCochain::PhaseCochain(const FiniteGroup& g, int arity)
    : n_(g.order()), k_(arity), v_(pow_sz(g.order(), arity)) {
    if (arity < 1) throw ContractError("PhaseCochain: arity >= 1 required");
}

std::size_t PhaseCochain::index(const std::vector<int>& args) const {
    if (static_cast<int>(args.size()) != k_)
        throw ContractError("PhaseCochain: wrong number of arguments");
    std::size_t idx = 0;
    for (int a : args) {
        if (a < 0 || a >= n_) throw ContractError("PhaseCochain: argument out of range");
        idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a);
    }
    return idx;
}

const mpq_class& PhaseCochain::operator()(const std::vector<int>& args) const {
    return v_[index(args)];
}

void PhaseCochain::set(const std::vector<int>& args, const mpq_class& v) {
    v_[index(args)] = mod1(v);
}

bool PhaseCochain::is_normalized() const {
    std::vector<int> args(k_, 0);
    const std::size_t total = v_.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t t = idx;
        bool has_id = false;
        for (int i = k_ - 1; i >= 0; --i) {
            if (t % n_ == 0) has_id = true;
            t /= n_;
        }
        if (has_id && v_[idx] != 0) return false;
    }
    return true;
}

bool PhaseCochain::is_zero() const {
    for (const auto& x : v_)
        if (x != 0) return false;
    return true;
}

PhaseCochain PhaseCochain::operator+(const PhaseCochain& o) const {
    if (n_ != o.n_ || k_ != o.k_) throw ContractError("PhaseCochain: shape mismatch");
    PhaseCochain out = *this;
    for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] = mod1(v_[i] + o.v_[i]);
    return out;
}

PhaseCochain PhaseCochain::operator-(const PhaseCochain& o) const {
    if (n_ != o.n_ || k_ != o.k_) throw ContractError("PhaseCochain: shape mismatch");
    PhaseCochain out = *this;
    for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] = mod1(v_[i] - o.v_[i]);
    return out;
}

PhaseCochain coboundary(const FiniteGroup& g, const PhaseCochain& f) {
    const int k = f.arity();
    const int n = g.order();
    if (n != g.order() || f.group_order() != n)
        throw ContractError("coboundary: cochain/group mismatch");
    PhaseCochain out(g, k + 1);
    std::vector<int> args(k + 1, 0);
    std::vector<int> sub(k);
    while (true) {
        mpq_class acc = 0;
        // drop-first term
        for (int i = 0; i < k; ++i) sub[i] = args[i + 1];
        acc += f(sub);
        // merge terms
        int sign = -1;
        for (int i = 0; i < k; ++i) {
            int t = 0;
            for (int j = 0; j < k + 1; ++j) {
                if (j == i) {
                    sub[t++] = g.mul(args[i], args[i + 1]);
                    ++j;  // consumed both factors
                } else {
                    sub[t++] = args[j];
                }
            }
            acc += sign * f(sub);
            sign = -sign;
        }
        // drop-last term
        for (int i = 0; i < k; ++i) sub[i] = args[i];
        acc += sign * f(sub);
        out.set(args, acc);
        // advance odometer
        int pos = k;
        while (pos >= 0 && ++args[pos] == n) args[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

PhaseCochain standard_cyclic_cocycle(int n, int p) {
    if (n < 1) throw ContractError("standard_cyclic_cocycle: need n >= 1");
    FiniteGroup g = FiniteGroup::cyclic(n);
    PhaseCochain out(g, 3);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const long carry = (b + c) / n;
                mpq_class v(static_cast<long>(p) * a * carry, n);
                v.canonicalize();
                out.set({a, b, c}, v);
            }
    return out;
}

mpq_class snap_phase(double frac, long max_den, double tol) {
    frac -= std::floor(frac);
    // continued-fraction convergents of frac with denominator cap
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = frac;
    for (int it = 0; it < 64; ++it) {
        const double fa = std::floor(x);
        const long a = static_cast<long>(fa);
        const long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double rem = x - fa;
        if (rem < 1e-15) break;
        x = 1.0 / rem;
    }
    if (q1 <= 0) throw ContractError("snap_phase: no rational approximation found");
    const double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - frac) > tol && std::abs(approx - frac - 1.0) > tol)
        throw ContractError("snap_phase: phase is not rational within tolerance");
    mpq_class out(p1, q1);
    out.canonicalize();
    return mod1(out);
}

}  // namespace sptw::coh

#include "sptw/mps/mps.hpp"

#include <cmath>
#include <complex>

#include "sptw/algebra/eig.hpp"
#include "sptw/errors.hpp"

namespace sptw::mps {

bool MPSTensor::right_canonical_ok(double tol) const {
    ComplexMatrix s(bond, bond);
    for (const ComplexMatrix& m : a) s += m * m.adjoint();
    s -= ComplexMatrix::identity(bond);
    return s.max_abs() <= tol;
}

namespace {

int infer_site_dimension(std::size_t size, int length) {
    for (int d = 1; d <= 64; ++d) {
        std::size_t total = 1;
        bool over = false;
        for (int k = 0; k < length; ++k) {
            total *= static_cast<std::size_t>(d);
            if (total > size) {
                over = true;
                break;
            }
        }
        if (!over && total == size) return d;
        if (d > 1 && over) break;
    }
    throw ContractError("state vector size is not d^L for any site dimension d");
}

}  // namespace

MPSChain mps_from_vector(const std::vector<cdouble>& psi, const model::Region& region, int d_max,
                         double tol) {
    const int length = region.length();
    if (length < 1) throw ContractError("mps_from_vector: empty region");
    if (d_max < 1) throw ContractError("mps_from_vector: bond cap must be positive");
    const int d = infer_site_dimension(psi.size(), length);
    if (std::abs(alg::vec_norm(psi) - 1.0) > 1e-8)
        throw ContractError("mps_from_vector: state vector must be normalized");

    MPSChain out;
    out.sites.resize(static_cast<std::size_t>(length));

    // cur holds the unfactored amplitude over sites 0..k-1 (rows, site 0
    // slowest) against the bond to site k (cols).
    ComplexMatrix cur(static_cast<int>(psi.size()), 1);
    for (std::size_t i = 0; i < psi.size(); ++i) cur(static_cast<int>(i), 0) = psi[i];

    double discarded = 0.0;
    for (int site = length - 1; site >= 1; --site) {
        const int r = cur.cols();
        const int rows = cur.rows() / d;
        ComplexMatrix m(rows, d * r);
        for (int x = 0; x < rows; ++x)
            for (int i = 0; i < d; ++i)
                for (int b = 0; b < r; ++b) m(x, i * r + b) = cur(x * d + i, b);

        alg::SvdResult f = alg::svd(m);
        const int full = static_cast<int>(f.s.size());
        int keep = full < d_max ? full : d_max;
        for (int j = keep; j < full; ++j) discarded += f.s[j] * f.s[j];
        if (discarded > tol * tol) out.truncated = true;  // cap forced past the budget
        while (keep > 1 && discarded + f.s[keep - 1] * f.s[keep - 1] <= tol * tol) {
            discarded += f.s[keep - 1] * f.s[keep - 1];
            --keep;
        }

        SiteTensor& t = out.sites[static_cast<std::size_t>(site)];
        t.dl = keep;
        t.d = d;
        t.dr = r;
        t.a.assign(static_cast<std::size_t>(d), ComplexMatrix(keep, r));
        for (int i = 0; i < d; ++i)
            for (int al = 0; al < keep; ++al)
                for (int b = 0; b < r; ++b) t.a[static_cast<std::size_t>(i)](al, b) =
                    std::conj(f.v(i * r + b, al));
        if (keep > out.max_bond) out.max_bond = keep;

        ComplexMatrix next(rows, keep);
        for (int x = 0; x < rows; ++x)
            for (int al = 0; al < keep; ++al) next(x, al) = f.u(x, al) * f.s[al];
        cur = std::move(next);
    }

    SiteTensor& first = out.sites[0];
    first.dl = 1;
    first.d = d;
    first.dr = cur.cols();
    first.a.assign(static_cast<std::size_t>(d), ComplexMatrix(1, cur.cols()));
    for (int i = 0; i < d; ++i)
        for (int b = 0; b < cur.cols(); ++b) first.a[static_cast<std::size_t>(i)](0, b) =
            cur(i, b);

    out.truncation_error = std::sqrt(discarded);
    std::vector<cdouble> rec = contract_chain(out);
    const double nrm = alg::vec_norm(rec);
    out.fidelity = nrm > 0 ? std::abs(alg::vec_dot(psi, rec)) / nrm : 0.0;
    return out;
}

std::vector<cdouble> contract_chain(const MPSChain& chain) {
    if (chain.sites.empty()) throw ContractError("contract_chain: empty chain");
    const SiteTensor& s0 = chain.sites[0];
    ComplexMatrix p(s0.d, s0.dr);
    for (int i = 0; i < s0.d; ++i)
        for (int b = 0; b < s0.dr; ++b) p(i, b) = s0.a[static_cast<std::size_t>(i)](0, b);

    for (std::size_t k = 1; k < chain.sites.size(); ++k) {
        const SiteTensor& t = chain.sites[k];
        if (t.dl != p.cols()) throw ContractError("contract_chain: bond mismatch");
        ComplexMatrix next(p.rows() * t.d, t.dr);
        for (int x = 0; x < p.rows(); ++x)
            for (int i = 0; i < t.d; ++i) {
                const ComplexMatrix& b = t.a[static_cast<std::size_t>(i)];
                for (int al = 0; al < t.dl; ++al) {
                    const cdouble px = p(x, al);
                    if (px == cdouble{}) continue;
                    for (int be = 0; be < t.dr; ++be) next(x * t.d + i, be) += px * b(al, be);
                }
            }
        p = std::move(next);
    }
    if (p.cols() != 1) throw ContractError("contract_chain: chain does not close to a vector");
    std::vector<cdouble> out(static_cast<std::size_t>(p.rows()));
    for (int i = 0; i < p.rows(); ++i) out[static_cast<std::size_t>(i)] = p(i, 0);
    return out;
}

MPSTensor bulk_tensor(const MPSChain& chain, int site) {
    if (site < 0 || site >= static_cast<int>(chain.sites.size()))
        throw ContractError("bulk_tensor: site out of range");
    const SiteTensor& t = chain.sites[static_cast<std::size_t>(site)];
    if (t.dl != t.dr) throw ContractError("bulk_tensor: site tensor is not square across bonds");
    MPSTensor a;
    a.d = t.d;
    a.bond = t.dl;
    a.a = t.a;
    a.form = a.right_canonical_ok(1e-6) ? Canonical::right : Canonical::none;
    return a;
}

MPSTensor aklt_tensor() {
    MPSTensor a;
    a.d = 3;
    a.bond = 2;
    a.a.assign(3, ComplexMatrix(2, 2));
    const double r23 = std::sqrt(2.0 / 3.0);
    const double r13 = std::sqrt(1.0 / 3.0);
    a.a[0](0, 1) = r23;   // A_+ = sqrt(2/3) sigma^+
    a.a[1](0, 0) = -r13;  // A_0 = -sqrt(1/3) sigma_z
    a.a[1](1, 1) = r13;
    a.a[2](1, 0) = -r23;  // A_- = -sqrt(2/3) sigma^-
    a.form = Canonical::right;
    return a;
}

MPSTensor product_tensor(const std::vector<cdouble>& v) {
    if (std::abs(alg::vec_norm(v) - 1.0) > 1e-10)
        throw ContractError("product_tensor: physical vector must be normalized");
    MPSTensor a;
    a.d = static_cast<int>(v.size());
    a.bond = 1;
    a.a.assign(v.size(), ComplexMatrix(1, 1));
    for (std::size_t i = 0; i < v.size(); ++i) a.a[i](0, 0) = v[i];
    a.form = Canonical::right;
    return a;
}

ComplexMatrix transfer_matrix(const MPSTensor& a, const ComplexMatrix* twist) {
    const int d = a.d, bond = a.bond;
    if (twist && (twist->rows() != d || twist->cols() != d))
        throw ContractError("transfer_matrix: twist dimension mismatch");
    ComplexMatrix e(bond * bond, bond * bond);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            cdouble t = (i == j) ? cdouble{1.0} : cdouble{};
            if (twist) t = (*twist)(i, j);
            if (t == cdouble{}) continue;
            const ComplexMatrix& aj = a.a[static_cast<std::size_t>(j)];
            const ComplexMatrix& ai = a.a[static_cast<std::size_t>(i)];
            for (int al = 0; al < bond; ++al)
                for (int alp = 0; alp < bond; ++alp)
                    for (int be = 0; be < bond; ++be)
                        for (int bep = 0; bep < bond; ++bep)
                            e(al * bond + alp, be * bond + bep) +=
                                t * aj(al, be) * std::conj(ai(alp, bep));
        }
    }
    return e;
}

MPSTensor block_sites(const MPSTensor& a, int n) {
    if (n < 1) throw ContractError("block_sites: need at least one site");
    MPSTensor out = a;
    for (int step = 1; step < n; ++step) {
        MPSTensor next;
        next.d = out.d * a.d;
        next.bond = a.bond;
        next.a.reserve(static_cast<std::size_t>(next.d));
        for (int i = 0; i < out.d; ++i)
            for (int j = 0; j < a.d; ++j)
                next.a.push_back(out.a[static_cast<std::size_t>(i)] *
                                 a.a[static_cast<std::size_t>(j)]);
        next.form = out.form == Canonical::right && a.form == Canonical::right
                        ? Canonical::right
                        : Canonical::none;
        out = std::move(next);
    }
    return out;
}

nlohmann::json tensor_to_json(const MPSTensor& a) {
    nlohmann::json j;
    j["d"] = a.d;
    j["bond"] = a.bond;
    j["canonical"] = a.form == Canonical::right  ? "right"
                     : a.form == Canonical::left ? "left"
                                                 : "none";
    nlohmann::json data = nlohmann::json::array();
    for (const ComplexMatrix& m : a.a)
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                data.push_back({m(r, c).real(), m(r, c).imag()});
    j["data"] = std::move(data);
    return j;
}

MPSTensor tensor_from_json(const nlohmann::json& j) {
    MPSTensor a;
    a.d = j.at("d").get<int>();
    a.bond = j.at("bond").get<int>();
    if (a.d < 1 || a.bond < 1) throw ContractError("tensor_from_json: bad dimensions");
    const std::string form = j.value("canonical", "none");
    a.form = form == "right" ? Canonical::right : form == "left" ? Canonical::left
                                                                 : Canonical::none;
    const nlohmann::json& data = j.at("data");
    if (static_cast<int>(data.size()) != a.d * a.bond * a.bond)
        throw ContractError("tensor_from_json: data length mismatch");
    a.a.assign(static_cast<std::size_t>(a.d), ComplexMatrix(a.bond, a.bond));
    std::size_t p = 0;
    for (int i = 0; i < a.d; ++i)
        for (int r = 0; r < a.bond; ++r)
            for (int c = 0; c < a.bond; ++c, ++p)
                a.a[static_cast<std::size_t>(i)](r, c) = {data[p][0].get<double>(),
                                                          data[p][1].get<double>()};
    return a;
}

}  // namespace sptw::mps

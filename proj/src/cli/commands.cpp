#include "sptw/cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sptw/algebra/eig.hpp"
#include "sptw/algebra/spin.hpp"
#include "sptw/coh/cohomology.hpp"
#include "sptw/errors.hpp"
#include "sptw/model/interaction.hpp"
#include "sptw/model/symmetry.hpp"
#include "sptw/mps/mps.hpp"
#include "sptw/mps/spt.hpp"
#include "sptw/spectra/dynamics.hpp"
#include "sptw/spectra/spectra.hpp"

namespace sptw::cli {

namespace {

using nlohmann::json;
using alg::ComplexMatrix;
using alg::cdouble;

void require_keys(const json& j, std::initializer_list<const char*> allowed,
                  const std::string& ctx) {
    if (!j.is_object()) throw ConfigError(ctx + ": expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) {
                ok = true;
                break;
            }
        if (!ok) throw ConfigError(ctx + ": unknown key \"" + key + "\"");
    }
}

const json& need(const json& j, const char* key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end()) throw ConfigError(ctx + ": missing required key \"" + key + "\"");
    return *it;
}

template <typename T>
T get_as(const json& j, const char* key, const std::string& ctx) {
    try {
        return need(j, key, ctx).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(ctx + ": bad value for \"" + key + "\": " + e.what());
    }
}

model::Boundary parse_boundary(const json& j, const std::string& ctx) {
    const std::string b = get_as<std::string>(j, "boundary", ctx);
    if (b == "open") return model::Boundary::open;
    if (b == "periodic") return model::Boundary::periodic;
    throw ConfigError(ctx + ": boundary must be \"open\" or \"periodic\"");
}

model::Interaction parse_model(const json& j) {
    const std::string ctx = "model";
    const std::string name = get_as<std::string>(j, "name", ctx);
    if (name == "heisenberg") {
        require_keys(j, {"name", "site_dimension"}, ctx);
        return model::heisenberg(get_as<int>(j, "site_dimension", ctx));
    }
    if (name == "aklt") {
        require_keys(j, {"name"}, ctx);
        return model::aklt();
    }
    if (name == "transverse_ising") {
        require_keys(j, {"name", "field"}, ctx);
        return model::transverse_ising(get_as<double>(j, "field", ctx));
    }
    if (name == "trivial_onsite") {
        require_keys(j, {"name", "energies"}, ctx);
        return model::trivial_onsite(get_as<std::vector<double>>(j, "energies", ctx));
    }
    throw ConfigError("model: unknown model \"" + name + "\"");
}

spectra::SolveOptions parse_solver(const json& j) {
    const std::string ctx = "solver";
    require_keys(j, {"method", "seed", "degeneracy_tol"}, ctx);
    spectra::SolveOptions opts;
    const std::string m = get_as<std::string>(j, "method", ctx);
    if (m == "dense")
        opts.method = spectra::SolveMethod::dense;
    else if (m == "lanczos")
        opts.method = spectra::SolveMethod::lanczos;
    else if (m == "auto")
        opts.method = spectra::SolveMethod::automatic;
    else
        throw ConfigError(ctx + ": method must be dense, lanczos, or auto");
    opts.seed = get_as<std::uint64_t>(j, "seed", ctx);  // mandatory, defaults forbidden
    if (j.contains("degeneracy_tol")) {
        opts.degeneracy_tol = get_as<double>(j, "degeneracy_tol", ctx);
        if (opts.degeneracy_tol <= 0) throw ConfigError(ctx + ": degeneracy_tol must be positive");
    }
    return opts;
}

coh::FiniteGroup parse_group(const json& j) {
    const std::string ctx = "group";
    if (j.contains("file")) {
        require_keys(j, {"file"}, ctx);
        const std::string path = get_as<std::string>(j, "file", ctx);
        std::ifstream in(path);
        if (!in) throw ConfigError(ctx + ": cannot open \"" + path + "\"");
        json g;
        try {
            in >> g;
        } catch (const json::exception& e) {
            throw ConfigError(ctx + ": bad JSON in \"" + path + "\": " + e.what());
        }
        require_keys(g, {"name", "table"}, ctx);
        return coh::FiniteGroup::from_table(
            get_as<std::vector<std::vector<int>>>(g, "table", ctx), g.value("name", "custom"));
    }
    if (j.contains("table")) {
        require_keys(j, {"table", "name"}, ctx);
        return coh::FiniteGroup::from_table(get_as<std::vector<std::vector<int>>>(j, "table", ctx),
                                            j.value("name", "custom"));
    }
    const std::string name = get_as<std::string>(j, "name", ctx);
    if (name == "cyclic") {
        require_keys(j, {"name", "n"}, ctx);
        return coh::FiniteGroup::cyclic(get_as<int>(j, "n", ctx));
    }
    if (name == "product_cyclic") {
        require_keys(j, {"name", "m", "n"}, ctx);
        return coh::FiniteGroup::product_cyclic(get_as<int>(j, "m", ctx),
                                                get_as<int>(j, "n", ctx));
    }
    if (name == "dihedral") {
        require_keys(j, {"name", "n"}, ctx);
        return coh::FiniteGroup::dihedral(get_as<int>(j, "n", ctx));
    }
    if (name == "quaternion8") {
        require_keys(j, {"name"}, ctx);
        return coh::FiniteGroup::quaternion8();
    }
    if (name == "symmetric3") {
        require_keys(j, {"name"}, ctx);
        return coh::FiniteGroup::symmetric3();
    }
    throw ConfigError(ctx + ": unknown group \"" + name + "\"");
}

ComplexMatrix parse_matrix(const json& j, const std::string& ctx) {
    if (!j.is_array() || j.empty()) throw ConfigError(ctx + ": expected a matrix (array of rows)");
    const int n = static_cast<int>(j.size());
    ComplexMatrix m(n, static_cast<int>(j[0].size()));
    for (int r = 0; r < n; ++r) {
        const json& row = j[r];
        if (static_cast<int>(row.size()) != m.cols())
            throw ConfigError(ctx + ": ragged matrix rows");
        for (int c = 0; c < m.cols(); ++c) {
            const json& e = row[c];
            if (!e.is_array() || e.size() != 2)
                throw ConfigError(ctx + ": matrix entries must be [re, im] pairs");
            m(r, c) = {e[0].get<double>(), e[1].get<double>()};
        }
    }
    return m;
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix named_site_operator(const std::string& name, int d, const std::string& ctx) {
    const alg::SpinMatrices s = alg::spin_matrices(d);
    if (name == "sx") return s.sx;
    if (name == "sy") return s.sy;
    if (name == "sz") return s.sz;
    throw ConfigError(ctx + ": unknown operator \"" + name + "\" (expected sx, sy, or sz)");
}

coh::PhaseCochain cochain_from_strings(const coh::FiniteGroup& g, int arity,
                                       const std::vector<std::string>& vals,
                                       const std::string& ctx) {
    coh::PhaseCochain f(g, arity);
    std::size_t expect = 1;
    for (int k = 0; k < arity; ++k) expect *= static_cast<std::size_t>(g.order());
    if (vals.size() != expect)
        throw ConfigError(ctx + ": expected " + std::to_string(expect) + " phase values");
    std::vector<int> args(static_cast<std::size_t>(arity), 0);
    for (std::size_t idx = 0; idx < vals.size(); ++idx) {
        std::size_t rest = idx;
        for (int k = arity - 1; k >= 0; --k) {
            args[static_cast<std::size_t>(k)] = static_cast<int>(rest % g.order());
            rest /= static_cast<std::size_t>(g.order());
        }
        mpq_class q;
        if (q.set_str(vals[idx], 10) != 0 || q.get_den() == 0)
            throw ConfigError(ctx + ": bad rational phase \"" + vals[idx] + "\"");
        q.canonicalize();
        f.set(args, q);
    }
    return f;
}

json class_to_json(const coh::CohomologyClass& c) {
    return {{"degree", c.degree},
            {"factors", c.factors},
            {"coordinates", c.coordinates},
            {"trivial", c.trivial()}};
}

json cocycle_table(const mps::CocycleData& c) {
    json t;
    t["residual"] = c.residual;
    t["snapped"] = c.snapped;
    json vals = json::array();
    for (cdouble v : c.values) vals.push_back({v.real(), v.imag()});
    t["values"] = std::move(vals);
    if (c.snapped && c.phases) {
        json ph = json::array();
        for (const mpq_class& q : c.phases->values()) ph.push_back(q.get_str());
        t["phases"] = std::move(ph);
    }
    return t;
}

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json envelope(const std::string& command, const json& config, json results, json warnings,
              double wall) {
    return {{"schema_version", schema_version}, {"tool_version", tool_version},
            {"command", command},               {"config", config},
            {"wall_time_s", wall},              {"results", std::move(results)},
            {"warnings", std::move(warnings)}};
}

}  // namespace

json cmd_gap(const json& config) {
    Stopwatch sw;
    require_keys(config, {"model", "lengths", "boundary", "solver"}, "gap");
    model::Interaction phi = parse_model(need(config, "model", "gap"));
    const auto lengths = get_as<std::vector<int>>(config, "lengths", "gap");
    if (lengths.empty()) throw ConfigError("gap: lengths must be nonempty");
    const model::Boundary bc = parse_boundary(config, "gap");
    const spectra::SolveOptions opts = parse_solver(need(config, "solver", "gap"));

    spectra::GapScan scan = spectra::gap_scan(phi, lengths, bc, opts);
    json rows = json::array();
    for (const spectra::GapScanRow& r : scan.rows)
        rows.push_back({{"length", r.length},
                        {"e0", r.e0},
                        {"gap", r.gap},
                        {"degeneracy", r.degeneracy}});
    return envelope("gap", config, {{"rows", std::move(rows)}, {"gap_slope", scan.gap_slope}},
                    json::array(), sw.seconds());
}

json cmd_correlations(const json& config) {
    Stopwatch sw;
    require_keys(config,
                 {"model", "length", "boundary", "solver", "site_a", "operator_a", "operator_b",
                  "distances", "vector_index"},
                 "correlations");
    model::Interaction phi = parse_model(need(config, "model", "correlations"));
    const int length = get_as<int>(config, "length", "correlations");
    const model::Boundary bc = parse_boundary(config, "correlations");
    const spectra::SolveOptions opts = parse_solver(need(config, "solver", "correlations"));
    const int site_a = get_as<int>(config, "site_a", "correlations");
    const auto distances = get_as<std::vector<int>>(config, "distances", "correlations");
    if (distances.empty()) throw ConfigError("correlations: distances must be nonempty");
    const int vector_index =
        config.contains("vector_index") ? get_as<int>(config, "vector_index", "correlations") : -1;
    const ComplexMatrix op_a = named_site_operator(
        get_as<std::string>(config, "operator_a", "correlations"), phi.site_dimension(),
        "correlations");
    const ComplexMatrix op_b = named_site_operator(
        get_as<std::string>(config, "operator_b", "correlations"), phi.site_dimension(),
        "correlations");

    model::Region reg{0, length - 1, bc};
    spectra::SpectralData s = spectra::solve_ground(phi, reg, 2, opts);
    json rows = json::array();
    std::vector<int> rs;
    std::vector<double> vals;
    for (int r : distances) {
        const cdouble c =
            spectra::connected_correlation(s, op_a, site_a, op_b, site_a + r, vector_index);
        rows.push_back({{"r", r}, {"re", c.real()}, {"im", c.imag()}});
        rs.push_back(r);
        vals.push_back(std::abs(c));
    }
    spectra::DecayFit fit = spectra::fit_decay(rs, vals);
    json warnings = json::array();
    if (fit.degenerate) warnings.push_back("decay fit degenerate: fewer than 3 nonzero values");
    if (fit.window_shrunk) warnings.push_back("decay fit window shrunk: zero values dropped");
    return envelope("correlations", config,
                    {{"e0", s.energies[0]},
                     {"gap", s.gap},
                     {"degeneracy", s.ground_degeneracy},
                     {"rows", std::move(rows)},
                     {"fit",
                      {{"mu", fit.mu},
                       {"c", fit.c},
                       {"residual", fit.residual},
                       {"degenerate", fit.degenerate},
                       {"window_shrunk", fit.window_shrunk}}}},
                    std::move(warnings), sw.seconds());
}

namespace {

mps::MPSTensor parse_state(const json& j, json& warnings) {
    const std::string ctx = "state";
    const std::string type = get_as<std::string>(j, "type", ctx);
    if (type == "aklt") {
        require_keys(j, {"type"}, ctx);
        return mps::aklt_tensor();
    }
    if (type == "product") {
        require_keys(j, {"type", "vector"}, ctx);
        const json& v = need(j, "vector", ctx);
        std::vector<cdouble> vec;
        for (const json& e : v) {
            if (!e.is_array() || e.size() != 2)
                throw ConfigError(ctx + ": vector entries must be [re, im] pairs");
            vec.push_back({e[0].get<double>(), e[1].get<double>()});
        }
        const double n = alg::vec_norm(vec);
        if (n <= 0) throw ConfigError(ctx + ": zero vector");
        alg::vec_scale(1.0 / n, vec);
        return mps::product_tensor(vec);
    }
    if (type == "file") {
        require_keys(j, {"type", "path"}, ctx);
        const std::string path = get_as<std::string>(j, "path", ctx);
        std::ifstream in(path);
        if (!in) throw ConfigError(ctx + ": cannot open \"" + path + "\"");
        json t;
        try {
            in >> t;
        } catch (const json::exception& e) {
            throw ConfigError(ctx + ": bad JSON in \"" + path + "\": " + e.what());
        }
        try {
            return mps::tensor_from_json(t);
        } catch (const ContractError& e) {
            throw ConfigError(ctx + ": " + e.what());
        }
    }
    if (type == "ed") {
        require_keys(j,
                     {"type", "model", "length", "boundary", "solver", "bond_cap", "tol",
                      "vector_index", "block_pair"},
                     ctx);
        model::Interaction phi = parse_model(need(j, "model", ctx));
        const int length = get_as<int>(j, "length", ctx);
        if (length < 4) throw ConfigError(ctx + ": ed state needs length >= 4");
        const model::Boundary bc = parse_boundary(j, ctx);
        if (bc != model::Boundary::open)
            throw ConfigError(ctx + ": ed compression works on open chains");
        const spectra::SolveOptions opts = parse_solver(need(j, "solver", ctx));
        const int bond_cap = get_as<int>(j, "bond_cap", ctx);
        const double tol = get_as<double>(j, "tol", ctx);
        if (tol <= 0) throw ConfigError(ctx + ": tol must be positive");
        const int vector_index =
            j.contains("vector_index") ? get_as<int>(j, "vector_index", ctx) : -1;
        const bool block_pair = j.value("block_pair", false);

        model::Region reg{0, length - 1, bc};
        spectra::SpectralData s = spectra::solve_ground(phi, reg, 1 + std::max(0, vector_index),
                                                        opts);
        if (vector_index < 0 && s.ground_degeneracy > 1)
            throw AmbiguityError(
                "ed state: ground space is degenerate; select a vector_index explicitly");
        const int pick = vector_index < 0 ? 0 : vector_index;
        std::vector<cdouble> psi(static_cast<std::size_t>(s.vectors.rows()));
        for (int i = 0; i < s.vectors.rows(); ++i) psi[static_cast<std::size_t>(i)] =
            s.vectors(i, pick);
        mps::MPSChain chain = mps::mps_from_vector(psi, reg, bond_cap, tol);
        if (chain.truncated)
            warnings.push_back("ed state: truncation tolerance unreachable at bond cap, error " +
                               std::to_string(chain.truncation_error));
        if (!block_pair) return mps::bulk_tensor(chain, length / 2);
        mps::MPSTensor m1 = mps::bulk_tensor(chain, length / 2 - 1);
        mps::MPSTensor m2 = mps::bulk_tensor(chain, length / 2);
        mps::MPSTensor out;
        out.d = m1.d * m2.d;
        out.bond = m1.bond;
        for (int i = 0; i < m1.d; ++i)
            for (int k = 0; k < m2.d; ++k)
                out.a.push_back(m1.a[static_cast<std::size_t>(i)] *
                                m2.a[static_cast<std::size_t>(k)]);
        out.form = out.right_canonical_ok(1e-6) ? mps::Canonical::right : mps::Canonical::none;
        return out;
    }
    throw ConfigError(ctx + ": unknown state type \"" + type + "\"");
}

model::SymmetryAction parse_symmetry(const json& j, int site_dimension, bool blocked) {
    const std::string ctx = "symmetry";
    require_keys(j, {"group", "representation"}, ctx);
    coh::FiniteGroup group = parse_group(need(j, "group", ctx));
    const json& rep = need(j, "representation", ctx);
    std::vector<ComplexMatrix> mats;
    if (rep.contains("name")) {
        require_keys(rep, {"name"}, ctx);
        const std::string name = rep["name"].get<std::string>();
        if (name == "spin1_pi_rotations") {
            if (group.order() != 4 || group.is_cyclic())
                throw ConfigError(ctx + ": spin1_pi_rotations needs the Z2xZ2 group");
            const alg::SpinMatrices s = alg::spin_matrices(3);
            auto rot = [&](const ComplexMatrix& sa) {
                return alg::hermitian_exp_i(std::numbers::pi * sa);
            };
            mats = {ComplexMatrix::identity(3), rot(s.sx), rot(s.sz), rot(s.sy)};
        } else {
            throw ConfigError(ctx + ": unknown representation \"" + name + "\"");
        }
    } else {
        require_keys(rep, {"matrices"}, ctx);
        const json& arr = need(rep, "matrices", ctx);
        if (static_cast<int>(arr.size()) != group.order())
            throw ConfigError(ctx + ": need one matrix per group element");
        for (const json& m : arr) mats.push_back(parse_matrix(m, ctx));
    }
    if (blocked) {
        for (ComplexMatrix& m : mats) m = alg::kron(m, m);
    }
    if (!mats.empty() && mats[0].rows() != site_dimension)
        throw ConfigError(ctx + ": representation dimension " + std::to_string(mats[0].rows()) +
                          " does not match the state's physical dimension " +
                          std::to_string(site_dimension));
    return model::SymmetryAction(std::move(group), std::move(mats));
}

}  // namespace

json cmd_spt_index(const json& config) {
    Stopwatch sw;
    require_keys(config, {"state", "symmetry", "gauge"}, "spt-index");
    json warnings = json::array();
    mps::MPSTensor a = parse_state(need(config, "state", "spt-index"), warnings);

    const json& state = config["state"];
    const bool blocked = state.value("type", "") == "ed" && state.value("block_pair", false);
    model::SymmetryAction action = parse_symmetry(need(config, "symmetry", "spt-index"), a.d,
                                                  blocked);

    const json& gj = need(config, "gauge", "spt-index");
    require_keys(gj, {"seed", "residual_tol", "invariance_tol", "injectivity_gap", "scalar_tol",
                      "snap_tol"},
                 "gauge");
    mps::GaugeOptions opts;
    opts.seed = get_as<std::uint64_t>(gj, "seed", "gauge");  // mandatory
    if (gj.contains("residual_tol")) opts.residual_tol = gj["residual_tol"].get<double>();
    if (gj.contains("invariance_tol")) opts.invariance_tol = gj["invariance_tol"].get<double>();
    if (gj.contains("injectivity_gap")) opts.injectivity_gap = gj["injectivity_gap"].get<double>();
    const double scalar_tol = gj.value("scalar_tol", 1e-8);
    const double snap_tol = gj.value("snap_tol", 1e-6);
    if (opts.residual_tol <= 0 || opts.invariance_tol <= 0 || opts.injectivity_gap <= 0 ||
        scalar_tol <= 0 || snap_tol <= 0)
        throw ConfigError("gauge: all tolerances must be positive");

    mps::SymmetryGauge gauge = mps::symmetry_gauge(a, action, opts);
    mps::CocycleData sigma = mps::projective_phase(gauge, scalar_tol, snap_tol);

    json results;
    results["gauge_residual"] = gauge.max_residual;
    json thetas = json::array();
    for (double t : gauge.theta) thetas.push_back(t);
    results["theta"] = std::move(thetas);
    json gauges = json::array();
    for (const ComplexMatrix& v : gauge.v) gauges.push_back(matrix_to_json(v));
    results["gauges"] = std::move(gauges);
    results["sigma"] = cocycle_table(sigma);
    if (sigma.snapped && sigma.phases) {
        results["class"] = class_to_json(coh::classify_cocycle(gauge.group, *sigma.phases, 2));
        if (gauge.group.is_abelian()) {
            coh::PhaseCochain nu = coh::commutator_pairing(gauge.group, *sigma.phases);
            json pairing = json::array();
            for (const mpq_class& q : nu.values()) pairing.push_back(q.get_str());
            results["commutator_pairing"] = std::move(pairing);
        }
    } else {
        warnings.push_back("sigma could not be snapped to roots of unity; no class computed");
    }
    return envelope("spt-index", config, std::move(results), std::move(warnings), sw.seconds());
}

json cmd_three_cocycle(const json& config) {
    Stopwatch sw;
    require_keys(config, {"group", "data", "scalar_tol", "snap_tol"}, "three-cocycle");
    coh::FiniteGroup group = parse_group(need(config, "group", "three-cocycle"));
    const double scalar_tol = config.value("scalar_tol", 1e-8);
    const double snap_tol = config.value("snap_tol", 1e-6);
    if (scalar_tol <= 0 || snap_tol <= 0)
        throw ConfigError("three-cocycle: tolerances must be positive");

    const json& data = need(config, "data", "three-cocycle");
    const std::string type = get_as<std::string>(data, "type", "data");
    int dim_left = 0;
    std::vector<ComplexMatrix> w, u;
    if (type == "synthesize") {
        require_keys(data, {"type", "cocycle"}, "data");
        const json& cj = need(data, "cocycle", "data");
        coh::PhaseCochain omega(group, 3);
        if (cj.contains("p")) {
            require_keys(cj, {"p"}, "cocycle");
            if (!group.is_cyclic())
                throw ConfigError("cocycle: the standard family needs a cyclic group");
            const int p = cj["p"].get<int>();
            if (p < 0 || p >= group.order()) throw ConfigError("cocycle: need 0 <= p < N");
            omega = coh::standard_cyclic_cocycle(group.order(), p);
        } else {
            require_keys(cj, {"values"}, "cocycle");
            omega = cochain_from_strings(group, 3, cj["values"].get<std::vector<std::string>>(),
                                         "cocycle");
        }
        mps::SynthesizedData d = mps::synthesize_cocycle_data(group, omega);
        dim_left = d.dim_left;
        w = std::move(d.w);
        u = std::move(d.u);
    } else if (type == "file") {
        require_keys(data, {"type", "path"}, "data");
        const std::string path = get_as<std::string>(data, "path", "data");
        std::ifstream in(path);
        if (!in) throw ConfigError("data: cannot open \"" + path + "\"");
        json f;
        try {
            in >> f;
        } catch (const json::exception& e) {
            throw ConfigError("data: bad JSON in \"" + path + "\": " + e.what());
        }
        require_keys(f, {"dim_left", "w", "u"}, "data file");
        dim_left = get_as<int>(f, "dim_left", "data file");
        for (const json& m : need(f, "w", "data file")) w.push_back(parse_matrix(m, "data file"));
        for (const json& m : need(f, "u", "data file")) u.push_back(parse_matrix(m, "data file"));
    } else {
        throw ConfigError("data: unknown type \"" + type + "\"");
    }

    mps::CocycleData c =
        mps::extract_three_cocycle(group, dim_left, w, u, scalar_tol, snap_tol);
    json warnings = json::array();
    json results;
    results["c"] = cocycle_table(c);
    if (c.snapped && c.phases) {
        results["class"] = class_to_json(coh::classify_cocycle(group, *c.phases, 3));
    } else {
        warnings.push_back("c could not be snapped to roots of unity; no class computed");
    }
    return envelope("three-cocycle", config, std::move(results), std::move(warnings),
                    sw.seconds());
}

json cmd_cohomology(const json& config) {
    Stopwatch sw;
    require_keys(config, {"group", "degree"}, "cohomology");
    coh::FiniteGroup group = parse_group(need(config, "group", "cohomology"));
    const int degree = get_as<int>(config, "degree", "cohomology");
    if (degree < 1 || degree > 3) throw ConfigError("cohomology: degree must be 1, 2, or 3");
    std::vector<long> factors = coh::cohomology_group(group, degree);
    return envelope("cohomology", config,
                    {{"group", group.name()},
                     {"order", group.order()},
                     {"degree", degree},
                     {"factors", factors}},
                    json::array(), sw.seconds());
}

json cmd_lightcone(const json& config, int threads) {
    Stopwatch sw;
    require_keys(config,
                 {"model", "length", "boundary", "operator_a", "operator_b", "distances", "times",
                  "csv_path"},
                 "lightcone");
    model::Interaction phi = parse_model(need(config, "model", "lightcone"));
    const int length = get_as<int>(config, "length", "lightcone");
    const model::Boundary bc = parse_boundary(config, "lightcone");
    const auto distances = get_as<std::vector<int>>(config, "distances", "lightcone");
    const auto times = get_as<std::vector<double>>(config, "times", "lightcone");
    if (times.empty()) throw ConfigError("lightcone: times must be nonempty");
    if (distances.empty()) throw ConfigError("lightcone: distances must be nonempty");
    const ComplexMatrix op_a = named_site_operator(
        get_as<std::string>(config, "operator_a", "lightcone"), phi.site_dimension(), "lightcone");
    const ComplexMatrix op_b = named_site_operator(
        get_as<std::string>(config, "operator_b", "lightcone"), phi.site_dimension(), "lightcone");

    model::Region reg{0, length - 1, bc};
    spectra::LightconeGrid grid =
        spectra::lieb_robinson_probe(phi, reg, op_a, op_b, distances, times, threads);

    json rows = json::array();
    std::ostringstream csv;
    csv << "t,r,commutator_norm\n";
    for (std::size_t ti = 0; ti < grid.times.size(); ++ti)
        for (std::size_t ri = 0; ri < grid.distances.size(); ++ri) {
            rows.push_back({{"t", grid.times[ti]},
                            {"r", grid.distances[ri]},
                            {"norm", grid.norms[ti][ri]}});
            csv << grid.times[ti] << ',' << grid.distances[ri] << ',' << grid.norms[ti][ri]
                << '\n';
        }
    if (config.contains("csv_path")) {
        const std::string path = config["csv_path"].get<std::string>();
        const std::string tmp = path + ".tmp";
        std::ofstream out(tmp);
        if (!out) throw ConfigError("lightcone: cannot write \"" + tmp + "\"");
        out << csv.str();
        out.close();
        if (std::rename(tmp.c_str(), path.c_str()) != 0)
            throw ConfigError("lightcone: cannot rename temporary output to \"" + path + "\"");
    }
    return envelope("lightcone", config, {{"rows", std::move(rows)}}, json::array(),
                    sw.seconds());
}

json run_command(const std::string& command, const json& config, int threads) {
    if (command == "gap") return cmd_gap(config);
    if (command == "correlations") return cmd_correlations(config);
    if (command == "spt-index") return cmd_spt_index(config);
    if (command == "three-cocycle") return cmd_three_cocycle(config);
    if (command == "cohomology") return cmd_cohomology(config);
    if (command == "lightcone") return cmd_lightcone(config, threads);
    throw ConfigError("unknown command \"" + command + "\"");
}

void write_output(const std::string& path, const json& envelope) {
    const std::string tmp = path + ".tmp";
    std::ofstream out(tmp);
    if (!out) throw ConfigError("cannot write \"" + tmp + "\"");
    out << envelope.dump(2) << '\n';
    out.close();
    if (!out) throw ConfigError("write failed for \"" + tmp + "\"");
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw ConfigError("cannot rename temporary output to \"" + path + "\"");
}

}  // namespace sptw::cli

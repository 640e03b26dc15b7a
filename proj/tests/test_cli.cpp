#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    json envelope;     // parsed stdout (when nonempty and valid)
    std::string err;   // captured stderr
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("sptw-cli-test-" + std::to_string(static_cast<long>(::getpid())));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string binary() {
    const char* bin = std::getenv("SPT_WORKBENCH_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "SPT_WORKBENCH_BIN must point at the spt-workbench binary");
    return bin;
}

RunResult run(const std::string& command, const json& config, const std::string& extra = "") {
    static int counter = 0;
    const fs::path cfg = work_dir() / ("config" + std::to_string(counter) + ".json");
    const fs::path out = work_dir() / ("stdout" + std::to_string(counter) + ".json");
    const fs::path err = work_dir() / ("stderr" + std::to_string(counter) + ".txt");
    ++counter;
    {
        std::ofstream f(cfg);
        f << config.dump(2);
    }
    const std::string cmdline = binary() + " " + command + " --config " + cfg.string() + " " +
                                extra + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmdline.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    {
        std::ifstream f(err);
        r.err.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    std::ifstream f(out);
    try {
        f >> r.envelope;
    } catch (const json::exception&) {
        // empty or non-JSON stdout is fine for failure paths
    }
    return r;
}

json solver(std::uint64_t seed, const std::string& method = "auto") {
    return {{"method", method}, {"seed", seed}};
}

}  // namespace

TEST_CASE("gap command: trivial model rows and envelope shape") {
    json cfg = {{"model", {{"name", "trivial_onsite"}, {"energies", {0.0, 1.0}}}},
                {"lengths", {2, 3, 4}},
                {"boundary", "open"},
                {"solver", solver(11)}};
    RunResult r = run("gap", cfg);
    REQUIRE(r.exit_code == 0);
    CHECK(r.envelope["schema_version"] == 1);
    CHECK(r.envelope["command"] == "gap");
    CHECK(r.envelope["config"] == cfg);  // canonical echo of the parsed input
    CHECK(r.envelope["wall_time_s"].get<double>() >= 0.0);
    const json& rows = r.envelope["results"]["rows"];
    REQUIRE(rows.size() == 3);
    for (const json& row : rows) {
        CHECK(row["gap"].get<double>() == doctest::Approx(1).epsilon(1e-10));
        CHECK(row["degeneracy"] == 1);
    }
}

TEST_CASE("gap command: size over cap exits 3") {
    json cfg = {{"model", {{"name", "heisenberg"}, {"site_dimension", 2}}},
                {"lengths", {40}},
                {"boundary", "open"},
                {"solver", solver(11)}};
    RunResult r = run("gap", cfg);
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("size") != std::string::npos);
}

TEST_CASE("config validation: unknown keys and missing seed exit 3") {
    json cfg = {{"model", {{"name", "aklt"}}},
                {"lengths", {4}},
                {"boundary", "periodic"},
                {"solver", solver(1)},
                {"surprise", true}};
    RunResult r = run("gap", cfg);
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("surprise") != std::string::npos);

    json noseed = {{"model", {{"name", "aklt"}}},
                   {"lengths", {4}},
                   {"boundary", "periodic"},
                   {"solver", {{"method", "lanczos"}}}};
    CHECK(run("gap", noseed).exit_code == 3);

    // malformed JSON file: no crash, exit 3
    const fs::path bad = work_dir() / "bad.json";
    {
        std::ofstream f(bad);
        f << "{ not json";
    }
    const int status = std::system(
        (binary() + " gap --config " + bad.string() + " >/dev/null 2>/dev/null").c_str());
    CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("correlations command: product model is flat, degenerate fit flagged") {
    json cfg = {{"model", {{"name", "trivial_onsite"}, {"energies", {0.0, 1.0}}}},
                {"length", 6},
                {"boundary", "open"},
                {"solver", solver(3)},
                {"site_a", 0},
                {"operator_a", "sz"},
                {"operator_b", "sz"},
                {"distances", {1, 2, 3}}};
    RunResult r = run("correlations", cfg);
    REQUIRE(r.exit_code == 0);
    for (const json& row : r.envelope["results"]["rows"]) {
        CHECK(std::abs(row["re"].get<double>()) < 1e-12);
        CHECK(std::abs(row["im"].get<double>()) < 1e-12);
    }
    CHECK(r.envelope["results"]["fit"]["degenerate"] == true);
    REQUIRE(!r.envelope["warnings"].empty());
}

TEST_CASE("correlations command: degenerate ground space exits 2") {
    json cfg = {{"model", {{"name", "transverse_ising"}, {"field", 0.0}}},
                {"length", 4},
                {"boundary", "periodic"},
                {"solver", solver(3)},
                {"site_a", 0},
                {"operator_a", "sz"},
                {"operator_b", "sz"},
                {"distances", {1, 2}}};
    RunResult r = run("correlations", cfg);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("degenerate") != std::string::npos);
}

TEST_CASE("spt-index command: AKLT is nontrivial, product state is trivial") {
    json v4 = {{"name", "product_cyclic"}, {"m", 2}, {"n", 2}};
    json cfg = {{"state", {{"type", "aklt"}}},
                {"symmetry", {{"group", v4}, {"representation", {{"name", "spin1_pi_rotations"}}}}},
                {"gauge", {{"seed", 7}}}};
    RunResult r = run("spt-index", cfg);
    REQUIRE(r.exit_code == 0);
    const json& res = r.envelope["results"];
    CHECK(res["class"]["factors"] == json::array({2}));
    CHECK(res["class"]["coordinates"] == json::array({1}));
    CHECK(res["class"]["trivial"] == false);
    CHECK(res["sigma"]["residual"].get<double>() <= 1e-8);

    // spin-1/2 product state with the on-site Z2 flip representation
    json z2 = {{"name", "cyclic"}, {"n", 2}};
    json rep = {{"matrices",
                 {{{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}},
                  {{{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}}}}};
    json pcfg = {{"state", {{"type", "product"}, {"vector", {{1.0, 0.0}, {1.0, 0.0}}}}},
                 {"symmetry", {{"group", z2}, {"representation", rep}}},
                 {"gauge", {{"seed", 9}}}};
    RunResult p = run("spt-index", pcfg);
    REQUIRE(p.exit_code == 0);
    CHECK(p.envelope["results"]["class"]["trivial"] == true);
}

TEST_CASE("spt-index command: non-invariant pair exits 2 naming g") {
    json z2 = {{"name", "cyclic"}, {"n", 2}};
    json rep = {{"matrices",
                 {{{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}},
                  {{{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}}}}};
    json cfg = {{"state", {{"type", "product"}, {"vector", {{1.0, 0.0}, {0.0, 0.0}}}}},
                {"symmetry", {{"group", z2}, {"representation", rep}}},
                {"gauge", {{"seed", 9}}}};
    RunResult r = run("spt-index", cfg);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("g=1") != std::string::npos);
}

TEST_CASE("spt-index command: deterministic given config and seed") {
    json v4 = {{"name", "product_cyclic"}, {"m", 2}, {"n", 2}};
    json cfg = {{"state", {{"type", "aklt"}}},
                {"symmetry", {{"group", v4}, {"representation", {{"name", "spin1_pi_rotations"}}}}},
                {"gauge", {{"seed", 21}}}};
    RunResult a = run("spt-index", cfg);
    RunResult b = run("spt-index", cfg);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.envelope["results"] == b.envelope["results"]);
}

TEST_CASE("three-cocycle command: synthesized fixtures classify correctly") {
    json z3 = {{"name", "cyclic"}, {"n", 3}};
    json cfg = {{"group", z3},
                {"data", {{"type", "synthesize"}, {"cocycle", {{"p", 2}}}}}};
    RunResult r = run("three-cocycle", cfg);
    REQUIRE(r.exit_code == 0);
    CHECK(r.envelope["results"]["class"]["factors"] == json::array({3}));
    CHECK(r.envelope["results"]["class"]["coordinates"] == json::array({2}));
    CHECK(r.envelope["results"]["c"]["residual"].get<double>() <= 1e-10);

    json trivial = {{"group", z3},
                    {"data", {{"type", "synthesize"}, {"cocycle", {{"p", 0}}}}}};
    RunResult t = run("three-cocycle", trivial);
    REQUIRE(t.exit_code == 0);
    CHECK(t.envelope["results"]["class"]["trivial"] == true);
}

TEST_CASE("three-cocycle command: non-unitary data file exits 2") {
    json file;
    file["dim_left"] = 1;
    json eye = {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}};
    json stretched = {{{2.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}};
    file["w"] = {eye, eye};
    file["u"] = {eye, eye, eye, stretched};
    const fs::path path = work_dir() / "three_cocycle_data.json";
    {
        std::ofstream f(path);
        f << file.dump();
    }
    json cfg = {{"group", {{"name", "cyclic"}, {"n", 2}}},
                {"data", {{"type", "file"}, {"path", path.string()}}}};
    RunResult r = run("three-cocycle", cfg);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("unitary") != std::string::npos);
}

TEST_CASE("cohomology command: table output") {
    json cfg = {{"group", {{"name", "product_cyclic"}, {"m", 2}, {"n", 2}}}, {"degree", 2}};
    RunResult r = run("cohomology", cfg);
    REQUIRE(r.exit_code == 0);
    CHECK(r.envelope["results"]["factors"] == json::array({2}));

    json h3 = {{"group", {{"name", "cyclic"}, {"n", 2}}}, {"degree", 3}};
    CHECK(run("cohomology", h3).envelope["results"]["factors"] == json::array({2}));

    // group from a multiplication-table file
    const fs::path gpath = work_dir() / "z2.json";
    {
        std::ofstream f(gpath);
        f << R"({"name": "Z2", "table": [[0, 1], [1, 0]]})";
    }
    json ft = {{"group", {{"file", gpath.string()}}}, {"degree", 2}};
    RunResult fr = run("cohomology", ft);
    REQUIRE(fr.exit_code == 0);
    CHECK(fr.envelope["results"]["factors"] == json::array());
}

TEST_CASE("lightcone command: on-site model gives a zero grid, empty times exits 3") {
    json cfg = {{"model", {{"name", "trivial_onsite"}, {"energies", {0.0, 0.7}}}},
                {"length", 6},
                {"boundary", "open"},
                {"operator_a", "sz"},
                {"operator_b", "sz"},
                {"distances", {1, 3}},
                {"times", {0.0, 0.5}},
                {"csv_path", (work_dir() / "grid.csv").string()}};
    RunResult r = run("lightcone", cfg);
    REQUIRE(r.exit_code == 0);
    for (const json& row : r.envelope["results"]["rows"])
        CHECK(row["norm"].get<double>() < 1e-9);
    std::ifstream csv(work_dir() / "grid.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "t,r,commutator_norm");

    json empty = cfg;
    empty["times"] = json::array();
    CHECK(run("lightcone", empty).exit_code == 3);
}

TEST_CASE("output file is written atomically via --out") {
    json cfg = {{"group", {{"name", "cyclic"}, {"n", 4}}}, {"degree", 3}};
    const fs::path out = work_dir() / "result.json";
    RunResult r = run("cohomology", cfg, "--out " + out.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(fs::exists(out));
    CHECK(!fs::exists(out.string() + ".tmp"));
    json parsed;
    std::ifstream f(out);
    f >> parsed;
    CHECK(parsed["results"]["factors"] == json::array({4}));
}

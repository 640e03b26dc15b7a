#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sptw/cli/commands.hpp"
#include "sptw/errors.hpp"

namespace {

constexpr int exit_domain = 2;
constexpr int exit_config = 3;

int run(const std::string& command, const std::string& config_path, const std::string& out_path,
        int threads) {
    nlohmann::json config;
    {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot open config \"" << config_path << "\"\n";
            return exit_config;
        }
        try {
            in >> config;
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "error: bad JSON in \"" << config_path << "\": " << e.what() << '\n';
            return exit_config;
        }
    }
    nlohmann::json envelope = sptw::cli::run_command(command, config, threads);
    if (out_path.empty())
        std::cout << envelope.dump(2) << '\n';
    else
        sptw::cli::write_output(out_path, envelope);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin-chain SPT workbench"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    int threads = 1;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"gap", "finite-size gap scan"},
        {"correlations", "connected correlations and decay fit"},
        {"spt-index", "projective-phase (H^2) index of a symmetric MPS"},
        {"three-cocycle", "3-cocycle (H^3) extraction from operator data"},
        {"cohomology", "invariant factors of H^n(G, U(1))"},
        {"lightcone", "commutator-norm light cone grid"},
    };
    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--config", config_path, "JSON config file")->required();
        sub->add_option("--out", out_path, "output JSON path (default: stdout)");
        sub->add_option("--threads", threads, "worker threads where supported");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        return run(command, config_path, out_path, threads);
    } catch (const sptw::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const sptw::SizeError& e) {
        std::cerr << "size error: " << e.what() << '\n';
        return exit_config;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    }
}

#pragma once

#include <string>

#include "json.hpp"

namespace sptw::cli {

inline constexpr const char* tool_version = "0.1.0";
inline constexpr int schema_version = 1;

// Each command validates its config (unknown keys rejected, seeds mandatory
// for randomized paths), runs the pipeline, and returns a result envelope:
// {schema_version, tool_version, command, config, wall_time_s, results,
//  warnings}.  Config errors throw ConfigError / SizeError (exit code 3 at the
// CLI); domain failures throw the module exceptions (exit code 2).
nlohmann::json cmd_gap(const nlohmann::json& config);
nlohmann::json cmd_correlations(const nlohmann::json& config);
nlohmann::json cmd_spt_index(const nlohmann::json& config);
nlohmann::json cmd_three_cocycle(const nlohmann::json& config);
nlohmann::json cmd_cohomology(const nlohmann::json& config);
nlohmann::json cmd_lightcone(const nlohmann::json& config, int threads);

// Dispatch by command name; throws ConfigError for unknown commands.
nlohmann::json run_command(const std::string& command, const nlohmann::json& config, int threads);

// Atomic write: temp file in the target directory, then rename.
void write_output(const std::string& path, const nlohmann::json& envelope);

}  // namespace sptw::cli

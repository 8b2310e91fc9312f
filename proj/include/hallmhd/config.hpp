#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallmhd/diagnostics.hpp"
#include "hallmhd/initial_data.hpp"
#include "hallmhd/integrator.hpp"
#include "hallmhd/state.hpp"

namespace hallmhd {

struct GridConfig {
  int n = 0;
  double L = 0.0;
};

struct DiagnosticsConfig {
  double beta = 1e-2;
  double fit_t0 = 1.0;
  /// Non-positive means L/2, the end of the pre-wrap window.
  double fit_t1 = 0.0;
  std::vector<double> R{4.0, 5.0};
};

struct RunConfig {
  GridConfig grid;
  PhysicalParams params;
  InitialSpec initial;
  StepConfig stepping;
  DiagnosticsConfig diagnostics;
  std::filesystem::path output_dir = "out";

  DiagnosticOptions diagnostic_options() const { return {diagnostics.beta, diagnostics.R}; }
  double fit_t1() const { return diagnostics.fit_t1 > 0.0 ? diagnostics.fit_t1 : 0.5 * grid.L; }
};

/// Every recognized dotted key, in canonical order.
const std::vector<std::string>& config_keys();

/// Keys that must be present after merging all sources.
const std::vector<std::string>& required_config_keys();

/// Environment variable carrying the override for `key`: HALLMHD_ followed
/// by the key upper-cased with dots replaced by double underscores
/// (stepping.dt -> HALLMHD_STEPPING__DT).
std::string env_var_for(const std::string& key);

/// Parse `key = value` lines; '#' starts a comment. Unknown and duplicate
/// keys raise ConfigError naming the key and line.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Overrides collected from the process environment.
std::map<std::string, std::string> config_from_environment();

/// `run` needs the grid and viscosities; `params_only` serves subcommands
/// without a grid, where missing keys keep their defaults (mu = 1, nu = 0)
/// and grid.n stays 0 unless given.
enum class ConfigScope { run, params_only };

/// Merge file < environment < flags, fill defaults and validate. Errors name
/// the offending key and constraint.
RunConfig build_config(const std::map<std::string, std::string>& file,
                       const std::map<std::string, std::string>& env,
                       const std::map<std::string, std::string>& flags,
                       ConfigScope scope = ConfigScope::run);

/// Convenience for the common case of a file plus flag overrides.
RunConfig parse_config(const std::optional<std::filesystem::path>& path,
                       const std::map<std::string, std::string>& flags = {},
                       ConfigScope scope = ConfigScope::run);

}  // namespace hallmhd

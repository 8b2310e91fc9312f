#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hallmhd/commands.hpp"
#include "hallmhd/config.hpp"

using namespace hallmhd;

namespace {

struct ConfigFlags {
  std::string config_path;
  std::map<std::string, std::string> values;
};

void add_config_options(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("--config", flags.config_path, "key = value configuration file");
  for (const auto& key : config_keys()) {
    cmd->add_option_function<std::string>(
        "--" + key, [&flags, key](const std::string& v) { flags.values[key] = v; },
        "override " + key + " (env " + env_var_for(key) + ")");
  }
}

RunConfig load(const ConfigFlags& flags, ConfigScope scope) {
  std::optional<std::filesystem::path> path;
  if (!flags.config_path.empty()) path = flags.config_path;
  return parse_config(path, flags.values, scope);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall-MHD pseudo-spectral solver and verification experiments"};
  app.require_subcommand(1);

  ConfigFlags sim_flags;
  auto* sim = app.add_subcommand("simulate", "run the configured simulation");
  add_config_options(sim, sim_flags);

  ConfigFlags audit_flags;
  auto* audit = app.add_subcommand("energy-audit", "simulate and audit energy, div B and splitting residuals");
  add_config_options(audit, audit_flags);

  ConfigFlags decay_flags;
  LinearDecayOptions decay;
  std::string decay_component = "u";
  auto* lin = app.add_subcommand("linear-decay", "whole-space linear decay norms by radial quadrature");
  lin->add_option("--k", decay.k, "derivative order 0..3")->capture_default_str();
  lin->add_option("--component", decay_component, "rho | u | B")->capture_default_str();
  lin->add_option("--t0", decay.t0, "window start")->capture_default_str();
  lin->add_option("--t1", decay.t1, "window end")->capture_default_str();
  lin->add_option("--samples", decay.samples, "log-spaced sample count")->capture_default_str();
  lin->add_option("--sigma", decay.sigma, "Gaussian data width")->capture_default_str();
  lin->add_option("--tolerance", decay.tolerance, "allowed slope error")->capture_default_str();
  add_config_options(lin, decay_flags);

  ConfigFlags id_flags;
  IdentityOptions ident;
  auto* ids = app.add_subcommand("identities", "check the Lorentz and induction identities");
  ids->add_option("--n", ident.n, "grid size")->capture_default_str();
  ids->add_option("--L", ident.L, "box length")->capture_default_str();
  ids->add_option("--seed", ident.seed, "random seed")->capture_default_str();
  ids->add_option("--pairs", ident.pairs, "number of random field pairs")->capture_default_str();
  ids->add_option("--tolerance", ident.tolerance, "allowed relative residual")->capture_default_str();
  add_config_options(ids, id_flags);

  ConfigFlags fit_flags;
  FitOptions fit;
  std::vector<double> window;
  double expect = 0.0;
  auto* fitc = app.add_subcommand("fit", "fit a decay exponent to a series CSV column");
  fitc->add_option("--input", fit.input, "series CSV")->required();
  fitc->add_option("--window", window, "t0 t1")->expected(2)->required();
  fitc->add_option("--column", fit.column, "column to fit")->capture_default_str();
  auto* expect_opt = fitc->add_option("--expect", expect, "assert the slope equals this value");
  fitc->add_option("--tolerance", fit.tolerance, "allowed slope error with --expect")->capture_default_str();
  add_config_options(fitc, fit_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  CommandOutcome outcome;
  if (*sim) {
    outcome = run_guarded("simulate", [&] { return run_simulate(load(sim_flags, ConfigScope::run)); });
  } else if (*audit) {
    outcome = run_guarded("energy-audit", [&] { return run_energy_audit(load(audit_flags, ConfigScope::run)); });
  } else if (*lin) {
    outcome = run_guarded("linear-decay", [&] {
      const RunConfig c = load(decay_flags, ConfigScope::params_only);
      decay.component = parse_linear_component(decay_component);
      return run_linear_decay(c.params, decay, c.output_dir);
    });
  } else if (*ids) {
    outcome = run_guarded("identities", [&] {
      const RunConfig c = load(id_flags, ConfigScope::params_only);
      return run_identities(ident, c.output_dir);
    });
  } else if (*fitc) {
    outcome = run_guarded("fit", [&] {
      const RunConfig c = load(fit_flags, ConfigScope::params_only);
      fit.t0 = window[0];
      fit.t1 = window[1];
      if (*expect_opt) fit.expect = expect;
      return run_fit(fit, c.output_dir);
    });
  }
  std::cout << outcome.summary << std::endl;
  return outcome.exit_code;
}

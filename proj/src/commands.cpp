#include "hallmhd/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "json.hpp"

#include "hallmhd/errors.hpp"
#include "hallmhd/initial_data.hpp"
#include "hallmhd/integrator.hpp"
#include "hallmhd/model.hpp"
#include "hallmhd/series_csv.hpp"
#include "hallmhd/snapshot.hpp"

namespace hallmhd {

namespace {

using nlohmann::json;

constexpr double kDivergenceBound = 1e-12;
constexpr double kSplittingBound = -1e-10;
constexpr double kEnergySlack = 1e-2;

struct Assertions {
  json list = json::array();
  bool all_pass = true;

  void add(const std::string& name, double value, const std::string& relation, double bound, bool pass) {
    list.push_back({{"name", name}, {"value", value}, {"relation", relation}, {"bound", bound}, {"pass", pass}});
    all_pass = all_pass && pass;
  }
};

CommandOutcome finish(json summary, const Assertions& checks) {
  summary["assertions"] = checks.list;
  summary["status"] = checks.all_pass ? "pass" : "fail";
  return {checks.all_pass ? kExitSuccess : kExitAssertion, summary.dump()};
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
}

std::string snapshot_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snapshot_%05zu.hmhd", index);
  return buf;
}

std::string component_name(Component c) {
  switch (c) {
    case Component::rho:
      return "rho";
    case Component::u:
      return "u";
    case Component::B:
      return "B";
  }
  return "?";
}

json config_json(const RunConfig& c) {
  return {{"grid", {{"n", c.grid.n}, {"L", c.grid.L}}},
          {"params",
           {{"mu", c.params.mu},
            {"nu", c.params.nu},
            {"gamma", c.params.gamma},
            {"hall", c.params.hall},
            {"nonlinear", c.params.nonlinear}}},
          {"initial",
           {{"kind", to_string(c.initial.kind)},
            {"amplitude", c.initial.amplitude},
            {"seed", c.initial.seed},
            {"scale", c.initial.scale}}},
          {"stepping",
           {{"dt", c.stepping.dt},
            {"t_end", c.stepping.t_end},
            {"cfl_safety", c.stepping.cfl_safety},
            {"scheme", to_string(c.stepping.scheme)},
            {"snapshot_every", c.stepping.snapshot_every}}},
          {"output_dir", c.output_dir.string()}};
}

void require_grid(const RunConfig& c) {
  if (c.grid.n == 0) throw ConfigError("grid.n", "missing required key");
  if (!(c.grid.L > 0.0)) throw ConfigError("grid.L", "missing required key");
}

RunRecord run_to_disk(const RunConfig& config, json& summary) {
  require_grid(config);
  ensure_directory(config.output_dir);
  GridPtr grid = build_grid(config.grid.n, config.grid.L);
  const FieldState initial = make_initial_data(config.initial, grid);
  const SnapshotSink sink = [&](const FieldState& s, std::size_t index) {
    write_snapshot(s, config.output_dir / snapshot_name(index));
  };
  RunRecord record = simulate(initial, config.stepping, config.params, config.diagnostic_options(), sink);
  write_series_csv(record.series, config.output_dir / "series.csv");
  summary["steps"] = record.steps;
  summary["final_time"] = record.final_state.time;
  summary["snapshots"] = record.snapshot_times.size();
  summary["series"] = (config.output_dir / "series.csv").string();
  return record;
}

}  // namespace

Component parse_linear_component(const std::string& name) {
  if (name == "rho") return Component::rho;
  if (name == "u") return Component::u;
  if (name == "B") return Component::B;
  throw InvalidArgument("unknown component '" + name + "' (rho | u | B)");
}

CommandOutcome run_simulate(const RunConfig& config) {
  json summary{{"command", "simulate"}, {"config", config_json(config)}};
  Assertions checks;
  try {
    const RunRecord record = run_to_disk(config, summary);
    checks.add("reached_t_end", record.final_state.time, ">=", config.stepping.t_end,
               record.final_state.time >= config.stepping.t_end * (1.0 - 1e-12));
  } catch (const SimulationAborted& e) {
    summary["error"] = e.what();
    checks.add("regime", e.time(), ">=", config.stepping.t_end, false);
  }
  return finish(summary, checks);
}

CommandOutcome run_energy_audit(const RunConfig& config) {
  json summary{{"command", "energy-audit"}, {"config", config_json(config)}};
  Assertions checks;
  RunRecord record;
  try {
    record = run_to_disk(config, summary);
  } catch (const SimulationAborted& e) {
    summary["error"] = e.what();
    checks.add("regime", e.time(), ">=", config.stepping.t_end, false);
    return finish(summary, checks);
  }
  const SeriesTable& table = record.series;

  const std::size_t h2 = table.column("h2_sq");
  const double initial = table.rows.front()[h2];
  double running_min = initial;
  double worst_rise = 0.0;
  for (const auto& row : table.rows) {
    worst_rise = std::max(worst_rise, row[h2] - running_min);
    running_min = std::min(running_min, row[h2]);
  }
  const double rise = initial > 0.0 ? worst_rise / initial : 0.0;
  checks.add("h2_sq_rise_over_initial", rise, "<=", kEnergySlack, rise <= kEnergySlack);

  const std::size_t div = table.column("div_B");
  double div_max = 0.0;
  for (const auto& row : table.rows) div_max = std::max(div_max, row[div]);
  checks.add("div_B_max", div_max, "<=", kDivergenceBound, div_max <= kDivergenceBound);

  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    if (table.columns[j].rfind("fsm_", 0) != 0) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& row : table.rows) worst = std::min(worst, row[j]);
    checks.add(table.columns[j] + "_min", worst, ">=", kSplittingBound, worst >= kSplittingBound);
  }

  for (const char* name : {"energy_E0", "energy_E1"}) {
    const std::size_t col = table.column(name);
    std::size_t increases = 0;
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
      if (table.rows[i][col] > table.rows[i - 1][col]) ++increases;
    }
    summary[std::string(name) + "_increases"] = increases;
  }

  json fits = json::object();
  for (const char* name : {"B_L2", "grad_B_L2"}) {
    try {
      const DecayFit fit =
          fit_decay_exponent(table.series(name), config.diagnostics.fit_t0, config.fit_t1());
      fits[name] = {{"slope", fit.slope}, {"standard_error", fit.standard_error}, {"samples", fit.samples}};
    } catch (const InvalidArgument& e) {
      fits[name] = {{"error", e.what()}};
    }
  }
  summary["decay_fits"] = fits;
  return finish(summary, checks);
}

CommandOutcome run_linear_decay(const PhysicalParams& params, const LinearDecayOptions& options,
                                const std::filesystem::path& output_dir) {
  validate(params);
  if (options.k < 0 || options.k > 3) throw InvalidArgument("--k must lie in 0..3");
  if (!(options.t0 > 0.0 && options.t1 > options.t0)) throw InvalidArgument("need 0 < t0 < t1");
  if (options.samples < 10) throw InvalidArgument("--samples must be >= 10");
  if (!(options.sigma > 0.0)) throw InvalidArgument("--sigma must be > 0");
  ensure_directory(output_dir);

  const RadialGaussian g{1.0, options.sigma};
  const RadialDataSpec data{g, g, g, g};
  SeriesTable table;
  table.columns = {"t", "norm"};
  const double a = std::log(options.t0);
  const double b = std::log(options.t1);
  for (int i = 0; i < options.samples; ++i) {
    const double t = std::exp(a + (b - a) * i / (options.samples - 1));
    table.rows.push_back({t, linear_decay_norm(options.k, t, data, options.component, params)});
  }
  const std::string stem = "linear_decay_k" + std::to_string(options.k) + "_" + component_name(options.component);
  const auto csv = output_dir / (stem + ".csv");
  write_series_csv(table, csv);

  DecaySeries series = table.series("norm");
  const DecayFit fit = fit_decay_exponent(series, options.t0, options.t1);
  const double expected = -(3.0 + 2.0 * options.k) / 4.0;

  json summary{{"command", "linear-decay"},
               {"k", options.k},
               {"component", component_name(options.component)},
               {"window", {options.t0, options.t1}},
               {"slope", fit.slope},
               {"standard_error", fit.standard_error},
               {"expected", expected},
               {"csv", csv.string()}};
  Assertions checks;
  const double err = std::abs(fit.slope - expected);
  checks.add("slope_error", err, "<=", options.tolerance, err <= options.tolerance);
  return finish(summary, checks);
}

CommandOutcome run_identities(const IdentityOptions& options, const std::filesystem::path& output_dir) {
  if (options.pairs < 1) throw InvalidArgument("--pairs must be >= 1");
  GridPtr grid = build_grid(options.n, options.L);
  ensure_directory(output_dir);

  NormalStream rng(options.seed);
  const double ell = 2.0 * grid->dx();
  SeriesTable table;
  table.columns = {"pair", "lorentz", "induction"};
  double worst_lorentz = 0.0;
  double worst_induction = 0.0;
  for (int p = 0; p < options.pairs; ++p) {
    const VectorField B = random_vector(grid, rng, ell);
    const VectorField u = random_vector(grid, rng, ell);
    const IdentityResiduals r = check_identities(B, u);
    table.rows.push_back({static_cast<double>(p), r.lorentz, r.induction});
    worst_lorentz = std::max(worst_lorentz, r.lorentz);
    worst_induction = std::max(worst_induction, r.induction);
  }
  const auto csv = output_dir / "identities.csv";
  write_series_csv(table, csv);

  json summary{{"command", "identities"},
               {"n", options.n},
               {"seed", options.seed},
               {"pairs", options.pairs},
               {"csv", csv.string()}};
  Assertions checks;
  checks.add("lorentz_residual_max", worst_lorentz, "<=", options.tolerance, worst_lorentz <= options.tolerance);
  checks.add("induction_residual_max", worst_induction, "<=", options.tolerance,
             worst_induction <= options.tolerance);
  return finish(summary, checks);
}

CommandOutcome run_fit(const FitOptions& options, const std::filesystem::path& output_dir) {
  const SeriesTable table = read_series_csv(options.input);
  const DecaySeries series = table.series(options.column);
  const DecayFit fit = fit_decay_exponent(series, options.t0, options.t1);
  ensure_directory(output_dir);

  json summary{{"command", "fit"},
               {"input", options.input.string()},
               {"column", options.column},
               {"window", {options.t0, options.t1}},
               {"slope", fit.slope},
               {"standard_error", fit.standard_error},
               {"intercept", fit.intercept},
               {"samples", fit.samples}};
  Assertions checks;
  if (options.expect) {
    const double err = std::abs(fit.slope - *options.expect);
    checks.add("slope_error", err, "<=", options.tolerance, err <= options.tolerance);
  }
  const auto out = output_dir / ("fit_" + options.column + ".json");
  CommandOutcome outcome = finish(summary, checks);
  std::ofstream file(out, std::ios::trunc);
  if (!file) throw IoError("cannot open " + out.string() + " for writing");
  file << outcome.summary << '\n';
  return outcome;
}

CommandOutcome run_guarded(const std::string& command, const std::function<CommandOutcome()>& body) {
  auto failure = [&](int code, const std::string& kind, const std::string& message, const std::string& key) {
    json summary{{"command", command}, {"status", "error"}, {"kind", kind}, {"error", message}};
    if (!key.empty()) summary["key"] = key;
    return CommandOutcome{code, summary.dump()};
  };
  try {
    return body();
  } catch (const ConfigError& e) {
    return failure(kExitUsage, "config", e.what(), e.key());
  } catch (const InvalidArgument& e) {
    return failure(kExitUsage, "invalid_argument", e.what(), "");
  } catch (const Error& e) {
    return failure(kExitAssertion, "runtime", e.what(), "");
  } catch (const std::exception& e) {
    return failure(kExitAssertion, "internal", e.what(), "");
  }
}

}  // namespace hallmhd

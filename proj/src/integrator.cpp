#include "hallmhd/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "hallmhd/model.hpp"
#include "hallmhd/propagator.hpp"
#include "hallmhd/spectral_ops.hpp"

namespace hallmhd {

Scheme parse_scheme(const std::string& name) {
  if (name == "etd1") return Scheme::etd1;
  if (name == "etd2") return Scheme::etd2;
  throw InvalidArgument("unknown scheme '" + name + "' (etd1 | etd2)");
}

std::string to_string(Scheme scheme) { return scheme == Scheme::etd1 ? "etd1" : "etd2"; }

namespace {

FieldState forcing_terms(const FieldState& state, double t, const PhysicalParams& params,
                         const Forcing& forcing) {
  FieldState s = params.nonlinear ? nonlinear_terms(state, params) : FieldState::zeros(state.grid_ptr());
  if (forcing) s += forcing(t);
  s.time = t;
  return s;
}

}  // namespace

FieldState etd_step(const FieldState& state, double dt, const PhysicalParams& params, Scheme scheme,
                    const Forcing& forcing, bool check) {
  if (!(dt > 0.0)) throw InvalidArgument("time step must be positive");
  if (!state.is_spectral()) throw RepresentationMismatch("etd_step needs a spectral state");
  validate(params);
  if (check && params.nonlinear) check_regime(state);

  const double t = state.time;
  const FieldState S0 = forcing_terms(state, t, params, forcing);
  const FieldState GU = apply_propagator(state, dt, params);
  const FieldState GS = apply_propagator(S0, dt, params);

  FieldState next = GU + dt * GS;
  if (scheme == Scheme::etd2) {
    next.time = t + dt;
    next.B = project_divergence_free(next.B);
    if (check && params.nonlinear) check_regime(next);
    const FieldState S1 = forcing_terms(next, t + dt, params, forcing);
    next = GU + (0.5 * dt) * (GS + S1);
  }
  next.time = t + dt;
  next.B = project_divergence_free(next.B);
  return next;
}

double cfl_limit(const FieldState& state, double cfl_safety) {
  const VectorField u = to_physical(state.u);
  const double umax =
      (u[0].values().square() + u[1].values().square() + u[2].values().square()).sqrt().maxCoeff();
  return cfl_safety * state.grid().dx() / (1.0 + umax);
}

RunRecord simulate(const FieldState& initial, const StepConfig& config, const PhysicalParams& params,
                   const DiagnosticOptions& diagnostics, const SnapshotSink& sink) {
  if (!(config.dt > 0.0)) throw InvalidArgument("stepping.dt must be positive");
  if (!(config.t_end >= 0.0)) throw InvalidArgument("stepping.t_end must be non-negative");
  if (!(config.cfl_safety > 0.0 && config.cfl_safety <= 1.0)) {
    throw InvalidArgument("stepping.cfl_safety must lie in (0, 1]");
  }
  validate(params);

  RunRecord record;
  record.series.columns = step_diagnostic_columns(diagnostics);
  const std::size_t diss_col = record.series.column("dissipation");
  const std::size_t diss_int_col = record.series.column("dissipation_integral");

  std::size_t snapshot_index = 0;
  auto emit = [&](const FieldState& s) {
    record.snapshot_times.push_back(s.time);
    if (sink) {
      sink(s, snapshot_index);
    } else {
      record.snapshots.push_back(s);
    }
    ++snapshot_index;
  };

  FieldState state = to_spectral(initial);
  state.time = 0.0;
  record.series.rows.push_back(step_diagnostics(state, diagnostics));
  emit(state);

  // Snapshot times are k * snapshot_every; the step is shortened to land on
  // them and on t_end exactly.
  const double eps = 1e-12 * std::max(1.0, config.t_end);
  std::size_t next_snapshot = 1;
  auto snapshot_time = [&](std::size_t k) {
    return config.snapshot_every > 0.0 ? static_cast<double>(k) * config.snapshot_every : config.t_end;
  };

  while (state.time < config.t_end - eps) {
    double h = std::min(config.dt, cfl_limit(state, config.cfl_safety));
    double target = std::min(config.t_end, snapshot_time(next_snapshot));
    h = std::min(h, target - state.time);
    FieldState next;
    try {
      next = etd_step(state, h, params, config.scheme, {}, config.regime_abort);
    } catch (const RegimeViolation& e) {
      throw SimulationAborted(record.steps, state.time, e.what());
    }
    // Avoid drift from accumulating h: snap to the target when reached.
    if (std::abs(next.time - target) <= eps) next.time = target;
    state = std::move(next);
    ++record.steps;

    std::vector<double> row = step_diagnostics(state, diagnostics);
    const auto& prev = record.series.rows.back();
    const double dt_taken = row[0] - prev[0];
    row[diss_int_col] = prev[diss_int_col] + 0.5 * dt_taken * (prev[diss_col] + row[diss_col]);
    record.series.rows.push_back(std::move(row));

    const bool at_end = state.time >= config.t_end - eps;
    const bool at_snapshot =
        config.snapshot_every > 0.0 && std::abs(state.time - snapshot_time(next_snapshot)) <= eps;
    if (at_snapshot) ++next_snapshot;
    if (at_snapshot || at_end) emit(state);
  }
  record.final_state = state;
  return record;
}

}  // namespace hallmhd

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hallmhd/diagnostics.hpp"
#include "hallmhd/errors.hpp"
#include "hallmhd/state.hpp"

namespace hallmhd {

enum class Scheme { etd1, etd2 };

Scheme parse_scheme(const std::string& name);
std::string to_string(Scheme scheme);

struct StepConfig {
  double dt = 0.05;
  double t_end = 1.0;
  double cfl_safety = 0.5;
  Scheme scheme = Scheme::etd2;
  /// Snapshot interval; non-positive keeps only the first and last states.
  double snapshot_every = 0.0;
  bool regime_abort = true;
};

/// Additional spectral forcing F(t) added to the nonlinear terms (used for
/// manufactured solutions).
using Forcing = std::function<FieldState(double t)>;

/// Exponential time step built on the exact linear propagator G = G_hat(dt):
///   etd1: U+ = G U + dt G S(t, U)
///   etd2: U* = G U + dt G S(t, U)
///         U+ = G U + dt/2 (G S(t, U) + S(t+dt, U*))
/// i.e. the trapezoidal rule applied to the Duhamel integral. B is
/// re-projected divergence-free afterwards. When `check` is set, both the
/// input and the predictor are checked against the density regime.
FieldState etd_step(const FieldState& state, double dt, const PhysicalParams& params, Scheme scheme,
                    const Forcing& forcing = {}, bool check = true);

/// Largest dt allowed by the advective limit cfl_safety * dx / (1 + max|u|).
double cfl_limit(const FieldState& state, double cfl_safety);

/// Thrown by simulate when the regime check fails mid-run.
class SimulationAborted : public Error {
 public:
  SimulationAborted(std::size_t step, double time, const std::string& cause)
      : Error("run aborted at step " + std::to_string(step) + ", t=" + std::to_string(time) + ": " + cause),
        step_(step),
        time_(time) {}

  std::size_t step() const { return step_; }
  double time() const { return time_; }

 private:
  std::size_t step_;
  double time_;
};

struct RunRecord {
  /// Snapshots kept in memory when no sink is supplied.
  std::vector<FieldState> snapshots;
  std::vector<double> snapshot_times;
  SeriesTable series;
  std::size_t steps = 0;
  FieldState final_state;
};

using SnapshotSink = std::function<void(const FieldState& state, std::size_t index)>;

/// Advance to config.t_end, sampling step diagnostics after every step and
/// emitting snapshots at t = 0, every snapshot_every and at t_end.
/// Deterministic for a given initial state and configuration.
RunRecord simulate(const FieldState& initial, const StepConfig& config, const PhysicalParams& params,
                   const DiagnosticOptions& diagnostics = {}, const SnapshotSink& sink = {});

}  // namespace hallmhd

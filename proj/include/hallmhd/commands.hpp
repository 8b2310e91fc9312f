#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "hallmhd/config.hpp"
#include "hallmhd/propagator.hpp"

namespace hallmhd {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

/// Exit code plus the one-line JSON summary printed by the CLI.
struct CommandOutcome {
  int exit_code = kExitSuccess;
  std::string summary;
};

struct LinearDecayOptions {
  int k = 0;
  Component component = Component::u;
  double t0 = 1e2;
  double t1 = 1e4;
  int samples = 41;
  /// Width of the Gaussian radial data exp(-sigma^2 |xi|^2 / 2), same for
  /// every component.
  double sigma = 1.0;
  double tolerance = 0.05;
};

struct IdentityOptions {
  int n = 32;
  double L = 6.283185307179586;
  std::uint64_t seed = 7;
  int pairs = 20;
  double tolerance = 1e-11;
};

struct FitOptions {
  std::filesystem::path input;
  double t0 = 1.0;
  double t1 = 50.0;
  std::string column = "B_L2";
  /// When set, the fit must land within `tolerance` of this slope.
  std::optional<double> expect;
  double tolerance = 0.05;
};

Component parse_linear_component(const std::string& name);

/// Run the configured simulation; writes series.csv and snapshot_NNNNN.hmhd
/// files under config.output_dir. Fails when the regime check aborts the run.
CommandOutcome run_simulate(const RunConfig& config);

/// Simulate and audit the run: the squared H^2 norm never rises above its
/// running minimum by more than 1% of its initial value, div B stays below
/// 1e-12 and every Fourier-splitting residual is >= -1e-10 of its scale.
CommandOutcome run_energy_audit(const RunConfig& config);

/// Quadrature norms ||nabla^k component(t)|| on log-spaced t in [t0, t1];
/// writes linear_decay_k{k}_{component}.csv and asserts the fitted slope
/// -(3+2k)/4 within the tolerance.
CommandOutcome run_linear_decay(const PhysicalParams& params, const LinearDecayOptions& options,
                                const std::filesystem::path& output_dir);

/// Residuals of both vector identities on random band-limited pairs;
/// writes identities.csv and asserts every residual <= tolerance.
CommandOutcome run_identities(const IdentityOptions& options, const std::filesystem::path& output_dir);

/// Fit log(column) against log(1+t) over the window of a series CSV and
/// write fit_{column}.json.
CommandOutcome run_fit(const FitOptions& options, const std::filesystem::path& output_dir);

/// Run `body`, converting library exceptions into a failure outcome:
/// ConfigError and InvalidArgument map to kExitUsage, everything else to
/// kExitAssertion.
CommandOutcome run_guarded(const std::string& command, const std::function<CommandOutcome()>& body);

}  // namespace hallmhd

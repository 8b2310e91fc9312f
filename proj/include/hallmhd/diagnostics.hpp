#pragma once

#include <string>
#include <vector>

#include "hallmhd/state.hpp"

namespace hallmhd {

/// Which unknown a norm refers to; `all` sums the squares of the three.
enum class FieldComponent { rho, u, B, all };

FieldComponent parse_component(const std::string& name);

enum class SobolevType { seminorm, full };

/// ||nabla^k f||_{L2} (seminorm) or ||f||_{H^k} = (sum_{j<=k} ||nabla^j f||^2)^{1/2}.
/// k in 0..4.
double sobolev_norm(const FieldState& state, FieldComponent component, int k,
                    SobolevType type = SobolevType::seminorm);

/// Discrete L^p norm with cell-volume weights, p in {1, 2, 3, 6}; p = 0
/// stands for the max norm. Vector components use the pointwise Euclidean
/// magnitude.
inline constexpr int kInfinityNorm = 0;
double lp_norm(const FieldState& state, FieldComponent component, int p);

struct EnergyReport {
  double energy = 0.0;       // E_l^2
  double plain = 0.0;        // ||nabla^l (rho, u, B)||_{H^{2-l}}^2
  double cross = 0.0;        // sum_{l<=k<=1} int nabla^k u . nabla^{k+1} rho
  double dissipation = 0.0;  // ||nabla^{l+1} rho||_{H^{1-l}}^2 + ||nabla^{l+1}(u,B)||_{H^{2-l}}^2
  bool monotone = true;      // E_l^2 non-increasing since the previous sample
};

/// E_l^2 = ||nabla^l (rho,u,B)||^2_{H^{2-l}} + beta * cross, l in {0, 1}.
/// `monotone` is left true; mark_monotonicity fills it from consecutive rows.
EnergyReport energy_functional(const FieldState& state, int l, double beta);

/// Mark each row non-monotone when its energy exceeds the previous one by
/// more than `tolerance`.
void mark_monotonicity(std::vector<EnergyReport>& rows, double tolerance);

/// ||nabla^{k+1} B||^2 - rho ||nabla^k B||^2 + rho^2 ||nabla^{k-1} B||^2
/// with rho = R/(1+t). Each mode contributes x^{k-1}((x - rho/2)^2 + 3 rho^2/4)
/// with x = |xi|^2, so the sum is non-negative up to round-off.
double fourier_splitting_residual(const FieldState& state, double t, double R, int k);

/// Time-derivative norms from the right-hand side.
struct TimeDerivativeNorms {
  double rho_t_H1 = 0.0;
  double u_t_L2 = 0.0;
  double B_t_L2 = 0.0;
  double grad_rho_t_H1 = 0.0;
  double grad_u_t_L2 = 0.0;
  double grad_B_t_L2 = 0.0;
};

TimeDerivativeNorms time_derivative_norms(const FieldState& state, const PhysicalParams& params);

struct DecaySeries {
  std::vector<double> times;
  std::vector<double> values;
  std::string label;
};

struct DecayFit {
  double slope = 0.0;
  double standard_error = 0.0;
  double intercept = 0.0;
  std::size_t samples = 0;
};

/// Least-squares slope of log(value) against log(1+t) over t in [t0, t1].
/// Needs at least 10 samples in the window and positive values.
DecayFit fit_decay_exponent(const DecaySeries& series, double t0, double t1);

/// Norms of S1..S3 alongside the norm combinations that bound them.
struct NonlinearNormReport {
  double S_L1[3] = {0, 0, 0};
  double S_L2[3] = {0, 0, 0};
  double grad_S_L2[3] = {0, 0, 0};
  double delta = 0.0;            // ||(rho, u, B)||_{H^2}
  double low_order = 0.0;        // ||grad rho|| + ||grad u||_{H^1} + ||grad B||_{H^1}
  double high_order = 0.0;       // ||nabla^2 rho|| + ||nabla^2 u|| + ||nabla^2 B||
  double product = 0.0;          // ||grad(rho,B)||_{H^1} ||nabla^2(u,B)||_{H^1}
  double ratio_L1 = 0.0;         // sum S_L1 / (delta * low_order)
  double ratio_L2 = 0.0;         // sum S_L2 / (delta * low_order)
  double ratio_grad = 0.0;       // sum grad_S_L2 / (delta * high_order + product)
};

NonlinearNormReport nonlinear_term_norms(const FieldState& state, const PhysicalParams& params);

/// Per-sample diagnostics collected by the integrator.
struct DiagnosticOptions {
  double beta = 1e-2;
  std::vector<double> splitting_R{4.0, 5.0};
};

/// Column-oriented table; the first column is always t.
struct SeriesTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const;
  DecaySeries series(const std::string& name) const;
};

std::vector<std::string> step_diagnostic_columns(const DiagnosticOptions& options);
/// Values matching step_diagnostic_columns, except the running dissipation
/// integral, which the caller accumulates.
std::vector<double> step_diagnostics(const FieldState& state, const DiagnosticOptions& options);

}  // namespace hallmhd

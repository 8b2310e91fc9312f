#include "hallmhd/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hallmhd/errors.hpp"
#include "hallmhd/initial_data.hpp"
#include "hallmhd/model.hpp"
#include "hallmhd/spectral_ops.hpp"

namespace hallmhd {

FieldComponent parse_component(const std::string& name) {
  if (name == "rho") return FieldComponent::rho;
  if (name == "u") return FieldComponent::u;
  if (name == "B") return FieldComponent::B;
  if (name == "all") return FieldComponent::all;
  throw InvalidArgument("unknown component '" + name + "' (rho | u | B | all)");
}

namespace {

double component_seminorm_sq(const FieldState& s, FieldComponent c, int k) {
  switch (c) {
    case FieldComponent::rho:
      return seminorm_squared(s.rho, k);
    case FieldComponent::u:
      return seminorm_squared(s.u, k);
    case FieldComponent::B:
      return seminorm_squared(s.B, k);
    case FieldComponent::all:
      return seminorm_squared(s.rho, k) + seminorm_squared(s.u, k) + seminorm_squared(s.B, k);
  }
  return 0.0;
}

/// sum_{j=lo}^{hi} ||nabla^j component||^2
double sobolev_sum(const FieldState& s, FieldComponent c, int lo, int hi) {
  double sum = 0.0;
  for (int j = lo; j <= hi; ++j) sum += component_seminorm_sq(s, c, j);
  return sum;
}

Eigen::ArrayXd magnitude(const FieldState& physical, FieldComponent c) {
  switch (c) {
    case FieldComponent::rho:
      return physical.rho.values().abs();
    case FieldComponent::u:
      return (physical.u[0].values().square() + physical.u[1].values().square() +
              physical.u[2].values().square())
          .sqrt();
    case FieldComponent::B:
      return (physical.B[0].values().square() + physical.B[1].values().square() +
              physical.B[2].values().square())
          .sqrt();
    case FieldComponent::all:
      break;
  }
  Eigen::ArrayXd sq = physical.rho.values().square();
  for (int i = 0; i < 3; ++i) sq += physical.u[i].values().square() + physical.B[i].values().square();
  return sq.sqrt();
}

double lp_of(const Eigen::ArrayXd& mag, double cell_volume, int p) {
  if (p == kInfinityNorm) return mag.size() ? mag.maxCoeff() : 0.0;
  if (p == 1) return mag.sum() * cell_volume;
  return std::pow(mag.pow(p).sum() * cell_volume, 1.0 / p);
}

}  // namespace

double sobolev_norm(const FieldState& state, FieldComponent component, int k, SobolevType type) {
  if (k < 0 || k > 4) throw InvalidArgument("Sobolev order must be in 0..4, got " + std::to_string(k));
  const FieldState s = to_spectral(state);
  const double sq = type == SobolevType::seminorm ? component_seminorm_sq(s, component, k)
                                                  : sobolev_sum(s, component, 0, k);
  return std::sqrt(sq);
}

double lp_norm(const FieldState& state, FieldComponent component, int p) {
  if (p != 1 && p != 2 && p != 3 && p != 6 && p != kInfinityNorm) {
    throw InvalidArgument("unsupported Lebesgue exponent " + std::to_string(p) + " (1, 2, 3, 6, inf)");
  }
  const FieldState phys = to_physical(state);
  return lp_of(magnitude(phys, component), phys.grid().cell_volume(), p);
}

EnergyReport energy_functional(const FieldState& state, int l, double beta) {
  if (l != 0 && l != 1) throw InvalidArgument("energy functional index l must be 0 or 1");
  const FieldState s = to_spectral(state);
  const SpectralGrid& g = s.grid();

  EnergyReport r;
  r.plain = sobolev_sum(s, FieldComponent::all, l, 2);
  r.dissipation = sobolev_sum(s, FieldComponent::rho, l + 1, 2) + sobolev_sum(s, FieldComponent::u, l + 1, 3) +
                  sobolev_sum(s, FieldComponent::B, l + 1, 3);

  // int nabla^k u . nabla^k grad rho = L^-3 sum |xi|^{2k} Re(conj(u_hat) . i xi rho_hat)
  const Eigen::ArrayXcd i_rho = Complex(0.0, 1.0) * s.rho.coeffs();
  Eigen::ArrayXd pairing = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(g.spectral_size()));
  for (int i = 0; i < 3; ++i) pairing += (s.u[i].coeffs().conjugate() * g.k(i) * i_rho).real();
  pairing *= g.hermitian_weight();
  for (int k = l; k <= 1; ++k) {
    r.cross += (k == 0 ? pairing : pairing * g.k_squared().pow(k)).sum() / g.volume();
  }
  r.energy = r.plain + beta * r.cross;
  return r;
}

void mark_monotonicity(std::vector<EnergyReport>& rows, double tolerance) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].monotone = i == 0 || rows[i].energy <= rows[i - 1].energy + tolerance;
  }
}

double fourier_splitting_residual(const FieldState& state, double t, double R, int k) {
  if (k < 1 || k > 3) throw InvalidArgument("splitting order k must be in 1..3");
  if (!(R > 0.0) || !(t >= 0.0)) throw InvalidArgument("splitting needs R > 0 and t >= 0");
  const FieldState s = to_spectral(state);
  const double radius2 = R / (1.0 + t);
  return seminorm_squared(s.B, k + 1) - radius2 * seminorm_squared(s.B, k) +
         radius2 * radius2 * seminorm_squared(s.B, k - 1);
}

TimeDerivativeNorms time_derivative_norms(const FieldState& state, const PhysicalParams& params) {
  const FieldState rhs = full_rhs(to_spectral(state), params);
  TimeDerivativeNorms n;
  n.rho_t_H1 = std::sqrt(sobolev_sum(rhs, FieldComponent::rho, 0, 1));
  n.u_t_L2 = std::sqrt(seminorm_squared(rhs.u, 0));
  n.B_t_L2 = std::sqrt(seminorm_squared(rhs.B, 0));
  n.grad_rho_t_H1 = std::sqrt(sobolev_sum(rhs, FieldComponent::rho, 1, 2));
  n.grad_u_t_L2 = std::sqrt(seminorm_squared(rhs.u, 1));
  n.grad_B_t_L2 = std::sqrt(seminorm_squared(rhs.B, 1));
  return n;
}

DecayFit fit_decay_exponent(const DecaySeries& series, double t0, double t1) {
  if (series.times.size() != series.values.size()) {
    throw InvalidArgument("decay series has mismatched times and values");
  }
  std::vector<double> x, y;
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    const double t = series.times[i];
    if (t < t0 || t > t1) continue;
    if (!(series.values[i] > 0.0)) {
      throw InvalidArgument("decay fit needs positive values, got " + std::to_string(series.values[i]) +
                            " at t=" + std::to_string(t));
    }
    x.push_back(std::log1p(t));
    y.push_back(std::log(series.values[i]));
  }
  if (x.size() < 10) {
    throw InvalidArgument("decay fit window [" + std::to_string(t0) + ", " + std::to_string(t1) +
                          "] holds " + std::to_string(x.size()) + " samples, need at least 10");
  }
  const double n = static_cast<double>(x.size());
  double xm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (y[i] - ym);
  }
  if (!(sxx > 0.0)) throw InvalidArgument("decay fit window has no spread in t");
  DecayFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = ym - fit.slope * xm;
  double ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (fit.intercept + fit.slope * x[i]);
    ssr += e * e;
  }
  fit.standard_error = std::sqrt(ssr / (n - 2.0) / sxx);
  fit.samples = x.size();
  return fit;
}

NonlinearNormReport nonlinear_term_norms(const FieldState& state, const PhysicalParams& params) {
  const FieldState s = to_spectral(state);
  const FieldState S = nonlinear_terms(s, params);
  const FieldState Sp = to_physical(S);
  const double dv = s.grid().cell_volume();

  NonlinearNormReport r;
  const FieldComponent comps[3] = {FieldComponent::rho, FieldComponent::u, FieldComponent::B};
  for (int i = 0; i < 3; ++i) {
    r.S_L1[i] = lp_of(magnitude(Sp, comps[i]), dv, 1);
    r.S_L2[i] = std::sqrt(component_seminorm_sq(S, comps[i], 0));
    r.grad_S_L2[i] = std::sqrt(component_seminorm_sq(S, comps[i], 1));
  }
  r.delta = h2_norm(s);
  r.low_order = std::sqrt(component_seminorm_sq(s, FieldComponent::rho, 1)) +
                std::sqrt(sobolev_sum(s, FieldComponent::u, 1, 2)) +
                std::sqrt(sobolev_sum(s, FieldComponent::B, 1, 2));
  r.high_order = std::sqrt(component_seminorm_sq(s, FieldComponent::rho, 2)) +
                 std::sqrt(component_seminorm_sq(s, FieldComponent::u, 2)) +
                 std::sqrt(component_seminorm_sq(s, FieldComponent::B, 2));
  const double grad_rho_B = std::sqrt(sobolev_sum(s, FieldComponent::rho, 1, 2) +
                                      sobolev_sum(s, FieldComponent::B, 1, 2));
  const double grad2_u_B = std::sqrt(sobolev_sum(s, FieldComponent::u, 2, 3) +
                                     sobolev_sum(s, FieldComponent::B, 2, 3));
  r.product = grad_rho_B * grad2_u_B;

  auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.0; };
  r.ratio_L1 = ratio(r.S_L1[0] + r.S_L1[1] + r.S_L1[2], r.delta * r.low_order);
  r.ratio_L2 = ratio(r.S_L2[0] + r.S_L2[1] + r.S_L2[2], r.delta * r.low_order);
  r.ratio_grad = ratio(r.grad_S_L2[0] + r.grad_S_L2[1] + r.grad_S_L2[2],
                       r.delta * r.high_order + r.product);
  return r;
}

std::size_t SeriesTable::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw InvalidArgument("series has no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

DecaySeries SeriesTable::series(const std::string& name) const {
  const std::size_t c = column(name);
  DecaySeries s;
  s.label = name;
  for (const auto& row : rows) {
    s.times.push_back(row.at(0));
    s.values.push_back(row.at(c));
  }
  return s;
}

namespace {

std::string splitting_column(double R, int k) {
  std::ostringstream os;
  os << "fsm_R" << R << "_k" << k;
  return os.str();
}

}  // namespace

std::vector<std::string> step_diagnostic_columns(const DiagnosticOptions& options) {
  std::vector<std::string> cols{"t",           "h2_sq",       "dissipation", "dissipation_integral",
                                "energy_E0",   "energy_E1",   "rho_L2",      "u_L2",
                                "B_L2",        "grad_rho_L2", "grad_u_L2",   "grad_B_L2",
                                "grad2_B_L2",  "div_B",       "rho1_min",    "rho1_max"};
  for (double R : options.splitting_R) {
    for (int k : {2, 3}) cols.push_back(splitting_column(R, k));
  }
  return cols;
}

std::vector<double> step_diagnostics(const FieldState& state, const DiagnosticOptions& options) {
  const FieldState s = to_spectral(state);
  const EnergyReport e0 = energy_functional(s, 0, options.beta);
  const EnergyReport e1 = energy_functional(s, 1, options.beta);
  const Eigen::ArrayXd rho = to_physical(s.rho).values();

  std::vector<double> row{s.time,
                          e0.plain,
                          e0.dissipation,
                          0.0,
                          e0.energy,
                          e1.energy,
                          std::sqrt(seminorm_squared(s.rho, 0)),
                          std::sqrt(seminorm_squared(s.u, 0)),
                          std::sqrt(seminorm_squared(s.B, 0)),
                          std::sqrt(seminorm_squared(s.rho, 1)),
                          std::sqrt(seminorm_squared(s.u, 1)),
                          std::sqrt(seminorm_squared(s.B, 1)),
                          std::sqrt(seminorm_squared(s.B, 2)),
                          divergence_ratio(s.B),
                          1.0 + rho.minCoeff(),
                          1.0 + rho.maxCoeff()};
  for (double R : options.splitting_R) {
    for (int k : {2, 3}) {
      // Residual normalized by the sum of its three terms (0 when B vanishes).
      const double r = R / (1.0 + s.time);
      const double scale = seminorm_squared(s.B, k + 1) + r * seminorm_squared(s.B, k) +
                           r * r * seminorm_squared(s.B, k - 1);
      const double res = fourier_splitting_residual(s, s.time, R, k);
      row.push_back(scale > 0.0 ? res / scale : 0.0);
    }
  }
  return row;
}

}  // namespace hallmhd

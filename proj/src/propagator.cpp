#include "hallmhd/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hallmhd {

namespace {

constexpr Complex kMinusI{0.0, -1.0};

void require_spectral_state(const FieldState& s, const char* op) {
  if (!s.is_spectral()) throw RepresentationMismatch(std::string(op) + " needs a spectral state");
}

/// Integer |m|^2 of a stored mode, recovered from the operator wavenumbers.
std::size_t shell_index(double k2, double fundamental) {
  return static_cast<std::size_t>(std::llround(k2 / (fundamental * fundamental)));
}

struct RealKernel {
  double a_rr, a_ru, a_par, a_perp, a_bb;
};

}  // namespace

FieldState apply_propagator(const FieldState& state, double t, const PhysicalParams& params) {
  require_spectral_state(state, "apply_propagator");
  if (!(t >= 0.0)) throw InvalidArgument("propagator time must be non-negative");
  validate(params);
  const SpectralGrid& g = state.grid();
  const double k0 = g.fundamental();

  // Kernels depend on |xi| only; |m|^2 is an integer, so cache per shell.
  const std::size_t max_shell = 3 * static_cast<std::size_t>(g.n() / 2) * (g.n() / 2) + 1;
  std::vector<RealKernel> shells(max_shell);
  std::vector<char> have(max_shell, 0);

  FieldState out = state;
  out.time = state.time + t;
  if (t == 0.0) return out;

  const auto& kx = g.kx();
  const auto& ky = g.ky();
  const auto& kz = g.kz();
  const auto& k2 = g.k_squared();
  const auto& rho = state.rho.coeffs();
  const auto& u0 = state.u[0].coeffs();
  const auto& u1 = state.u[1].coeffs();
  const auto& u2 = state.u[2].coeffs();
  auto& orho = out.rho.coeffs();
  auto& ou0 = out.u[0].coeffs();
  auto& ou1 = out.u[1].coeffs();
  auto& ou2 = out.u[2].coeffs();

  for (Eigen::Index s = 0; s < static_cast<Eigen::Index>(g.spectral_size()); ++s) {
    if (k2[s] == 0.0) continue;
    const std::size_t shell = shell_index(k2[s], k0);
    if (!have[shell]) {
      // The four acoustic/diffusive coefficients are real for real t.
      const auto kc = kernel<double>(std::sqrt(k2[s]), t, params);
      shells[shell] = {kc.a_rr.real(), kc.a_ru.real(), kc.a_uu_par.real(), kc.a_uu_perp.real(),
                       kc.a_bb.real()};
      have[shell] = 1;
    }
    const RealKernel& a = shells[shell];
    const Complex xi_u = kx[s] * u0[s] + ky[s] * u1[s] + kz[s] * u2[s];
    const Complex par = xi_u / k2[s];
    const Complex r = rho[s];
    orho[s] = a.a_rr * r + a.a_ru * kMinusI * xi_u;
    const Complex coupling = a.a_ru * kMinusI * r;
    const double dpar = a.a_par - a.a_perp;
    ou0[s] = coupling * kx[s] + dpar * par * kx[s] + a.a_perp * u0[s];
    ou1[s] = coupling * ky[s] + dpar * par * ky[s] + a.a_perp * u1[s];
    ou2[s] = coupling * kz[s] + dpar * par * kz[s] + a.a_perp * u2[s];
    for (int i = 0; i < 3; ++i) out.B[i].coeffs()[s] = a.a_bb * state.B[i].coeffs()[s];
  }
  return out;
}

FieldState apply_generator(const FieldState& state, const PhysicalParams& params) {
  require_spectral_state(state, "apply_generator");
  const SpectralGrid& g = state.grid();
  const auto& k2 = g.k_squared();
  const Eigen::ArrayXcd xi_u =
      g.kx() * state.u[0].coeffs() + g.ky() * state.u[1].coeffs() + g.kz() * state.u[2].coeffs();
  FieldState out = state;
  out.rho.coeffs() = kMinusI * xi_u;
  for (int i = 0; i < 3; ++i) {
    out.u[i].coeffs() = kMinusI * g.k(i) * state.rho.coeffs() - params.mu * k2 * state.u[i].coeffs() -
                        (params.mu + params.nu) * g.k(i) * xi_u;
    out.B[i].coeffs() = -k2 * state.B[i].coeffs();
  }
  return out;
}

double linear_decay_norm(int k, double t, const RadialDataSpec& data, Component component,
                         const PhysicalParams& params, double rel_tol) {
  if (k < 0 || k > 3) throw InvalidArgument("linear_decay_norm supports k in 0..3");
  if (!(t >= 0.0)) throw InvalidArgument("time must be non-negative");
  validate(params);

  auto integrand = [&](double r) -> double {
    double amp2 = 0.0;
    const auto kr = kernel<double>(r, t, params);
    switch (component) {
      case Component::B:
        amp2 = std::norm(kr.a_bb * data.B(r));
        break;
      case Component::rho:
        amp2 = std::norm(kr.a_rr * data.rho(r) + kr.a_ru * kMinusI * r * data.u_parallel(r));
        break;
      case Component::u:
        amp2 = std::norm(kr.a_ru * kMinusI * r * data.rho(r) + kr.a_uu_par * data.u_parallel(r)) +
               std::norm(kr.a_uu_perp * data.u_transverse(r));
        break;
    }
    return 4.0 * std::numbers::pi * r * r * std::pow(r, 2 * k) * amp2;
  };

  // The data is Gaussian in r and the linear flow damps each shell at
  // least like exp(-d |xi|^2 t) inside the underdamped band, so the mass
  // sits near r ~ 1/sqrt(sigma^2 + 2 d t). Panels double outward from a
  // fraction of that width up to the point where the slowest Gaussian
  // factor has fallen below 1e-12 of its peak contribution.
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  bool any = false;
  for (const auto* g : {&data.rho, &data.u_parallel, &data.u_transverse, &data.B}) {
    if (g->amplitude == 0.0) continue;
    if (!(g->sigma > 0.0)) throw InvalidArgument("radial Gaussian width must be positive");
    sigma_min = any ? std::min(sigma_min, g->sigma) : g->sigma;
    sigma_max = any ? std::max(sigma_max, g->sigma) : g->sigma;
    any = true;
  }
  if (!any) return 0.0;
  const double damping = std::min({params.mu, params.acoustic_damping(), 1.0});
  const double width = 1.0 / std::sqrt(sigma_max * sigma_max + 2.0 * damping * t);
  const double r_cut = std::sqrt(2.0 * (60.0 + 2.0 * k + 2.0)) / sigma_min;

  std::vector<double> breaks{0.0};
  for (double b = width / 8.0; b < r_cut; b *= 2.0) breaks.push_back(b);
  breaks.push_back(r_cut);

  using boost::math::quadrature::gauss_kronrod;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    double panel_error = 0.0;
    const double v = gauss_kronrod<double, 31>::integrate(integrand, breaks[p], breaks[p + 1], 20,
                                                           rel_tol * 1e-2, &panel_error);
    total += v;
    error += panel_error;
  }
  if (!(error <= rel_tol * std::abs(total)) && total != 0.0) {
    throw QuadratureError("radial quadrature did not converge", error / std::abs(total));
  }
  return std::sqrt(total / std::pow(2.0 * std::numbers::pi, 3));
}

}  // namespace hallmhd

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "hallmhd/errors.hpp"
#include "hallmhd/state.hpp"

namespace hallmhd {

/// Roots of the linearized symbol at one |xi|:
///   lambda0 = -mu |xi|^2        (transverse velocity)
///   lambda1 = -|xi|^2           (magnetic field)
///   lambda+- = -(mu + nu/2)|xi|^2 +- i sqrt(|xi|^2 - (mu + nu/2)^2 |xi|^4)
/// The square root is the principal complex one, so past the branch point
/// |xi| = 1/(mu + nu/2) both roots are real and negative.
template <typename Real>
struct Eigenvalues {
  std::complex<Real> lambda0;
  std::complex<Real> lambda1;
  std::complex<Real> lambda_plus;
  std::complex<Real> lambda_minus;
};

/// The five scalar functions that make up G_hat(xi, t):
///   a_rr      = (l+ e^{l- t} - l- e^{l+ t}) / (l+ - l-)
///   a_ru      = (e^{l+ t} - e^{l- t}) / (l+ - l-)   (times -i xi)
///   a_uu_par  = (l+ e^{l+ t} - l- e^{l- t}) / (l+ - l-)
///   a_uu_perp = e^{lambda0 t}
///   a_bb      = e^{lambda1 t}
template <typename Real>
struct PropagatorKernel {
  std::complex<Real> a_rr;
  std::complex<Real> a_ru;
  std::complex<Real> a_uu_par;
  std::complex<Real> a_uu_perp;
  std::complex<Real> a_bb;
};

/// Relative root separation below which the kernel switches to the
/// double-root continuation.
inline constexpr double kDegenerateSwitch = 1e-6;

template <typename Real>
Eigenvalues<Real> eigenvalues(Real xi_norm, const PhysicalParams& params) {
  using C = std::complex<Real>;
  if (!(params.mu > 0.0) || 2.0 * params.mu + 3.0 * params.nu < 0.0) {
    throw InvalidArgument("viscosities violate mu > 0, 2 mu + 3 nu >= 0");
  }
  if (!(xi_norm >= 0)) throw InvalidArgument("|xi| must be non-negative");
  const Real r2 = xi_norm * xi_norm;
  const Real c = static_cast<Real>(params.mu) + static_cast<Real>(params.nu) / 2;
  Eigenvalues<Real> ev;
  ev.lambda0 = C(-static_cast<Real>(params.mu) * r2, 0);
  ev.lambda1 = C(-r2, 0);
  const Real disc = r2 - c * c * r2 * r2;
  if (disc >= 0) {
    const Real w = std::sqrt(disc);
    ev.lambda_plus = C(-c * r2, w);
    ev.lambda_minus = C(-c * r2, -w);
  } else {
    // i*sqrt(disc) = -sqrt(-disc). The larger-magnitude root is formed
    // directly and its partner from lambda+ lambda- = |xi|^2, which avoids
    // cancellation for large |xi|.
    const Real big = -c * r2 - std::sqrt(-disc);
    ev.lambda_plus = C(big, 0);
    ev.lambda_minus = C(r2 / big, 0);
  }
  return ev;
}

namespace detail {

/// sinh(z)/z, with a Taylor series near zero.
template <typename Real>
std::complex<Real> sinhc(std::complex<Real> z) {
  if (std::abs(z) < Real(1e-3)) {
    const auto z2 = z * z;
    return Real(1) + z2 / Real(6) * (Real(1) + z2 / Real(20) * (Real(1) + z2 / Real(42)));
  }
  return std::sinh(z) / z;
}

}  // namespace detail

template <typename Real>
PropagatorKernel<Real> kernel(Real xi_norm, Real t, const PhysicalParams& params) {
  using C = std::complex<Real>;
  if (!(t >= 0)) throw InvalidArgument("propagator time must be non-negative");
  const auto ev = eigenvalues<Real>(xi_norm, params);
  PropagatorKernel<Real> k;
  k.a_uu_perp = std::exp(ev.lambda0 * t);
  k.a_bb = std::exp(ev.lambda1 * t);
  if (t == 0) {
    k.a_rr = C(1);
    k.a_ru = C(0);
    k.a_uu_par = C(1);
    return k;
  }
  const C lp = ev.lambda_plus;
  const C lm = ev.lambda_minus;
  const C diff = lp - lm;
  const Real scale = std::abs(lp) + std::abs(lm) + Real(1);
  if (std::abs(diff) >= Real(kDegenerateSwitch) * scale) {
    const C ep = std::exp(lp * t);
    const C em = std::exp(lm * t);
    k.a_rr = (lp * em - lm * ep) / diff;
    k.a_ru = (ep - em) / diff;
    k.a_uu_par = (lp * ep - lm * em) / diff;
  } else {
    // Centered form around the mean root lambda with half gap eps:
    // a_ru = t e^{lambda t} sinhc(eps t), and a_rr, a_uu_par follow with
    // cosh(eps t) -/+ lambda a_ru. Reduces to t e^{lambda t},
    // e^{lambda t}(1 -/+ lambda t) at a double root.
    const C lambda = (lp + lm) / Real(2);
    const C eps = diff / Real(2);
    const C e = std::exp(lambda * t);
    const C z = eps * t;
    const C ch = std::abs(z) < Real(1e-3) ? Real(1) + z * z / Real(2) * (Real(1) + z * z / Real(12))
                                           : std::cosh(z);
    k.a_ru = t * e * detail::sinhc(z);
    k.a_rr = e * ch - lambda * k.a_ru;
    k.a_uu_par = e * ch + lambda * k.a_ru;
  }
  return k;
}

/// Unknown ordering for 7x7 mode matrices: (rho, u1, u2, u3, B1, B2, B3).
template <typename Real>
using ModeMatrix = Eigen::Matrix<std::complex<Real>, 7, 7>;

template <typename Real>
using Wavevector = Eigen::Matrix<Real, 3, 1>;

/// G_hat(xi, t) assembled from the kernel.
template <typename Real>
ModeMatrix<Real> green_matrix(const Wavevector<Real>& xi, Real t, const PhysicalParams& params) {
  using C = std::complex<Real>;
  const Real r = xi.norm();
  const auto k = kernel<Real>(r, t, params);
  ModeMatrix<Real> g = ModeMatrix<Real>::Zero();
  g(0, 0) = k.a_rr;
  for (int i = 0; i < 3; ++i) {
    g(0, 1 + i) = C(0, -1) * xi[i] * k.a_ru;
    g(1 + i, 0) = C(0, -1) * xi[i] * k.a_ru;
    g(4 + i, 4 + i) = k.a_bb;
    for (int j = 0; j < 3; ++j) {
      const Real par = r > 0 ? xi[i] * xi[j] / (r * r) : Real(0);
      const Real perp = (i == j ? Real(1) : Real(0)) - par;
      g(1 + i, 1 + j) = k.a_uu_par * par + k.a_uu_perp * perp;
    }
  }
  return g;
}

/// Symbol of the linearized operator:
///   d/dt rho = -i xi . u
///   d/dt u   = -i xi rho - mu |xi|^2 u - (mu + nu) xi (xi . u)
///   d/dt B   = -|xi|^2 B
template <typename Real>
ModeMatrix<Real> generator(const Wavevector<Real>& xi, const PhysicalParams& params) {
  using C = std::complex<Real>;
  const Real r2 = xi.squaredNorm();
  const Real mu = static_cast<Real>(params.mu);
  const Real mu_nu = static_cast<Real>(params.mu + params.nu);
  ModeMatrix<Real> a = ModeMatrix<Real>::Zero();
  for (int i = 0; i < 3; ++i) {
    a(0, 1 + i) = C(0, -xi[i]);
    a(1 + i, 0) = C(0, -xi[i]);
    a(4 + i, 4 + i) = C(-r2, 0);
    for (int j = 0; j < 3; ++j) {
      a(1 + i, 1 + j) = C(-mu_nu * xi[i] * xi[j] - (i == j ? mu * r2 : Real(0)), 0);
    }
  }
  return a;
}

/// Apply G_hat(xi, t) to every mode of a spectral state. The zero mode (and
/// any Nyquist-carrying mode, which has operator wavenumber 0) is left
/// unchanged. The time stamp advances by t.
FieldState apply_propagator(const FieldState& state, double t, const PhysicalParams& params);

/// Apply the generator A(xi) per mode (the linear part of the right-hand side).
FieldState apply_generator(const FieldState& state, const PhysicalParams& params);

/// Radially symmetric initial data for the whole-space quadrature, given
/// by the magnitudes of the Fourier transforms:
///   rho_hat0(r)            real, profile A e^{-sigma^2 r^2 / 2}
///   xi_hat . u_hat0(r)     real (longitudinal velocity)
///   |u_hat0 transverse|(r)
///   |B_hat0|(r)
/// The Fourier transform convention is f_hat(xi) = int f e^{-i x.xi} dx.
struct RadialGaussian {
  double amplitude = 0.0;
  double sigma = 1.0;
  double operator()(double r) const { return amplitude * std::exp(-0.5 * sigma * sigma * r * r); }
};

struct RadialDataSpec {
  RadialGaussian rho;
  RadialGaussian u_parallel;
  RadialGaussian u_transverse;
  RadialGaussian B;
};

enum class Component { rho, u, B };

/// Whole-space ||nabla^k component(t)||_{L2(R^3)} of the linearized flow:
///   ( (2 pi)^-3 int_0^inf 4 pi r^2 r^{2k} |G_hat(r,t) data(r)|^2 dr )^{1/2}
/// evaluated by adaptive Gauss-Kronrod quadrature on geometric panels
/// around the diffusive length scale. Throws QuadratureError if a panel
/// misses the requested relative tolerance.
double linear_decay_norm(int k, double t, const RadialDataSpec& data, Component component,
                         const PhysicalParams& params, double rel_tol = 1e-8);

}  // namespace hallmhd

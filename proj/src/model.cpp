#include "hallmhd/model.hpp"

#include <algorithm>
#include <cmath>

#include "hallmhd/errors.hpp"
#include "hallmhd/propagator.hpp"
#include "hallmhd/spectral_ops.hpp"

namespace hallmhd {

void validate(const PhysicalParams& params) {
  if (!(params.mu > 0.0) || !(2.0 * params.mu + 3.0 * params.nu >= 0.0)) {
    throw InvalidArgument("viscosities violate the physical condition mu > 0, 2 mu + 3 nu >= 0");
  }
  if (!(params.gamma >= 1.0)) throw InvalidArgument("pressure exponent gamma must be >= 1");
}

FieldState FieldState::zeros(GridPtr grid, Representation rep) {
  FieldState s;
  s.rho = ScalarField::zeros(grid, rep);
  s.u = VectorField::zeros(grid, rep);
  s.B = VectorField::zeros(grid, rep);
  return s;
}

bool FieldState::is_spectral() const {
  if (!rho.is_spectral()) return false;
  for (int i = 0; i < 3; ++i) {
    if (!u[i].is_spectral() || !B[i].is_spectral()) return false;
  }
  return true;
}

FieldState& FieldState::operator+=(const FieldState& other) {
  rho += other.rho;
  u += other.u;
  B += other.B;
  return *this;
}

FieldState& FieldState::operator-=(const FieldState& other) {
  rho -= other.rho;
  u -= other.u;
  B -= other.B;
  return *this;
}

FieldState& FieldState::operator*=(double a) {
  rho *= a;
  u *= a;
  B *= a;
  return *this;
}

FieldState operator+(FieldState a, const FieldState& b) { return a += b; }
FieldState operator-(FieldState a, const FieldState& b) { return a -= b; }
FieldState operator*(double s, FieldState a) { return a *= s; }

FieldState to_spectral(const FieldState& s) {
  FieldState out;
  out.time = s.time;
  out.rho = to_spectral(s.rho);
  out.u = to_spectral(s.u);
  out.B = to_spectral(s.B);
  return out;
}

FieldState to_physical(const FieldState& s) {
  FieldState out;
  out.time = s.time;
  out.rho = to_physical(s.rho);
  out.u = to_physical(s.u);
  out.B = to_physical(s.B);
  return out;
}

void check_regime(const FieldState& s) {
  const ScalarField rho = to_physical(s.rho);
  const double lo = rho.values().minCoeff() + 1.0;
  const double hi = rho.values().maxCoeff() + 1.0;
  if (lo < kRegimeLower) {
    throw RegimeViolation("rho", lo, "min(rho+1) fell below 1/2");
  }
  if (hi > kRegimeUpper) {
    throw RegimeViolation("rho", hi, "max(rho+1) exceeded 3/2");
  }
}

namespace {

double max_abs_component(const ScalarField& f) { return to_physical(f).values().abs().maxCoeff(); }

}  // namespace

double max_abs_difference(const FieldState& a, const FieldState& b) {
  double m = max_abs_component(a.rho - b.rho);
  for (int i = 0; i < 3; ++i) {
    m = std::max(m, max_abs_component(a.u[i] - b.u[i]));
    m = std::max(m, max_abs_component(a.B[i] - b.B[i]));
  }
  return m;
}

double max_abs(const FieldState& a) {
  double m = max_abs_component(a.rho);
  for (int i = 0; i < 3; ++i) {
    m = std::max(m, max_abs_component(a.u[i]));
    m = std::max(m, max_abs_component(a.B[i]));
  }
  return m;
}

Coefficients coeffs(const Eigen::ArrayXd& rho, double gamma) {
  const Eigen::ArrayXd density = rho + 1.0;
  if (density.size() > 0 && density.minCoeff() <= 0.0) {
    throw RegimeViolation("rho", density.minCoeff(), "rho+1 must stay positive");
  }
  Coefficients c;
  c.g = density.inverse();
  c.h = rho * c.g;
  c.f = density.pow(gamma - 2.0) - 1.0;
  return c;
}

namespace {

using Array = Eigen::ArrayXd;

Array phys(const ScalarField& f) { return to_physical(f).values(); }

/// Forward transform of a physical product followed by the 2/3 mask.
ScalarField spectral_dealiased(const GridPtr& grid, Array values) {
  return dealias(transform(ScalarField::from_values(grid, std::move(values)), Direction::forward));
}

/// Physical samples of a 3x3 gradient: d[i][j] = d_j v_i.
using Gradient = std::array<std::array<Array, 3>, 3>;

Gradient gradient_samples(const VectorField& v) {
  Gradient d;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) d[i][j] = phys(derivative(v[i], j));
  }
  return d;
}

/// B.grad B - grad(|B|^2)/2 = (curl B) x B, dealiased, as spectral field.
VectorField lorentz(const GridPtr& grid, const std::array<Array, 3>& B, const Gradient& dB) {
  VectorField out;
  for (int i = 0; i < 3; ++i) {
    Array l = Array::Zero(B[0].size());
    for (int j = 0; j < 3; ++j) l += B[j] * (dB[i][j] - dB[j][i]);
    out.c[i] = spectral_dealiased(grid, std::move(l));
  }
  return out;
}

struct Terms {
  ScalarField S1;
  VectorField S2;
  VectorField S3;
};

enum TermMask { kS1 = 1, kS2 = 2, kS3 = 4 };

Terms assemble(const FieldState& state, const PhysicalParams& params, int which) {
  if (!state.is_spectral()) throw RepresentationMismatch("nonlinear terms need a spectral state");
  const GridPtr& grid = state.grid_ptr();
  const Array rho = phys(state.rho);
  const Coefficients c = coeffs(rho, params.gamma);

  std::array<Array, 3> u, B, grad_rho;
  for (int i = 0; i < 3; ++i) {
    u[i] = phys(state.u[i]);
    B[i] = phys(state.B[i]);
    grad_rho[i] = phys(derivative(state.rho, i));
  }
  const Gradient du = gradient_samples(state.u);
  const Array div_u = du[0][0] + du[1][1] + du[2][2];

  Terms t;
  if (which & kS1) {
    Array s1 = -rho * div_u;
    for (int j = 0; j < 3; ++j) s1 -= u[j] * grad_rho[j];
    t.S1 = spectral_dealiased(grid, std::move(s1));
  }
  if (!(which & (kS2 | kS3))) return t;

  const Gradient dB = gradient_samples(state.B);
  VectorField gl;  // g(rho) times the dealiased Lorentz force
  {
    const VectorField l = lorentz(grid, B, dB);
    for (int i = 0; i < 3; ++i) gl.c[i] = spectral_dealiased(grid, c.g * phys(l[i]));
  }

  if (which & kS2) {
    const ScalarField div_u_hat = divergence(state.u);
    for (int i = 0; i < 3; ++i) {
      const ScalarField visc =
          params.mu * laplacian(state.u[i]) + (params.mu + params.nu) * derivative(div_u_hat, i);
      Array s2 = -c.h * phys(visc) - c.f * grad_rho[i];
      for (int j = 0; j < 3; ++j) s2 -= u[j] * du[i][j];
      t.S2.c[i] = spectral_dealiased(grid, std::move(s2)) + gl[i];
    }
  }

  if (which & kS3) {
    VectorField s3;
    for (int i = 0; i < 3; ++i) {
      Array a = -B[i] * div_u;
      for (int j = 0; j < 3; ++j) a += B[j] * du[i][j] - u[j] * dB[i][j];
      s3.c[i] = spectral_dealiased(grid, std::move(a));
    }
    if (params.hall) s3 -= curl(gl);
    t.S3 = project_divergence_free(dealias(s3));
  }
  return t;
}

}  // namespace

FieldState nonlinear_terms(const FieldState& state, const PhysicalParams& params) {
  Terms t = assemble(state, params, kS1 | kS2 | kS3);
  FieldState out;
  out.time = state.time;
  out.rho = std::move(t.S1);
  out.u = std::move(t.S2);
  out.B = std::move(t.S3);
  return out;
}

ScalarField compute_S1(const FieldState& state) {
  // Coefficients are evaluated for the regime check only; gamma is irrelevant.
  return assemble(state, PhysicalParams{}, kS1).S1;
}

VectorField compute_S2(const FieldState& state, const PhysicalParams& params) {
  return assemble(state, params, kS2).S2;
}

VectorField compute_S3(const FieldState& state, const PhysicalParams& params) {
  return assemble(state, params, kS3).S3;
}

FieldState full_rhs(const FieldState& state, const PhysicalParams& params) {
  validate(params);
  FieldState rhs = apply_generator(state, params);
  if (params.nonlinear) {
    rhs += nonlinear_terms(state, params);
  }
  rhs.time = state.time;
  return rhs;
}

namespace {

double max_norm(const VectorField& v) {
  double m = 0.0;
  for (const auto& comp : v.c) m = std::max(m, max_abs_component(comp));
  return m;
}

double relative_residual(const VectorField& lhs, const VectorField& rhs) {
  const double scale = std::max(max_norm(lhs), max_norm(rhs));
  if (scale == 0.0) return 0.0;
  return max_norm(lhs - rhs) / scale;
}

}  // namespace

IdentityResiduals check_identities(const VectorField& B_in, const VectorField& u_in) {
  const VectorField Bh = to_spectral(B_in);
  const VectorField uh = to_spectral(u_in);
  const GridPtr& grid = Bh.grid_ptr();

  std::array<Array, 3> B, u, J;
  const VectorField curl_B = curl(Bh);
  for (int i = 0; i < 3; ++i) {
    B[i] = phys(Bh[i]);
    u[i] = phys(uh[i]);
    J[i] = phys(curl_B[i]);
  }
  const Gradient dB = gradient_samples(Bh);
  const Gradient du = gradient_samples(uh);
  const Array div_B = dB[0][0] + dB[1][1] + dB[2][2];
  const Array div_u = du[0][0] + du[1][1] + du[2][2];

  IdentityResiduals r;

  // (curl B) x B against B.grad B - grad(|B|^2)/2, the latter with the
  // gradient taken spectrally from the dealiased |B|^2.
  VectorField lhs1, rhs1;
  const ScalarField half_b2 = spectral_dealiased(grid, 0.5 * (B[0] * B[0] + B[1] * B[1] + B[2] * B[2]));
  const VectorField grad_half_b2 = gradient(half_b2);
  for (int i = 0; i < 3; ++i) {
    const int a = (i + 1) % 3;
    const int b = (i + 2) % 3;
    lhs1.c[i] = spectral_dealiased(grid, J[a] * B[b] - J[b] * B[a]);
    Array adv = Array::Zero(B[0].size());
    for (int j = 0; j < 3; ++j) adv += B[j] * dB[i][j];
    rhs1.c[i] = spectral_dealiased(grid, std::move(adv)) - grad_half_b2[i];
  }
  r.lorentz = relative_residual(lhs1, rhs1);

  VectorField uxB, rhs2;
  for (int i = 0; i < 3; ++i) {
    const int a = (i + 1) % 3;
    const int b = (i + 2) % 3;
    uxB.c[i] = spectral_dealiased(grid, u[a] * B[b] - u[b] * B[a]);
    Array v = u[i] * div_B - B[i] * div_u;
    for (int j = 0; j < 3; ++j) v += B[j] * du[i][j] - u[j] * dB[i][j];
    rhs2.c[i] = spectral_dealiased(grid, std::move(v));
  }
  r.induction = relative_residual(curl(uxB), rhs2);
  return r;
}

}  // namespace hallmhd

#pragma once

#include <Eigen/Core>

#include "hallmhd/state.hpp"

namespace hallmhd {

/// Pointwise coefficient functions of the density perturbation:
///   h = rho/(rho+1),  f = P'(rho+1)/(rho+1) - 1 = (rho+1)^(gamma-2) - 1,
///   g = 1/(rho+1).
struct Coefficients {
  Eigen::ArrayXd h;
  Eigen::ArrayXd f;
  Eigen::ArrayXd g;
};

/// Throws RegimeViolation if rho + 1 <= 0 anywhere.
Coefficients coeffs(const Eigen::ArrayXd& rho, double gamma);

/// The nonlinear forcing (S1, S2, S3) packed as a spectral FieldState.
/// Every product is formed on physical samples and 2/3-dealiased; the
/// Hall term is built as two dealiased binary products (B with grad B,
/// then g with the result) before its curl. S3 is projected
/// divergence-free.
FieldState nonlinear_terms(const FieldState& state, const PhysicalParams& params);

/// S1 = -rho div u - u . grad rho
ScalarField compute_S1(const FieldState& state);
/// S2 = -u.grad u - h [mu Lap u + (mu+nu) grad div u] - f grad rho
///      + g [B.grad B - grad(|B|^2)/2]
VectorField compute_S2(const FieldState& state, const PhysicalParams& params);
/// S3 = -u.grad B + B.grad u - B div u - curl[g (B.grad B - grad(|B|^2)/2)]
/// The curl term is dropped when params.hall is false.
VectorField compute_S3(const FieldState& state, const PhysicalParams& params);

/// Time derivative of the perturbation system:
///   rho_t = -div u + S1
///   u_t   = mu Lap u + (mu+nu) grad div u - grad rho + S2
///   B_t   = Lap B + S3
/// With params.nonlinear false this is exactly the generator A(xi) applied
/// mode by mode. The coefficient functions reject rho+1 <= 0; the
/// narrower 1/2 <= rho+1 <= 3/2 band is the caller's check_regime.
FieldState full_rhs(const FieldState& state, const PhysicalParams& params);

/// Max-norm residuals of
///   (curl B) x B = B.grad B - grad(|B|^2)/2
///   curl(u x B)  = u div B - u.grad B + B.grad u - B div u
/// each relative to the larger max-norm of its two sides.
struct IdentityResiduals {
  double lorentz = 0.0;
  double induction = 0.0;
};

IdentityResiduals check_identities(const VectorField& B, const VectorField& u);

}  // namespace hallmhd

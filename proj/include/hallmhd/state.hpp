#pragma once

#include "hallmhd/field.hpp"

namespace hallmhd {

/// Viscosities, pressure exponent and model switches.
///
/// The pressure law is P(rho) = rho^gamma / gamma, so P'(1) = 1 for every
/// gamma. `hall = false` drops the Hall term (compressible MHD);
/// `nonlinear = false` zeroes S1..S3 and leaves the linearized system.
struct PhysicalParams {
  double mu = 1.0;
  double nu = 0.0;
  double gamma = 1.4;
  bool hall = true;
  bool nonlinear = true;

  /// mu + nu/2, the damping coefficient of the acoustic pair.
  double acoustic_damping() const { return mu + 0.5 * nu; }
};

/// Throws InvalidArgument unless mu > 0, 2 mu + 3 nu >= 0 and gamma >= 1.
void validate(const PhysicalParams& params);

/// The perturbation unknowns (rho - 1, u, B) at one instant.
struct FieldState {
  double time = 0.0;
  ScalarField rho;
  VectorField u;
  VectorField B;

  static FieldState zeros(GridPtr grid, Representation rep = Representation::spectral);

  const SpectralGrid& grid() const { return rho.grid(); }
  const GridPtr& grid_ptr() const { return rho.grid_ptr(); }
  bool is_spectral() const;

  FieldState& operator+=(const FieldState& other);
  FieldState& operator-=(const FieldState& other);
  FieldState& operator*=(double a);
};

/// Componentwise; the time stamp of the left operand is kept.
FieldState operator+(FieldState a, const FieldState& b);
FieldState operator-(FieldState a, const FieldState& b);
FieldState operator*(double s, FieldState a);

FieldState to_spectral(const FieldState& s);
FieldState to_physical(const FieldState& s);

/// Bounds of the validated small-perturbation regime on rho + 1.
inline constexpr double kRegimeLower = 0.5;
inline constexpr double kRegimeUpper = 1.5;

/// Throws RegimeViolation if rho + 1 leaves [1/2, 3/2] anywhere on the grid.
void check_regime(const FieldState& s);

/// Max-norm over all seven components of the physical samples; used by
/// tests comparing states.
double max_abs_difference(const FieldState& a, const FieldState& b);
double max_abs(const FieldState& a);

}  // namespace hallmhd

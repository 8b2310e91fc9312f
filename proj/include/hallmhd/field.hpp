#pragma once

#include <array>
#include <cstddef>

#include <Eigen/Core>

#include "hallmhd/grid.hpp"

namespace hallmhd {

enum class Representation { physical, spectral };
enum class Direction { forward, inverse };

/// A scalar on a SpectralGrid, held either as n^3 real samples or as the
/// half-complex spectrum. Only the active representation carries data.
class ScalarField {
 public:
  ScalarField() = default;

  static ScalarField zeros(GridPtr grid, Representation rep);
  static ScalarField from_values(GridPtr grid, Eigen::ArrayXd values);
  static ScalarField from_coeffs(GridPtr grid, Eigen::ArrayXcd coeffs);

  Representation representation() const { return rep_; }
  bool is_spectral() const { return rep_ == Representation::spectral; }
  bool is_physical() const { return rep_ == Representation::physical; }

  const SpectralGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }

  /// Throw RepresentationMismatch when the field is spectral.
  const Eigen::ArrayXd& values() const;
  Eigen::ArrayXd& values();
  /// Throw RepresentationMismatch when the field is physical.
  const Eigen::ArrayXcd& coeffs() const;
  Eigen::ArrayXcd& coeffs();

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double a);

 private:
  GridPtr grid_;
  Representation rep_ = Representation::physical;
  Eigen::ArrayXd values_;
  Eigen::ArrayXcd coeffs_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);

/// Three Cartesian components sharing one grid and representation.
struct VectorField {
  std::array<ScalarField, 3> c;

  static VectorField zeros(GridPtr grid, Representation rep);

  ScalarField& operator[](int i) { return c[i]; }
  const ScalarField& operator[](int i) const { return c[i]; }
  Representation representation() const { return c[0].representation(); }
  const SpectralGrid& grid() const { return c[0].grid(); }
  const GridPtr& grid_ptr() const { return c[0].grid_ptr(); }

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(double a);
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double s, VectorField a);

/// Forward maps physical -> spectral, inverse maps spectral -> physical.
/// Throws RepresentationMismatch if the field is not in the source
/// representation of the requested direction.
ScalarField transform(const ScalarField& field, Direction direction);
VectorField transform(const VectorField& field, Direction direction);

/// Convert if needed; no-op when already in the target representation.
ScalarField to_spectral(const ScalarField& field);
ScalarField to_physical(const ScalarField& field);
VectorField to_spectral(const VectorField& field);
VectorField to_physical(const VectorField& field);

}  // namespace hallmhd

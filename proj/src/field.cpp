#include "hallmhd/field.hpp"

#include "hallmhd/errors.hpp"

namespace hallmhd {

namespace {

void require_compatible(const ScalarField& a, const ScalarField& b) {
  if (&a.grid() != &b.grid()) throw InvalidArgument("fields live on different grids");
  if (a.representation() != b.representation()) {
    throw RepresentationMismatch("fields are in different representations");
  }
}

}  // namespace

ScalarField ScalarField::zeros(GridPtr grid, Representation rep) {
  if (rep == Representation::physical) {
    const auto size = static_cast<Eigen::Index>(grid->physical_size());
    return from_values(std::move(grid), Eigen::ArrayXd::Zero(size));
  }
  const auto size = static_cast<Eigen::Index>(grid->spectral_size());
  return from_coeffs(std::move(grid), Eigen::ArrayXcd::Zero(size));
}

ScalarField ScalarField::from_values(GridPtr grid, Eigen::ArrayXd values) {
  if (static_cast<std::size_t>(values.size()) != grid->physical_size()) {
    throw InvalidArgument("physical data size does not match grid");
  }
  ScalarField f;
  f.grid_ = std::move(grid);
  f.rep_ = Representation::physical;
  f.values_ = std::move(values);
  return f;
}

ScalarField ScalarField::from_coeffs(GridPtr grid, Eigen::ArrayXcd coeffs) {
  if (static_cast<std::size_t>(coeffs.size()) != grid->spectral_size()) {
    throw InvalidArgument("spectral data size does not match grid");
  }
  ScalarField f;
  f.grid_ = std::move(grid);
  f.rep_ = Representation::spectral;
  f.coeffs_ = std::move(coeffs);
  return f;
}

const Eigen::ArrayXd& ScalarField::values() const {
  if (!is_physical()) throw RepresentationMismatch("field is spectral, physical values requested");
  return values_;
}

Eigen::ArrayXd& ScalarField::values() {
  if (!is_physical()) throw RepresentationMismatch("field is spectral, physical values requested");
  return values_;
}

const Eigen::ArrayXcd& ScalarField::coeffs() const {
  if (!is_spectral()) throw RepresentationMismatch("field is physical, spectral coefficients requested");
  return coeffs_;
}

Eigen::ArrayXcd& ScalarField::coeffs() {
  if (!is_spectral()) throw RepresentationMismatch("field is physical, spectral coefficients requested");
  return coeffs_;
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  require_compatible(*this, other);
  if (is_physical()) {
    values_ += other.values_;
  } else {
    coeffs_ += other.coeffs_;
  }
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  require_compatible(*this, other);
  if (is_physical()) {
    values_ -= other.values_;
  } else {
    coeffs_ -= other.coeffs_;
  }
  return *this;
}

ScalarField& ScalarField::operator*=(double a) {
  if (is_physical()) {
    values_ *= a;
  } else {
    coeffs_ *= a;
  }
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

VectorField VectorField::zeros(GridPtr grid, Representation rep) {
  VectorField v;
  for (auto& comp : v.c) comp = ScalarField::zeros(grid, rep);
  return v;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  for (int i = 0; i < 3; ++i) c[i] += other.c[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  for (int i = 0; i < 3; ++i) c[i] -= other.c[i];
  return *this;
}

VectorField& VectorField::operator*=(double a) {
  for (auto& comp : c) comp *= a;
  return *this;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double s, VectorField a) { return a *= s; }

ScalarField transform(const ScalarField& field, Direction direction) {
  const SpectralGrid& g = field.grid();
  if (direction == Direction::forward) {
    if (!field.is_physical()) throw RepresentationMismatch("forward transform needs a physical field");
    Eigen::ArrayXcd out(static_cast<Eigen::Index>(g.spectral_size()));
    g.forward(field.values().data(), out.data());
    return ScalarField::from_coeffs(field.grid_ptr(), std::move(out));
  }
  if (!field.is_spectral()) throw RepresentationMismatch("inverse transform needs a spectral field");
  Eigen::ArrayXd out(static_cast<Eigen::Index>(g.physical_size()));
  g.inverse(field.coeffs().data(), out.data());
  return ScalarField::from_values(field.grid_ptr(), std::move(out));
}

VectorField transform(const VectorField& field, Direction direction) {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = transform(field.c[i], direction);
  return out;
}

ScalarField to_spectral(const ScalarField& field) {
  return field.is_spectral() ? field : transform(field, Direction::forward);
}

ScalarField to_physical(const ScalarField& field) {
  return field.is_physical() ? field : transform(field, Direction::inverse);
}

VectorField to_spectral(const VectorField& field) {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = to_spectral(field.c[i]);
  return out;
}

VectorField to_physical(const VectorField& field) {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = to_physical(field.c[i]);
  return out;
}

}  // namespace hallmhd

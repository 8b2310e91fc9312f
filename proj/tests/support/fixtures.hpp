#pragma once

#include <cstdint>
#include <functional>

#include "hallmhd/field.hpp"
#include "hallmhd/grid.hpp"
#include "hallmhd/state.hpp"

namespace hallmhd::testing {

inline constexpr double kTwoPi = 6.283185307179586;

using PointFunction = std::function<double(double x, double y, double z)>;

/// Physical samples of f at the grid nodes x_i = i L / n.
ScalarField sample(const GridPtr& grid, const PointFunction& f);
ScalarField sample_spectral(const GridPtr& grid, const PointFunction& f);

/// Random smooth state of the given H^2 norm built from the library
/// generator (B divergence-free, dealiased).
FieldState random_state(const GridPtr& grid, std::uint64_t seed, double amplitude);

/// Random band-limited vector field with |m_j| <= max_mode, spectral.
VectorField random_band_vector(const GridPtr& grid, std::uint64_t seed, int max_mode);

double max_abs(const Eigen::ArrayXd& a);
double max_abs(const ScalarField& f);
double max_abs(const VectorField& v);

/// Max |coefficient| over all modes of a spectral field.
double max_coeff(const ScalarField& f);
double max_coeff(const VectorField& v);

}  // namespace hallmhd::testing

#include "fixtures.hpp"

#include <algorithm>

#include "hallmhd/initial_data.hpp"

namespace hallmhd::testing {

ScalarField sample(const GridPtr& grid, const PointFunction& f) {
  const int n = grid->n();
  const double dx = grid->dx();
  Eigen::ArrayXd v(grid->physical_size());
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) v[grid->physical_index(i, j, k)] = f(i * dx, j * dx, k * dx);
    }
  }
  return ScalarField::from_values(grid, std::move(v));
}

ScalarField sample_spectral(const GridPtr& grid, const PointFunction& f) {
  return to_spectral(sample(grid, f));
}

FieldState random_state(const GridPtr& grid, std::uint64_t seed, double amplitude) {
  InitialSpec spec;
  spec.kind = InitialKind::random_lowpass;
  spec.seed = seed;
  spec.amplitude = amplitude;
  spec.scale = 2.0 * grid->dx();
  return make_initial_data(spec, grid);
}

VectorField random_band_vector(const GridPtr& grid, std::uint64_t seed, int max_mode) {
  NormalStream rng(seed);
  return random_vector(grid, rng, 0.0, max_mode);
}

double max_abs(const Eigen::ArrayXd& a) { return a.abs().maxCoeff(); }

double max_abs(const ScalarField& f) { return max_abs(to_physical(f).values()); }

double max_abs(const VectorField& v) {
  return std::max({max_abs(v[0]), max_abs(v[1]), max_abs(v[2])});
}

double max_coeff(const ScalarField& f) { return f.coeffs().abs().maxCoeff(); }

double max_coeff(const VectorField& v) {
  return std::max({max_coeff(v[0]), max_coeff(v[1]), max_coeff(v[2])});
}

}  // namespace hallmhd::testing

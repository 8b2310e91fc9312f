#include "hallmhd/initial_data.hpp"

#include <cmath>
#include <numbers>

#include "hallmhd/errors.hpp"
#include "hallmhd/spectral_ops.hpp"

namespace hallmhd {

InitialKind parse_initial_kind(const std::string& name) {
  if (name == "gaussian_bump") return InitialKind::gaussian_bump;
  if (name == "random_lowpass") return InitialKind::random_lowpass;
  throw InvalidArgument("unknown initial data kind '" + name + "' (gaussian_bump | random_lowpass)");
}

std::string to_string(InitialKind kind) {
  return kind == InitialKind::gaussian_bump ? "gaussian_bump" : "random_lowpass";
}

NormalStream::NormalStream(std::uint64_t seed) : engine_(seed) {}

double NormalStream::next() {
  constexpr double kTwoPow53 = 9007199254740992.0;
  const double u1 = static_cast<double>(engine_() >> 11) / kTwoPow53;
  const double u2 = static_cast<double>(engine_() >> 11) / kTwoPow53;
  return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ScalarField random_scalar(const GridPtr& grid, NormalStream& rng, double correlation_length,
                          int max_mode) {
  const SpectralGrid& g = *grid;
  const int band = max_mode < 0 ? g.n() / 3 : std::min(max_mode, g.n() / 3);
  const double k0 = g.fundamental();
  Eigen::ArrayXcd c = Eigen::ArrayXcd::Zero(static_cast<Eigen::Index>(g.spectral_size()));
  for (int iz = 0; iz < g.n(); ++iz) {
    for (int iy = 0; iy < g.n(); ++iy) {
      for (int ix = 0; ix < g.half_n(); ++ix) {
        const int mx = g.mode(ix);
        const int my = g.mode(iy);
        const int mz = g.mode(iz);
        if (std::abs(mx) > band || std::abs(my) > band || std::abs(mz) > band) continue;
        if (mx == 0 && my == 0 && mz == 0) continue;
        const double k2 = k0 * k0 * (mx * mx + my * my + mz * mz);
        const double env = std::exp(-0.5 * correlation_length * correlation_length * k2);
        const double re = rng.next();
        const double im = rng.next();
        c[static_cast<Eigen::Index>(g.spectral_index(ix, iy, iz))] = env * Complex(re, im);
      }
    }
  }
  // A round trip through physical space makes the self-conjugate planes
  // Hermitian.
  ScalarField f = transform(transform(ScalarField::from_coeffs(grid, std::move(c)), Direction::inverse),
                            Direction::forward);
  const double rms = std::sqrt(seminorm_squared(f, 0) / g.volume());
  if (rms > 0.0) f *= 1.0 / rms;
  return f;
}

VectorField random_vector(const GridPtr& grid, NormalStream& rng, double correlation_length,
                          int max_mode) {
  VectorField v;
  for (int i = 0; i < 3; ++i) v.c[i] = random_scalar(grid, rng, correlation_length, max_mode);
  return v;
}

double h2_norm(const FieldState& state) {
  const FieldState s = to_spectral(state);
  double sum = 0.0;
  for (int j = 0; j <= 2; ++j) {
    sum += seminorm_squared(s.rho, j) + seminorm_squared(s.u, j) + seminorm_squared(s.B, j);
  }
  return std::sqrt(sum);
}

namespace {

FieldState gaussian_bump(const GridPtr& grid, double width) {
  const SpectralGrid& g = *grid;
  const int n = g.n();
  const double c = 0.5 * g.box_length();
  Eigen::ArrayXd G(static_cast<Eigen::Index>(g.physical_size()));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double x = i * g.dx() - c;
        const double y = j * g.dx() - c;
        const double z = k * g.dx() - c;
        G[static_cast<Eigen::Index>(g.physical_index(i, j, k))] =
            std::exp(-(x * x + y * y + z * z) / (2.0 * width * width));
      }
    }
  }
  const ScalarField bump = dealias(transform(ScalarField::from_values(grid, G), Direction::forward));

  FieldState s;
  s.rho = bump;
  s.u.c = {bump, -0.5 * bump, 0.25 * bump};
  // B = curl(G a) with a = (1, 1, 1): divergence-free by construction.
  VectorField potential;
  potential.c = {bump, bump, bump};
  s.B = curl(potential);
  return s;
}

FieldState random_lowpass(const GridPtr& grid, std::uint64_t seed, double scale) {
  NormalStream rng(seed);
  FieldState s;
  s.rho = random_scalar(grid, rng, scale);
  s.u = random_vector(grid, rng, scale);
  s.B = random_vector(grid, rng, scale);
  return s;
}

}  // namespace

FieldState make_initial_data(const InitialSpec& spec, const GridPtr& grid) {
  if (!(spec.amplitude >= 0.0)) throw InvalidArgument("initial amplitude must be non-negative");
  if (spec.amplitude == 0.0) return FieldState::zeros(grid);

  FieldState s;
  if (spec.kind == InitialKind::gaussian_bump) {
    s = gaussian_bump(grid, spec.scale > 0.0 ? spec.scale : grid->box_length() / 20.0);
  } else {
    s = random_lowpass(grid, spec.seed, spec.scale > 0.0 ? spec.scale : 1.5 * grid->dx());
  }
  s.rho = dealias(s.rho);
  s.u = dealias(s.u);
  s.B = project_divergence_free(dealias(s.B));
  s.time = 0.0;
  const double norm = h2_norm(s);
  if (norm == 0.0) throw InvalidArgument("generated initial data is identically zero");
  s *= spec.amplitude / norm;
  return s;
}

}  // namespace hallmhd

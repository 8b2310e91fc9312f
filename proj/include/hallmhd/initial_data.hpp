#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "hallmhd/state.hpp"

namespace hallmhd {

enum class InitialKind { gaussian_bump, random_lowpass };

InitialKind parse_initial_kind(const std::string& name);
std::string to_string(InitialKind kind);

struct InitialSpec {
  InitialKind kind = InitialKind::random_lowpass;
  /// Target ||(rho, u, B)||_{H^2}, the root of the summed squared H^2 norms.
  double amplitude = 0.05;
  std::uint64_t seed = 1;
  /// Physical width of the bump, or correlation length of the random
  /// spectrum (envelope exp(-scale^2 |k|^2 / 2)). Non-positive selects the
  /// default: L/20 for the bump, 1.5 L/n for random data.
  double scale = 0.0;
};

/// Deterministic standard normals: std::mt19937_64 seeded with `seed`,
/// 53-bit uniforms (x >> 11) * 2^-53 and the Box-Muller cosine branch.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed);
  double next();

 private:
  std::mt19937_64 engine_;
};

/// Random real field with Gaussian spectral envelope, zero mean, supported
/// on |m_j| <= max_mode (the dealias band when max_mode < 0). Spectral.
ScalarField random_scalar(const GridPtr& grid, NormalStream& rng, double correlation_length,
                          int max_mode = -1);
VectorField random_vector(const GridPtr& grid, NormalStream& rng, double correlation_length,
                          int max_mode = -1);

/// Smooth initial data with B projected divergence-free, dealiased and
/// rescaled so that its H^2 norm equals spec.amplitude. Spectral.
FieldState make_initial_data(const InitialSpec& spec, const GridPtr& grid);

/// sqrt(sum over the seven components of ||.||_{H^2}^2).
double h2_norm(const FieldState& state);

}  // namespace hallmhd

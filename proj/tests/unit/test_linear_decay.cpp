#include <cmath>

#include "gtest/gtest.h"
#include "hallmhd/diagnostics.hpp"
#include "hallmhd/propagator.hpp"

namespace hallmhd {
namespace {

constexpr double kPi = 3.141592653589793;

// ||nabla^k e^{t Lap} B0||_{L2(R^3)} for |B0_hat| = A exp(-sigma^2 r^2 / 2):
// (2 pi)^-3 4 pi A^2 Gamma(k + 3/2) / (2 a^{k+3/2}), a = sigma^2 + 2t.
double gaussian_heat_norm(int k, double t, double A, double sigma) {
  const double a = sigma * sigma + 2.0 * t;
  const double sq = 4.0 * kPi * A * A * std::tgamma(k + 1.5) / (2.0 * std::pow(a, k + 1.5)) / std::pow(2.0 * kPi, 3);
  return std::sqrt(sq);
}

RadialDataSpec magnetic_only(double A, double sigma) {
  RadialDataSpec d;
  d.B = {A, sigma};
  return d;
}

TEST(LinearDecayNorm, ClosedFormOracleMatchesHighPrecisionValues) {
  // 30-digit adaptive quadrature of the same radial integral, A = sigma = 1.
  const double times[4] = {0.1, 1.0, 10.0, 100.0};
  const double ref[3][4] = {
      {0.13067926027839223673, 0.065728188176115095984, 0.0152731329043043354, 0.0028066971840693365062},
      {0.14610385461593656604, 0.046476847574436437394, 0.0040819164678978898132, 0.0002424617077485614602},
      {0.21088274948038230707, 0.042427363030413502964, 0.0014083949853043621042, 0.000027040525999372619864}};
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(gaussian_heat_norm(k, times[i], 1, 1), ref[k][i], 1e-14 * ref[k][i]);
  }
}

TEST(LinearDecayNorm, MagneticComponentMatchesHeatSemigroup) {
  PhysicalParams p;
  for (double sigma : {1.0, 0.5}) {
    const RadialDataSpec d = magnetic_only(2.0, sigma);
    for (int k = 0; k <= 2; ++k) {
      for (double t : {0.1, 1.0, 10.0, 100.0}) {
        const double exact = gaussian_heat_norm(k, t, 2.0, sigma);
        EXPECT_NEAR(linear_decay_norm(k, t, d, Component::B, p), exact, 1e-8 * exact) << "k=" << k << " t=" << t;
      }
    }
  }
}

TEST(LinearDecayNorm, InitialNormOfDensityData) {
  PhysicalParams p;
  RadialDataSpec d;
  d.rho = {1.5, 0.8};
  const double exact = gaussian_heat_norm(0, 0.0, 1.5, 0.8);
  EXPECT_NEAR(linear_decay_norm(0, 0.0, d, Component::rho, p), exact, 1e-9 * exact);
  EXPECT_EQ(linear_decay_norm(0, 0.0, d, Component::B, p), 0.0);
}

TEST(LinearDecayNorm, TransverseVelocityIsAHeatFlowWithViscosity) {
  PhysicalParams p;
  p.mu = 0.5;
  RadialDataSpec d;
  d.u_transverse = {1.0, 1.0};
  // e^{-mu r^2 t} on the transverse part is the heat kernel at time mu t.
  for (double t : {1.0, 10.0}) {
    const double exact = gaussian_heat_norm(1, p.mu * t, 1.0, 1.0);
    EXPECT_NEAR(linear_decay_norm(1, t, d, Component::u, p), exact, 1e-8 * exact);
  }
}

TEST(LinearDecayNorm, VelocitySlopeOverLongWindow) {
  PhysicalParams p;
  const RadialGaussian g{1.0, 1.0};
  const RadialDataSpec d{g, g, g, g};
  DecaySeries s;
  for (int i = 0; i <= 20; ++i) {
    const double t = std::pow(10.0, 2.0 + 2.0 * i / 20.0);
    s.times.push_back(t);
    s.values.push_back(linear_decay_norm(1, t, d, Component::u, p));
  }
  EXPECT_NEAR(fit_decay_exponent(s, 1e2, 1e4).slope, -1.25, 0.05);
}

TEST(LinearDecayNorm, RejectsBadArguments) {
  PhysicalParams p;
  const RadialDataSpec d = magnetic_only(1.0, 1.0);
  EXPECT_THROW(linear_decay_norm(4, 1.0, d, Component::B, p), InvalidArgument);
  EXPECT_THROW(linear_decay_norm(0, -1.0, d, Component::B, p), InvalidArgument);
}

TEST(LinearDecayNorm, UnreachableToleranceReportsQuadratureError) {
  PhysicalParams p;
  const RadialGaussian g{1.0, 1.0};
  const RadialDataSpec d{g, g, g, g};
  EXPECT_THROW(linear_decay_norm(0, 3.0, d, Component::rho, p, 1e-30), QuadratureError);
}

}  // namespace
}  // namespace hallmhd

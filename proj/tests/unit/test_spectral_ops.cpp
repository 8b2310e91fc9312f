#include "hallmhd/spectral_ops.hpp"

#include <cmath>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "hallmhd/errors.hpp"
#include "hallmhd/initial_data.hpp"

namespace hallmhd {
namespace {

using testing::kTwoPi;
using testing::max_abs;
using testing::random_band_vector;
using testing::sample;
using testing::sample_spectral;

TEST(Derivative, SineToCosine) {
  const GridPtr g = build_grid(16, kTwoPi);
  const ScalarField f = sample_spectral(g, [](double x, double, double) { return std::sin(x); });
  const ScalarField df = to_physical(derivative(f, 0));
  const ScalarField expect = sample(g, [](double x, double, double) { return std::cos(x); });
  EXPECT_LT(max_abs(df.values() - expect.values()), 1e-12);
}

TEST(Derivative, CurlOfAxialSine) {
  const GridPtr g = build_grid(16, kTwoPi);
  VectorField v = VectorField::zeros(g, Representation::spectral);
  v[2] = sample_spectral(g, [](double x, double, double) { return std::sin(x); });
  const VectorField c = to_physical(curl(v));
  const ScalarField minus_cos = sample(g, [](double x, double, double) { return -std::cos(x); });
  EXPECT_LT(max_abs(c[0].values()), 1e-12);
  EXPECT_LT(max_abs(c[1].values() - minus_cos.values()), 1e-12);
  EXPECT_LT(max_abs(c[2].values()), 1e-12);
}

TEST(Derivative, LaplacianOfSingleMode) {
  const GridPtr g = build_grid(16, kTwoPi);
  const ScalarField f =
      sample_spectral(g, [](double x, double y, double z) { return std::cos(2 * x - y + 3 * z); });
  const ScalarField lf = to_physical(laplacian(f));
  const ScalarField expect = sample(g, [](double x, double y, double z) { return -14.0 * std::cos(2 * x - y + 3 * z); });
  EXPECT_LT(max_abs(lf.values() - expect.values()), 1e-11);
}

TEST(Derivative, CurlGradAndDivCurlVanish) {
  const GridPtr g = build_grid(16, 4.0);
  const VectorField v = random_band_vector(g, 21, 5);
  const VectorField cg = curl(gradient(v[0]));
  const ScalarField dc = divergence(curl(v));
  const double scale = testing::max_coeff(v);
  EXPECT_LT(testing::max_coeff(cg), 1e-12 * scale * 50);
  EXPECT_LT(testing::max_coeff(dc), 1e-12 * scale * 50);
}

TEST(Derivative, PartialsCommute) {
  const GridPtr g = build_grid(16, 3.0);
  const ScalarField f = random_band_vector(g, 4, 5)[1];
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const ScalarField ab = derivative(derivative(f, a), b);
      const ScalarField ba = derivative(derivative(f, b), a);
      EXPECT_LT(testing::max_coeff(ab - ba), 1e-12 * testing::max_coeff(ab) + 1e-300);
    }
  }
}

TEST(Derivative, NablaPowerMatchesSeminorm) {
  const GridPtr g = build_grid(16, 5.0);
  const ScalarField f = random_band_vector(g, 8, 5)[0];
  for (int k = 0; k <= 4; ++k) {
    const auto parts = nabla_power(f, k);
    ASSERT_EQ(parts.size(), static_cast<std::size_t>(std::pow(3, k)));
    double sum = 0.0;
    for (const auto& p : parts) sum += inner_product(p, p);
    EXPECT_NEAR(sum, seminorm_squared(f, k), 1e-12 * seminorm_squared(f, k));
  }
  EXPECT_THROW(nabla_power(f, 5), InvalidArgument);
  EXPECT_THROW(nabla_power(f, -1), InvalidArgument);
}

TEST(Derivative, NyquistModesAreAnnihilated) {
  const GridPtr g = build_grid(8, kTwoPi);
  const ScalarField f = sample_spectral(g, [](double x, double, double) { return std::cos(4 * x); });
  EXPECT_GT(testing::max_coeff(f), 1.0);
  EXPECT_EQ(testing::max_coeff(derivative(f, 0)), 0.0);
  EXPECT_EQ(testing::max_coeff(laplacian(f)), 0.0);
}

TEST(Dealias, KeepsLowModeAndDropsHighMode) {
  const GridPtr g = build_grid(8, kTwoPi);
  const ScalarField low = sample_spectral(g, [](double x, double, double) { return std::sin(x); });
  const ScalarField high = sample_spectral(g, [](double x, double, double) { return std::sin(3 * x); });
  const double scale = testing::max_coeff(low);
  EXPECT_LE(testing::max_coeff(dealias(low) - low), 1e-14 * scale);
  EXPECT_LE(testing::max_coeff(dealias(high)), 1e-14 * scale);
}

TEST(Dealias, Idempotent) {
  const GridPtr g = build_grid(16, 2.0);
  const VectorField v = random_band_vector(g, 9, 8);
  const VectorField once = dealias(v);
  EXPECT_EQ(testing::max_coeff(dealias(once) - once), 0.0);
}

TEST(Projection, GradientIsAnnihilated) {
  const GridPtr g = build_grid(16, 3.0);
  const ScalarField phi = random_band_vector(g, 2, 5)[0];
  const VectorField w = project_divergence_free(gradient(phi));
  EXPECT_LT(testing::max_coeff(w), 1e-12 * testing::max_coeff(gradient(phi)));
}

TEST(Projection, CurlFieldUnchanged) {
  const GridPtr g = build_grid(16, 3.0);
  const VectorField c = curl(random_band_vector(g, 12, 5));
  EXPECT_LT(testing::max_coeff(project_divergence_free(c) - c), 1e-12 * testing::max_coeff(c));
}

TEST(Projection, OutputIsDivergenceFreeAndIdempotent) {
  const GridPtr g = build_grid(16, 7.0);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const VectorField v = random_band_vector(g, seed, 7);
    const VectorField w = project_divergence_free(v);
    EXPECT_LE(divergence_ratio(w), 1e-12);
    EXPECT_LT(testing::max_coeff(project_divergence_free(w) - w), 1e-12 * testing::max_coeff(w));
    EXPECT_GT(divergence_ratio(v), 1e-3);
  }
}

TEST(Projection, SelfAdjointInPlancherelProduct) {
  const GridPtr g = build_grid(16, 7.0);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const VectorField v = random_band_vector(g, seed, 7);
    const VectorField w = random_band_vector(g, seed + 100, 7);
    const double a = inner_product(project_divergence_free(v), w);
    const double b = inner_product(v, project_divergence_free(w));
    EXPECT_NEAR(a, b, 1e-10 * std::sqrt(inner_product(v, v) * inner_product(w, w)));
  }
}

TEST(Plancherel, InnerProductMatchesPhysicalSum) {
  const GridPtr g = build_grid(16, 2.0);
  const VectorField v = random_band_vector(g, 31, 5);
  const ScalarField a = to_physical(v[0]);
  const ScalarField b = to_physical(v[1]);
  const double physical = (a.values() * b.values()).sum() * g->cell_volume();
  EXPECT_NEAR(inner_product(v[0], v[1]), physical, 1e-10 * std::sqrt(inner_product(v[0], v[0]) * inner_product(v[1], v[1])));
}

TEST(Resample, RefineThenCoarsenIsIdentity) {
  const GridPtr coarse = build_grid(16, 3.0);
  const GridPtr fine = build_grid(32, 3.0);
  const VectorField v = random_band_vector(coarse, 17, 5);
  const VectorField back = resample(resample(v, fine), coarse);
  EXPECT_LT(testing::max_coeff(back - v), 1e-14 * testing::max_coeff(v));
  EXPECT_NEAR(seminorm_squared(resample(v, fine), 1), seminorm_squared(v, 1), 1e-12 * seminorm_squared(v, 1));
}

}  // namespace
}  // namespace hallmhd

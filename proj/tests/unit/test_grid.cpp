#include "hallmhd/grid.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "hallmhd/errors.hpp"

namespace hallmhd {
namespace {

constexpr double kTwoPi = 6.283185307179586;

TEST(SpectralGrid, AxisModesForEightPoints) {
  const GridPtr g = build_grid(8, kTwoPi);
  const std::vector<int> expected{0, 1, 2, 3, -4, -3, -2, -1};
  EXPECT_EQ(g->axis_modes(), expected);
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(g->wavenumber(i), expected[i], 1e-15);
}

TEST(SpectralGrid, DealiasMaskKeepsModesUpToTwoForEightPoints) {
  const GridPtr g = build_grid(8, kTwoPi);
  for (int iz = 0; iz < 8; ++iz) {
    for (int iy = 0; iy < 8; ++iy) {
      for (int ix = 0; ix < g->half_n(); ++ix) {
        const bool keep = std::abs(g->mode(ix)) <= 2 && std::abs(g->mode(iy)) <= 2 && std::abs(g->mode(iz)) <= 2;
        EXPECT_EQ(g->retained(g->spectral_index(ix, iy, iz)), keep) << ix << " " << iy << " " << iz;
      }
    }
  }
  EXPECT_TRUE(g->retained(0));
}

TEST(SpectralGrid, RejectsBadArguments) {
  EXPECT_THROW(build_grid(6, 1.0), InvalidArgument);
  EXPECT_THROW(build_grid(4, 1.0), InvalidArgument);
  EXPECT_THROW(build_grid(8, 0.0), InvalidArgument);
  EXPECT_THROW(build_grid(8, -1.0), InvalidArgument);
}

TEST(SpectralGrid, WavenumbersAntisymmetricExceptNyquist) {
  const GridPtr g = build_grid(16, 3.0);
  for (int i = 1; i < 16; ++i) {
    if (g->mode(i) == -8) continue;
    EXPECT_DOUBLE_EQ(g->wavenumber(i), -g->wavenumber(16 - i));
  }
  EXPECT_DOUBLE_EQ(g->wavenumber(8), -8.0 * kTwoPi / 3.0);
}

TEST(SpectralGrid, NyquistModesHaveZeroOperatorWavenumber) {
  const GridPtr g = build_grid(8, kTwoPi);
  const std::size_t idx = g->spectral_index(4, 1, 2);
  EXPECT_EQ(g->kx()[idx], 0.0);
  EXPECT_EQ(g->ky()[idx], 0.0);
  EXPECT_EQ(g->kz()[idx], 0.0);
  const std::size_t ordinary = g->spectral_index(3, 1, 2);
  EXPECT_DOUBLE_EQ(g->kx()[ordinary], 3.0);
  EXPECT_DOUBLE_EQ(g->k_squared()[ordinary], 14.0);
}

TEST(SpectralGrid, HermitianWeights) {
  const GridPtr g = build_grid(8, 1.0);
  EXPECT_EQ(g->hermitian_weight()[g->spectral_index(0, 3, 1)], 1.0);
  EXPECT_EQ(g->hermitian_weight()[g->spectral_index(4, 3, 1)], 1.0);
  EXPECT_EQ(g->hermitian_weight()[g->spectral_index(2, 3, 1)], 2.0);
  EXPECT_DOUBLE_EQ(g->hermitian_weight().sum(), 512.0);
}

}  // namespace
}  // namespace hallmhd

#include "hallmhd/integrator.hpp"

#include <cmath>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "hallmhd/initial_data.hpp"
#include "hallmhd/model.hpp"
#include "hallmhd/propagator.hpp"
#include "hallmhd/spectral_ops.hpp"

namespace hallmhd {
namespace {

using testing::sample_spectral;

constexpr double kBigBox = 4.0 * testing::kTwoPi;

// Trigonometric state on an 8*pi box with modes |m| <= 2.
FieldState trig_state(const GridPtr& g, double a) {
  const double q = testing::kTwoPi / g->box_length();
  FieldState s = FieldState::zeros(g);
  s.rho = sample_spectral(g, [=](double x, double y, double z) { return a * std::sin(q * x) * std::cos(q * (y + z)); });
  s.u[0] = sample_spectral(g, [=](double, double y, double z) { return a * std::sin(q * (y - 2 * z)); });
  s.u[1] = sample_spectral(g, [=](double x, double, double z) { return a * std::cos(2 * q * x) * std::sin(q * z); });
  s.u[2] = sample_spectral(g, [=](double x, double y, double) { return -a * std::cos(q * (x + y)); });
  s.B[0] = sample_spectral(g, [=](double, double y, double z) { return a * std::cos(q * (y + z)); });
  s.B[1] = sample_spectral(g, [=](double x, double, double z) { return a * std::sin(q * (2 * x - z)); });
  s.B[2] = sample_spectral(g, [=](double x, double y, double) { return a * std::sin(q * x) * std::sin(q * y); });
  return s;
}

FieldState run(FieldState s, double dt, double T, const PhysicalParams& p, const Forcing& forcing = {}) {
  const int steps = static_cast<int>(std::lround(T / dt));
  for (int i = 0; i < steps; ++i) s = etd_step(s, dt, p, Scheme::etd2, forcing);
  return s;
}

TEST(EtdStep, LinearStepEqualsPropagator) {
  const GridPtr g = build_grid(16, 6.0);
  const FieldState s = testing::random_state(g, 1, 0.2);
  PhysicalParams p;
  p.nonlinear = false;
  for (Scheme scheme : {Scheme::etd1, Scheme::etd2}) {
    const FieldState stepped = etd_step(s, 0.3, p, scheme);
    EXPECT_LE(max_abs_difference(stepped, apply_propagator(s, 0.3, p)), 1e-14);
    EXPECT_DOUBLE_EQ(stepped.time, 0.3);
  }
}

TEST(EtdStep, LinearCompositionEqualsSinglePropagator) {
  const GridPtr g = build_grid(16, 6.0);
  const FieldState s = testing::random_state(g, 2, 0.2);
  PhysicalParams p;
  p.nonlinear = false;
  FieldState stepped = s;
  for (int i = 0; i < 40; ++i) stepped = etd_step(stepped, 0.05, p, Scheme::etd2);
  EXPECT_LE(max_abs_difference(stepped, apply_propagator(s, 2.0, p)), 1e-12);
}

TEST(EtdStep, ManufacturedSolutionConvergesAtSecondOrder) {
  const GridPtr g = build_grid(16, kBigBox);
  const FieldState V = trig_state(g, 0.05);
  PhysicalParams p;
  p.nu = 0.2;
  auto exact = [&](double t) {
    FieldState s = std::cos(2.0 * t) * V;
    s.time = t;
    return s;
  };
  const Forcing forcing = [&](double t) {
    FieldState dudt = (-2.0 * std::sin(2.0 * t)) * V;
    return dudt - full_rhs(exact(t), p);
  };
  double err[3];
  int idx = 0;
  for (double dt : {0.1, 0.05, 0.025}) err[idx++] = max_abs_difference(run(exact(0), dt, 1.0, p, forcing), exact(1.0));
  EXPECT_NEAR(err[0] / err[1], 4.0, 0.4) << err[0] << " " << err[1];
  EXPECT_NEAR(err[1] / err[2], 4.0, 0.4) << err[1] << " " << err[2];
}

TEST(EtdStep, ManufacturedSolutionFirstOrderScheme) {
  const GridPtr g = build_grid(16, kBigBox);
  const FieldState V = trig_state(g, 0.05);
  PhysicalParams p;
  auto exact = [&](double t) {
    FieldState s = std::cos(2.0 * t) * V;
    s.time = t;
    return s;
  };
  const Forcing forcing = [&](double t) { return (-2.0 * std::sin(2.0 * t)) * V - full_rhs(exact(t), p); };
  double err[2];
  int idx = 0;
  for (double dt : {0.05, 0.025}) {
    FieldState s = exact(0);
    for (int i = 0; i < static_cast<int>(std::lround(1.0 / dt)); ++i) s = etd_step(s, dt, p, Scheme::etd1, forcing);
    err[idx++] = max_abs_difference(s, exact(1.0));
  }
  EXPECT_NEAR(err[0] / err[1], 2.0, 0.2);
}

TEST(EtdStep, SelfConvergenceOnRandomData) {
  const GridPtr g = build_grid(16, kBigBox);
  const FieldState s = testing::random_state(g, 4, 0.05);
  const PhysicalParams p;
  std::vector<double> diffs;
  for (double dt : {1e-2, 5e-3, 2.5e-3}) {
    const FieldState one = etd_step(s, dt, p, Scheme::etd2);
    const FieldState two = etd_step(etd_step(s, 0.5 * dt, p, Scheme::etd2), 0.5 * dt, p, Scheme::etd2);
    diffs.push_back(max_abs_difference(one, two));
  }
  // One step against two half steps differs by the local error, at least O(dt^2).
  EXPECT_GE(std::log2(diffs[0] / diffs[1]), 1.8);
  EXPECT_GE(std::log2(diffs[1] / diffs[2]), 1.8);
}

TEST(EtdStep, RejectsNonPositiveStep) {
  const GridPtr g = build_grid(8, 1.0);
  const FieldState s = FieldState::zeros(g);
  EXPECT_THROW(etd_step(s, 0.0, PhysicalParams{}, Scheme::etd2), InvalidArgument);
  EXPECT_THROW(etd_step(s, -0.1, PhysicalParams{}, Scheme::etd2), InvalidArgument);
}

TEST(EtdStep, RegimeViolationNamesFieldAndExtremum) {
  const GridPtr g = build_grid(8, 1.0);
  FieldState s = FieldState::zeros(g, Representation::physical);
  s.rho.values()[3] = -0.6;
  s = to_spectral(s);
  try {
    etd_step(s, 0.01, PhysicalParams{}, Scheme::etd2);
    FAIL() << "expected RegimeViolation";
  } catch (const RegimeViolation& e) {
    EXPECT_NEAR(e.extremum(), 0.4, 1e-12);
    EXPECT_EQ(e.field(), "rho");
  }
}

TEST(Simulate, AbortCarriesStepAndTime) {
  const GridPtr g = build_grid(8, testing::kTwoPi);
  FieldState s = FieldState::zeros(g);
  s.rho = sample_spectral(g, [](double x, double, double) { return 0.7 * std::sin(x); });
  StepConfig cfg;
  cfg.dt = 0.01;
  cfg.t_end = 0.05;
  try {
    simulate(s, cfg, PhysicalParams{});
    FAIL() << "expected SimulationAborted";
  } catch (const SimulationAborted& e) {
    EXPECT_EQ(e.step(), 0u);
    EXPECT_EQ(e.time(), 0.0);
  }
}

TEST(Simulate, ZeroDataStaysZero) {
  const GridPtr g = build_grid(8, 4.0);
  StepConfig cfg;
  cfg.dt = 0.1;
  cfg.t_end = 0.5;
  cfg.snapshot_every = 0.2;
  const RunRecord r = simulate(FieldState::zeros(g), cfg, PhysicalParams{});
  ASSERT_EQ(r.snapshots.size(), 4u);
  for (const auto& s : r.snapshots) EXPECT_EQ(max_abs(s), 0.0);
  const std::vector<double> times{0.0, 0.2, 0.4, 0.5};
  for (std::size_t i = 0; i < times.size(); ++i) EXPECT_NEAR(r.snapshot_times[i], times[i], 1e-14);
}

TEST(Simulate, LinearHeatModeSeries) {
  const GridPtr g = build_grid(16, testing::kTwoPi);
  FieldState s = FieldState::zeros(g);
  s.B[0] = sample_spectral(g, [](double, double y, double z) { return std::sin(y + z); });
  PhysicalParams p;
  p.nonlinear = false;
  StepConfig cfg;
  cfg.dt = 0.05;
  cfg.t_end = 1.0;
  const RunRecord r = simulate(s, cfg, p);
  const DecaySeries b = r.series.series("B_L2");
  for (std::size_t i = 0; i < b.times.size(); ++i) {
    EXPECT_NEAR(b.values[i], b.values[0] * std::exp(-2.0 * b.times[i]), 1e-10 * b.values[0]);
  }
  EXPECT_EQ(r.steps, 20u);
}

TEST(Simulate, WithoutHallZeroMagneticFieldStaysZero) {
  const GridPtr g = build_grid(16, kBigBox);
  FieldState s = testing::random_state(g, 8, 0.1);
  s.B = VectorField::zeros(g, Representation::spectral);
  PhysicalParams p;
  p.hall = false;
  StepConfig cfg;
  cfg.dt = 0.1;
  cfg.t_end = 1.0;
  const RunRecord r = simulate(s, cfg, p);
  EXPECT_LE(testing::max_abs(r.final_state.B), 1e-14);
}

TEST(Simulate, DivergenceFreeAndDeterministic) {
  const GridPtr g = build_grid(16, kBigBox);
  const FieldState s = testing::random_state(g, 10, 0.05);
  StepConfig cfg;
  cfg.dt = 0.2;
  cfg.t_end = 2.0;
  const RunRecord a = simulate(s, cfg, PhysicalParams{});
  const RunRecord b = simulate(s, cfg, PhysicalParams{});
  const std::size_t div = a.series.column("div_B");
  for (const auto& row : a.series.rows) EXPECT_LE(row[div], 1e-12);
  EXPECT_EQ(a.series.rows, b.series.rows);
  EXPECT_EQ(max_abs_difference(a.final_state, b.final_state), 0.0);
}

TEST(Simulate, SmallDataLosesH2Norm) {
  const GridPtr g = build_grid(16, kBigBox);
  const FieldState s = testing::random_state(g, 12, 0.05);
  StepConfig cfg;
  cfg.dt = 0.25;
  cfg.t_end = 3.0;
  const RunRecord r = simulate(s, cfg, PhysicalParams{});
  EXPECT_LT(h2_norm(r.final_state), h2_norm(s));
}

TEST(Cfl, AdvectiveLimit) {
  const GridPtr g = build_grid(8, 4.0);
  FieldState s = FieldState::zeros(g, Representation::physical);
  s.u[1].values()[5] = 3.0;
  EXPECT_NEAR(cfl_limit(to_spectral(s), 0.5), 0.5 * 0.5 / 4.0, 1e-12);
}

TEST(SchemeNames, RoundTrip) {
  EXPECT_EQ(parse_scheme("etd1"), Scheme::etd1);
  EXPECT_EQ(parse_scheme(to_string(Scheme::etd2)), Scheme::etd2);
  EXPECT_THROW(parse_scheme("rk4"), InvalidArgument);
}

}  // namespace
}  // namespace hallmhd

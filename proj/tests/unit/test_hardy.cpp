#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "holodual/error.hpp"
#include "holodual/hardy.hpp"
#include "holodual/seeded.hpp"
#include "oracles.hpp"

namespace holodual {
namespace {

using testing::C;

std::vector<Complex> random_coeffs(SeededStream& rng, int count) {
  std::vector<Complex> c(static_cast<std::size_t>(count));
  for (auto& x : c) x = rng.complex_in_square();
  return c;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected holodual::Error";
  return ErrorKind::kValidation;
}

TEST(Traces, Interior) {
  const auto t = trace_interior(InteriorFunction({1.0, 1.0}));
  EXPECT_EQ(t[0], Complex(1.0));
  EXPECT_EQ(t[1], Complex(1.0));
  EXPECT_EQ(t[-1], Complex{});
  EXPECT_TRUE(trace_interior(InteriorFunction{}).is_zero());

  const InteriorFunction u({1.0, {0.0, 2.0}, -0.5}, SobolevIndex{2});
  double direct = 0.0;
  for (int n = 0; n < 3; ++n) direct += std::pow(1.0 + n * n, 1.5) * std::norm(u.a[n]);
  EXPECT_NEAR(sobolev_norm(trace_interior(u), SobolevIndex{u.s.value - 0.5}), std::sqrt(direct),
              1e-14);
}

TEST(Traces, Exterior) {
  EXPECT_EQ(trace_exterior(ExteriorFunction({1.0})), BoundaryDistribution::mode(-1));
  EXPECT_EQ(trace_exterior(ExteriorFunction({0.0, 2.0})), BoundaryDistribution::mode(-2, 2.0));
  EXPECT_TRUE(trace_exterior(ExteriorFunction{}).is_zero());
  const auto t = trace_exterior(ExteriorFunction({3.0, 4.0}));
  EXPECT_EQ(t.n_min(), -2);
  EXPECT_EQ(t[-1], Complex(3.0));
  EXPECT_EQ(t[-2], Complex(4.0));
}

TEST(CauchyTransform, Examples) {
  const BoundaryDistribution f(0, {1.0, 1.0});
  EXPECT_EQ(cauchy_transform(f, 0.5), Complex(1.5));
  EXPECT_EQ(cauchy_transform(f, 2.0), Complex{});
  const auto g = BoundaryDistribution::mode(-1);
  EXPECT_EQ(cauchy_transform(g, 2.0), Complex(-0.5));
  EXPECT_EQ(-cauchy_transform(g, 2.0), evaluate_exterior(ExteriorFunction({1.0}), 2.0));
}

TEST(CauchyTransform, RefusesPointsNearTheCircle) {
  const BoundaryDistribution f(0, {1.0, 1.0});
  EXPECT_EQ(kind_of([&] { cauchy_transform(f, 1.0); }), ErrorKind::kBoundaryProximity);
  EXPECT_EQ(kind_of([&] { cauchy_transform(f, Complex(0.0, 1.0 + 5e-10)); }),
            ErrorKind::kBoundaryProximity);
  try {
    cauchy_transform(f, 1.0);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("1e-9"), std::string::npos);
  }
  EXPECT_NO_THROW(cauchy_transform(f, 1.0 - 1e-8));
}

TEST(CauchyTransform, MatchesCauchyIntegralOracle) {
  SeededStream rng(17);
  const BoundaryDistribution f(-8, random_coeffs(rng, 17));
  for (C z : {C{0.3, 0.0}, C{-0.2, 0.5}, C{2.5, -1.0}, C{0.0, -3.0}}) {
    const C oracle = testing::circle_integral(
        [&](C zeta) { return testing::laurent({f.coeffs().begin(), f.coeffs().end()}, -8, zeta) /
                             (zeta - z); },
        256);
    EXPECT_NEAR(std::abs(cauchy_transform(f, z) - oracle), 0.0, 1e-10) << z;
  }
}

TEST(HardyProjections, FrequencySplit) {
  const BoundaryDistribution f(-1, {1.0, 5.0, 1.0});
  const auto parts = hardy_projections(f);
  ASSERT_EQ(parts.interior.a.size(), 2u);
  EXPECT_EQ(parts.interior.a[0], Complex(5.0));
  EXPECT_EQ(parts.interior.a[1], Complex(1.0));
  ASSERT_EQ(parts.exterior.b.size(), 1u);
  EXPECT_EQ(parts.exterior.b[0], Complex(-1.0));

  const auto nonneg = hardy_projections(BoundaryDistribution(0, {1.0, 2.0, 3.0}));
  EXPECT_TRUE(trace_exterior(nonneg.exterior).is_zero());
}

TEST(HardyProjections, IndexBookkeeping) {
  // H^{1/2 - s} boundary data becomes O^{1 - s} functions.
  for (int s : {-2, 0, 3}) {
    const auto parts = hardy_projections(BoundaryDistribution::mode(0), SobolevIndex{0.5 - s});
    EXPECT_DOUBLE_EQ(parts.interior.s.value, 1.0 - s);
    EXPECT_DOUBLE_EQ(parts.exterior.s.value, 1.0 - s);
  }
}

TEST(HardyProjections, InteriorPartMatchesQuadrature) {
  SeededStream rng(23);
  const BoundaryDistribution f(-8, random_coeffs(rng, 17));
  const auto parts = hardy_projections(f);
  const C z{0.3, 0.0};
  const C oracle = testing::circle_integral(
      [&](C zeta) {
        return testing::laurent({f.coeffs().begin(), f.coeffs().end()}, -8, zeta) / (zeta - z);
      },
      128);
  EXPECT_NEAR(std::abs(evaluate_interior(parts.interior, z) - oracle), 0.0, 1e-10);
}

TEST(JumpResidual, VanishesOnSpectralData) {
  EXPECT_EQ(jump_residual(BoundaryDistribution(-1, {1.0, 5.0, 1.0})), 0.0);
  SeededStream rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const BoundaryDistribution f(rng.integer(-10, 2), random_coeffs(rng, rng.integer(1, 20)));
    EXPECT_EQ(jump_residual(f), 0.0);
  }
  std::vector<Complex> samples(64);
  for (int j = 0; j < 64; ++j) {
    const double t = 2.0 * std::numbers::pi * j / 64;
    samples[j] = std::exp(std::cos(t)) * C{std::cos(3 * t), std::sin(2 * t)} +
                 1.0 / (2.0 - testing::unit(-t));
  }
  EXPECT_LT(jump_residual(fourier_analyze(samples)), 1e-12);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate_interior(InteriorFunction({1.0, 2.0}), 0.5), Complex(2.0));
  EXPECT_EQ(evaluate_exterior(ExteriorFunction({1.0}), 2.0), Complex(0.5));
  const C value = evaluate_exterior(ExteriorFunction({3.0, 4.0}), C{0.0, 2.0});
  const C direct = 3.0 / C{0.0, 2.0} + 4.0 / (C{0.0, 2.0} * C{0.0, 2.0});
  EXPECT_NEAR(std::abs(value - direct), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(value - C{-1.0, -1.5}), 0.0, 1e-15);
}

TEST(Evaluate, DomainErrors) {
  EXPECT_EQ(kind_of([] { evaluate_interior(InteriorFunction({1.0}), 1.0); }), ErrorKind::kDomain);
  EXPECT_EQ(kind_of([] { evaluate_interior(InteriorFunction({1.0}), C{0.0, 2.0}); }),
            ErrorKind::kDomain);
  EXPECT_EQ(kind_of([] { evaluate_exterior(ExteriorFunction({1.0}), 0.5); }), ErrorKind::kDomain);
  EXPECT_EQ(kind_of([] { evaluate_exterior(ExteriorFunction({1.0}), C{0.0, -1.0}); }),
            ErrorKind::kDomain);
}

TEST(Evaluate, ExteriorVanishesAtInfinity) {
  const ExteriorFunction v({3.0, -1.0, 0.5});
  EXPECT_LT(std::abs(evaluate_exterior(v, 1e8)), 1e-7);
  EXPECT_LT(std::abs(evaluate_exterior(v, 1e12)), 1e-11);
}

TEST(HardyProperties, ReproductionInsideAndOutside) {
  SeededStream rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const InteriorFunction u(random_coeffs(rng, rng.integer(1, 33)));
    const ExteriorFunction v(random_coeffs(rng, rng.integer(1, 33)));
    const C inside = 0.95 * std::sqrt(rng.uniform()) * rng.unit_phase();
    const C outside = (1.05 + 3.0 * rng.uniform()) * rng.unit_phase();
    EXPECT_EQ(cauchy_transform(trace_interior(u), inside), evaluate_interior(u, inside));
    EXPECT_EQ(cauchy_transform(trace_interior(u), outside), Complex{});
    EXPECT_EQ(-cauchy_transform(trace_exterior(v), outside), evaluate_exterior(v, outside));
    EXPECT_EQ(cauchy_transform(trace_exterior(v), inside), Complex{});
  }
}

TEST(HardyProperties, ProjectionsAreComplementary) {
  SeededStream rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const InteriorFunction u(random_coeffs(rng, rng.integer(1, 12)));
    const ExteriorFunction v(random_coeffs(rng, rng.integer(1, 12)));

    const auto from_u = hardy_projections(trace_interior(u));
    EXPECT_EQ(trace_interior(from_u.interior), trace_interior(u));
    EXPECT_TRUE(trace_exterior(from_u.exterior).is_zero());

    // (K v|)^+ = -v outside, so the exterior projection returns -v.
    const auto from_v = hardy_projections(trace_exterior(v));
    EXPECT_TRUE(trace_interior(from_v.interior).is_zero());
    EXPECT_EQ(trace_exterior(from_v.exterior), -1.0 * trace_exterior(v));
  }
}

TEST(HardyProperties, InteriorTracesAreKoetheOrthogonal) {
  SeededStream rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const InteriorFunction u(random_coeffs(rng, rng.integer(1, 40)));
    const InteriorFunction w(random_coeffs(rng, rng.integer(1, 40)));
    EXPECT_EQ(koethe_pairing(trace_interior(u), trace_interior(w)), Complex{});
  }
}

TEST(EvaluateLaurent, MatchesTermwiseSum) {
  const BoundaryDistribution f(-3, {{1, 2}, {0, -1}, {3, 0}, {0.5, 0.5}, {-2, 1}, {0, 4}});
  for (Complex z : {Complex{0.3, 0.4}, Complex{1.5, -0.7}, Complex{-0.9, 0.05}}) {
    const Complex expected = testing::laurent(
        std::vector<Complex>(f.coeffs().begin(), f.coeffs().end()), f.n_min(), z);
    EXPECT_LT(std::abs(evaluate_laurent(f, z) - expected), 1e-13);
  }
  EXPECT_EQ(evaluate_laurent(BoundaryDistribution(0, {{2, 0}, {1, 0}}), 0.0), Complex(2, 0));
  try {
    (void)evaluate_laurent(f, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
  }
}

}  // namespace
}  // namespace holodual

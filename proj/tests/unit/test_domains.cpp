#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "holodual/domains.hpp"
#include "holodual/error.hpp"
#include "holodual/hardy.hpp"
#include "holodual/seeded.hpp"

namespace holodual {
namespace {

constexpr Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected holodual::Error";
  return ErrorKind::kValidation;
}

const Curve kEllipse{Ellipse{1.5, 0.7}};

std::vector<Curve> family() {
  return {Curve::unit_circle(), Curve(Circle{2.0}), kEllipse, Curve(PerturbedCircle{0.2, 5})};
}

TEST(ContourIntegral, ResidueOnUnitCircle) {
  const QuadratureGrid grid(16);
  const auto values = sample_on_curve(Curve::unit_circle(), grid, [](Complex z) { return 1.0 / z; });
  EXPECT_NEAR(std::abs(contour_integral(values, Curve::unit_circle(), grid) - kTwoPiI), 0.0,
              1e-12);
}

TEST(ContourIntegral, ExactDifferentialVanishes) {
  const QuadratureGrid grid(64);
  for (const auto& curve : family()) {
    const auto values = sample_on_curve(curve, grid, [](Complex z) { return z; });
    EXPECT_LT(std::abs(contour_integral(values, curve, grid)), 1e-12) << curve.describe();
  }
}

TEST(ContourIntegral, ResidueOnEllipse) {
  const QuadratureGrid grid(64);
  const auto values = sample_on_curve(kEllipse, grid, [](Complex z) { return 1.0 / z; });
  EXPECT_NEAR(std::abs(contour_integral(values, kEllipse, grid) - kTwoPiI), 0.0, 1e-10);
}

TEST(ContourIntegral, RejectsNonFiniteAndMismatchedValues) {
  const QuadratureGrid grid(16);
  std::vector<Complex> values(16, 1.0);
  values[5] = {std::nan(""), 0.0};
  EXPECT_EQ(kind_of([&] { contour_integral(values, Curve::unit_circle(), grid); }),
            ErrorKind::kInvalidData);
  EXPECT_EQ(kind_of([&] {
              contour_integral(std::vector<Complex>(8, 1.0), Curve::unit_circle(), grid);
            }),
            ErrorKind::kValidation);
}

TEST(QuadratureGrid, Validation) {
  EXPECT_EQ(kind_of([] { QuadratureGrid(8); }), ErrorKind::kInvalidGrid);
  EXPECT_EQ(kind_of([] { QuadratureGrid(17); }), ErrorKind::kInvalidGrid);
  EXPECT_NO_THROW(QuadratureGrid(16));
}

TEST(CauchyQuadrature, Examples) {
  const QuadratureGrid grid(64);
  const auto circle = Curve::unit_circle();
  const auto sq = [](Complex z) { return z * z; };
  EXPECT_NEAR(std::abs(cauchy_integral_quadrature(sample_on_curve(circle, grid, sq), circle, grid,
                                                  0.1) -
                       0.01),
              0.0, 1e-12);
  EXPECT_LT(std::abs(cauchy_integral_quadrature(sample_on_curve(kEllipse, grid, sq), kEllipse,
                                                grid, 0.0)),
            1e-10);
  const Complex ext = cauchy_integral_quadrature(
      sample_on_curve(circle, grid, [](Complex z) { return 1.0 / z; }), circle, grid, 3.0);
  EXPECT_NEAR(std::abs(ext + 1.0 / 3.0), 0.0, 1e-12);
}

TEST(CauchyQuadrature, ProximityIsRefused) {
  const QuadratureGrid grid(64);
  const auto circle = Curve::unit_circle();
  const auto values = sample_on_curve(circle, grid, [](Complex z) { return z; });
  const double bound = quadrature_proximity_bound(circle, grid);
  EXPECT_NEAR(bound, 5.0 * 2.0 * std::numbers::pi / 64, 1e-12);
  EXPECT_EQ(kind_of([&] { cauchy_integral_quadrature(values, circle, grid, 1.0 - 0.9 * bound); }),
            ErrorKind::kBoundaryProximity);
  try {
    cauchy_integral_quadrature(values, circle, grid, 1.0 + 0.5 * bound);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("5 * length / M"), std::string::npos);
  }
  EXPECT_NO_THROW(cauchy_integral_quadrature(values, circle, grid, 1.0 - 1.1 * bound));
}

TEST(PairingQuadrature, Examples) {
  const QuadratureGrid grid(64);
  const auto circle = Curve::unit_circle();
  const auto one = [](Complex) { return Complex(1.0); };
  const auto inv = [](Complex z) { return 1.0 / z; };
  EXPECT_NEAR(std::abs(pairing_quadrature(sample_on_curve(circle, grid, one),
                                          sample_on_curve(circle, grid, inv), circle, grid) -
                       1.0),
              0.0, 1e-13);
  const Complex eleven = pairing_quadrature(
      sample_on_curve(circle, grid, [](Complex z) { return 1.0 + 2.0 * z; }),
      sample_on_curve(circle, grid, [](Complex z) { return 3.0 / z + 4.0 / (z * z); }), circle,
      grid);
  EXPECT_NEAR(std::abs(eleven - 11.0), 0.0, 1e-11);
  EXPECT_EQ(koethe_pairing(BoundaryDistribution(0, {1.0, 2.0}), BoundaryDistribution(-2, {4.0, 3.0})),
            Complex(11.0));
  EXPECT_NEAR(std::abs(pairing_quadrature(sample_on_curve(kEllipse, grid, one),
                                          sample_on_curve(kEllipse, grid, inv), kEllipse, grid) -
                       1.0),
              0.0, 1e-12);
}

TEST(DomainsProperties, SpectralAgreement) {
  SeededStream rng(51);
  const QuadratureGrid grid(128);
  const auto circle = Curve::unit_circle();
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Complex> a(static_cast<std::size_t>(rng.integer(1, 32)));
    std::vector<Complex> b(static_cast<std::size_t>(rng.integer(1, 32)));
    for (auto& c : a) c = rng.complex_in_square();
    for (auto& c : b) c = rng.complex_in_square();
    const InteriorFunction u(a);
    const ExteriorFunction v(b);
    const auto u_vals = fourier_synthesize(trace_interior(u), grid.size());
    const auto v_vals = fourier_synthesize(trace_exterior(v), grid.size());
    EXPECT_NEAR(std::abs(pairing_quadrature(u_vals, v_vals, circle, grid) -
                         koethe_pairing(trace_interior(u), trace_exterior(v))),
                0.0, 1e-10);

    const auto f = trace_interior(u) + trace_exterior(v);
    const auto f_vals = fourier_synthesize(f, grid.size());
    const Complex z_in = 0.5 * rng.uniform() * rng.unit_phase();
    const Complex z_out = (1.6 + rng.uniform()) * rng.unit_phase();
    EXPECT_NEAR(std::abs(cauchy_integral_quadrature(f_vals, circle, grid, z_in) -
                         cauchy_transform(f, z_in)),
                0.0, 1e-10);
    EXPECT_NEAR(std::abs(cauchy_integral_quadrature(f_vals, circle, grid, z_out) -
                         cauchy_transform(f, z_out)),
                0.0, 1e-10);
  }
}

TEST(DomainsProperties, SpectralConvergenceRate) {
  // f(zeta) = 1 / (zeta - 1.5) is holomorphic inside; its Cauchy integral at
  // z reproduces f(z).
  const auto circle = Curve::unit_circle();
  const Complex z{0.0, 0.0};
  const Complex exact = 1.0 / (z - 1.5);
  auto error_at = [&](int M) {
    const QuadratureGrid grid(M);
    const auto values = sample_on_curve(circle, grid, [](Complex w) { return 1.0 / (w - 1.5); });
    return std::abs(cauchy_integral_quadrature(values, circle, grid, z) - exact);
  };
  const double e32 = error_at(32);
  const double e128 = std::max(error_at(128), 1e-300);
  const double slope = -std::log(e128 / e32) / std::log(128.0 / 32.0);
  EXPECT_GT(slope, 4.0);
}

TEST(DomainsProperties, ReversalNegatesIntegrals) {
  const QuadratureGrid grid(64);
  for (const auto& curve : family()) {
    const auto rev = curve.reversed();
    const auto g = [](Complex z) { return std::exp(z) / (z - Complex(0.1, 0.2)) + 1.0 / z; };
    const Complex forward = contour_integral(sample_on_curve(curve, grid, g), curve, grid);
    const Complex backward = contour_integral(sample_on_curve(rev, grid, g), rev, grid);
    EXPECT_NEAR(std::abs(forward + backward), 0.0, 1e-12 * std::abs(forward)) << curve.describe();
  }
}

TEST(Curves, ParseAndDescribe) {
  EXPECT_EQ(parse_curve("circle:1.0").describe(), "circle:1");
  EXPECT_EQ(parse_curve("ellipse:1.5,0.7").describe(), "ellipse:1.5,0.69999999999999996");
  EXPECT_EQ(parse_curve("perturbed:0.1,5").describe(), "perturbed:0.10000000000000001,5");
  EXPECT_EQ(kind_of([] { parse_curve("square:1"); }), ErrorKind::kValidation);
  EXPECT_EQ(kind_of([] { parse_curve("ellipse:1.5"); }), ErrorKind::kValidation);
  EXPECT_EQ(kind_of([] { parse_curve("ellipse:1.5,abc"); }), ErrorKind::kValidation);
  EXPECT_EQ(kind_of([] { parse_curve("circle:-1"); }), ErrorKind::kValidation);
  EXPECT_EQ(kind_of([] { parse_curve("perturbed:1.2,3"); }), ErrorKind::kValidation);
}

TEST(Curves, DerivativeMatchesFiniteDifference) {
  for (const auto& curve : family()) {
    for (double t : {0.0, 0.7, 2.9, 5.5}) {
      const double h = 1e-6;
      const Complex fd = (curve.position(t + h) - curve.position(t - h)) / (2.0 * h);
      EXPECT_NEAR(std::abs(fd - curve.derivative(t)), 0.0, 1e-8) << curve.describe();
      EXPECT_GT(std::abs(curve.derivative(t)), 0.0);
    }
  }
}

TEST(Curves, ArcLength) {
  EXPECT_NEAR(arc_length(Curve(Circle{2.0}), QuadratureGrid(32)), 4.0 * std::numbers::pi, 1e-12);
}

}  // namespace
}  // namespace holodual

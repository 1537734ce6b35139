#pragma once

// Smooth Jordan curves and trapezoid-rule contour quadrature. This is the
// independent check for the spectral identities on the unit circle and the
// only place where non-circular geometry enters.

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "holodual/spectral.hpp"

namespace holodual {

struct Circle {
  double radius = 1.0;
};

/// zeta(theta) = p cos(theta) + i q sin(theta).
struct Ellipse {
  double p = 1.0;
  double q = 1.0;
};

/// zeta(theta) = (1 + eps cos(k theta)) e^{i theta}, |eps| < 1.
struct PerturbedCircle {
  double eps = 0.0;
  int k = 1;
};

using CurveShape = std::variant<Circle, Ellipse, PerturbedCircle>;

/// Parametrized closed curve over theta in [0, 2 pi). Constructed curves
/// are positively oriented; reversed() yields the same trace traversed
/// clockwise.
class Curve {
 public:
  explicit Curve(CurveShape shape, bool reversed = false);

  static Curve unit_circle() { return Curve(Circle{1.0}); }

  Complex position(double theta) const;
  Complex derivative(double theta) const;

  Curve reversed() const { return Curve(shape_, !reversed_); }
  bool is_reversed() const noexcept { return reversed_; }
  const CurveShape& shape() const noexcept { return shape_; }

  /// Human readable form, e.g. "ellipse:1.5,0.7".
  std::string describe() const;

 private:
  CurveShape shape_;
  bool reversed_;
};

/// Parses "circle:R", "ellipse:p,q" or "perturbed:eps,k".
Curve parse_curve(const std::string& text);

/// M equispaced nodes theta_j = 2 pi j / M with weights 2 pi / M.
class QuadratureGrid {
 public:
  /// Throws kInvalidGrid unless M is even and M >= 16.
  explicit QuadratureGrid(int M);

  int size() const noexcept { return M_; }
  double node(int j) const noexcept;
  double weight() const noexcept;

 private:
  int M_;
};

/// zeta(theta_j) for every node.
std::vector<Complex> curve_nodes(const Curve& curve, const QuadratureGrid& grid);

/// Values g(zeta(theta_j)) for a callable g.
std::vector<Complex> sample_on_curve(const Curve& curve, const QuadratureGrid& grid,
                                     const std::function<Complex(Complex)>& g);

/// Trapezoid approximation of the arc length.
double arc_length(const Curve& curve, const QuadratureGrid& grid);

/// Distance from z to the curve, resolved on a grid four times finer.
double distance_to_curve(const Curve& curve, const QuadratureGrid& grid, Complex z);

/// (2 pi / M) sum_j g_j zeta'(theta_j), approximating \oint g dzeta.
Complex contour_integral(std::span<const Complex> values, const Curve& curve,
                         const QuadratureGrid& grid);

/// Smallest admissible distance 5 * length / M for Cauchy quadrature
/// (2 pi * 5 / M on the unit circle).
double quadrature_proximity_bound(const Curve& curve, const QuadratureGrid& grid);

/// (1 / 2 pi i) \oint f(zeta) / (zeta - z) dzeta by the trapezoid rule.
/// Throws kBoundaryProximity when dist(z, curve) <= 5 * length / M.
Complex cauchy_integral_quadrature(std::span<const Complex> values,
                                   const Curve& curve, const QuadratureGrid& grid,
                                   Complex z);

/// (1 / 2 pi i) \oint u v dzeta by the trapezoid rule.
Complex pairing_quadrature(std::span<const Complex> u_values,
                           std::span<const Complex> v_values, const Curve& curve,
                           const QuadratureGrid& grid);

}  // namespace holodual

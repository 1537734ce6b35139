#pragma once

// Cauchy transform on the unit circle, Hardy decomposition into interior and
// exterior parts, boundary traces and series evaluation.

#include <vector>

#include "holodual/spectral.hpp"

namespace holodual {

/// u(z) = sum_{n >= 0} a_n z^n, holomorphic in the unit disk, tagged with
/// the index s of the space O^s it is considered in.
struct InteriorFunction {
  std::vector<Complex> a;
  SobolevIndex s{};

  InteriorFunction() = default;
  explicit InteriorFunction(std::vector<Complex> coeffs, SobolevIndex index = {});

  std::size_t degree_bound() const noexcept { return a.size(); }
};

/// v(z) = sum_{m >= 1} b_m z^{-m}; b[0] holds b_1. There is no constant
/// term, so v vanishes at infinity.
struct ExteriorFunction {
  std::vector<Complex> b;
  SobolevIndex s{};

  ExteriorFunction() = default;
  explicit ExteriorFunction(std::vector<Complex> coeffs, SobolevIndex index = {});

  /// b_m with b_m = 0 outside 1..size.
  Complex coeff(int m) const noexcept;
};

/// Minimum distance | |z| - 1 | for spectral Cauchy evaluation.
inline constexpr double kBoundaryProximity = 1e-9;

BoundaryDistribution trace_interior(const InteriorFunction& u);
BoundaryDistribution trace_exterior(const ExteriorFunction& v);

/// Interior part as an InteriorFunction (frequencies n >= 0 of f).
InteriorFunction interior_part(const BoundaryDistribution& f, SobolevIndex s = {});

/// (1/2 pi i) \oint f(zeta) (zeta - z)^{-1} dzeta on the unit circle, in
/// spectral form: sum_{n>=0} c_n z^n inside, -sum_{n<=-1} c_n z^n outside.
/// Throws kBoundaryProximity when | |z| - 1 | <= kBoundaryProximity.
Complex cauchy_transform(const BoundaryDistribution& f, Complex z);

struct HardyPair {
  InteriorFunction interior;  // (Kf)^-, restriction of Kf to the disk
  ExteriorFunction exterior;  // (Kf)^+, restriction of Kf outside
};

/// Splits f into the two restrictions of its Cauchy transform. Boundary data
/// of index s' yields functions of index s' + 1/2 (trace of O^s lies in
/// H^{s-1/2}).
HardyPair hardy_projections(const BoundaryDistribution& f,
                            SobolevIndex boundary_index = SobolevIndex{-0.5});

/// L2 norm of trace(interior) - trace(exterior) - f. Zero up to rounding.
double jump_residual(const BoundaryDistribution& f);

/// Horner evaluation of the partial sum. Throws kDomain unless |z| < 1.
Complex evaluate_interior(const InteriorFunction& u, Complex z);

/// Horner evaluation in 1/z. Throws kDomain unless |z| > 1.
Complex evaluate_exterior(const ExteriorFunction& v, Complex z);

/// sum_n c_n z^n at any z, zero excluded when negative frequencies are
/// present (kDomain). Used to sample boundary data on curves off the circle.
Complex evaluate_laurent(const BoundaryDistribution& f, Complex z);

}  // namespace holodual

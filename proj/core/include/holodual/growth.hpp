#pragma once

// Holomorphic functions of finite order of growth near the circle: model
// families, placement on the Sobolev scale from coefficient tails, and
// pointwise growth fits.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holodual/hardy.hpp"

namespace holodual {

/// u(z) = (1 - conj(z0) z)^{-gamma}, singular at the boundary point z0,
/// truncated to degree N.
struct GrowthFamilySpec {
  Complex z0{1.0, 0.0};
  double gamma = 1.0;
  int N = 64;

  /// Throws kValidation unless | |z0| - 1 | < 1e-12, gamma > 0, N >= 8.
  void validate() const;
};

/// Taylor coefficients a_0 .. a_N by a_{n+1} = a_n (n + gamma)/(n + 1) conj(z0).
InteriorFunction growth_family_coeffs(const GrowthFamilySpec& spec);

enum class ScaleVerdict { kConverges, kBorderline, kDiverges };

std::string_view to_string(ScaleVerdict verdict) noexcept;

struct ScaleSample {
  int s = 0;
  double norm = 0.0;         // truncated trace norm in H^{s - 1/2}
  double block_ratio = 0.0;  // last dyadic block over the one before it
  ScaleVerdict verdict = ScaleVerdict::kConverges;
};

enum class EstimateStatus { kResolved, kSaturated, kInconclusive };

std::string_view to_string(EstimateStatus status) noexcept;

struct SobolevEstimate {
  EstimateStatus status = EstimateStatus::kInconclusive;
  /// Largest grid index s whose trace norm passes the convergence test.
  std::optional<int> s_min;
  std::vector<ScaleSample> norm_curve;  // ascending in s
  double tail_exponent = 0.0;           // beta in |a_n| ~ n^beta, top half
  double fit_residual = 0.0;            // RMS of the tail regression
  std::string note;
};

/// Convergence threshold on dyadic block ratios: converges below 1 - delta.
inline constexpr double kBlockRatioDelta = 0.05;
/// Largest admissible RMS residual of the log-log tail regression.
inline constexpr double kTailFitResidualLimit = 0.25;
/// Coefficient count below which an object is taken as an exact polynomial.
inline constexpr std::size_t kMinTailSupport = 64;

/// Places u on the integer Sobolev scale from the tail of its coefficients.
/// Throws kDegenerateInput for the zero function.
SobolevEstimate estimate_min_sobolev(const InteriorFunction& u,
                                     std::span<const int> s_grid);

struct PointwiseFit {
  double gamma = 0.0;  // fitted exponent in |u| <= C |z - z0|^{-gamma}
  double C = 0.0;
  double R_used = 0.0;  // neighbourhood radius covered by the samples
  bool truncation_warning = false;
};

/// Least-squares fit of log|u(r z0)| = log C + gamma * (-log(1 - r)).
/// Radii must increase strictly inside (0, 1 - 1e-6).
PointwiseFit pointwise_growth_exponent(const InteriorFunction& u, Complex z0,
                                       std::span<const double> radii);

enum class DecayClass { kSmooth, kFiniteOrder, kNeither };

std::string_view to_string(DecayClass cls) noexcept;

/// Classifies a one-sided coefficient sequence by the acceleration of its
/// log-log slope across the last dyadic blocks. Needs at least 16 entries.
DecayClass classify_decay(std::span<const Complex> coeffs);

/// Report combining scale placement and the pointwise fit for one family.
struct GrowthReport {
  GrowthFamilySpec spec;
  PointwiseFit fit;
  SobolevEstimate estimate;
  /// s_min == ceil(1 - gamma') - 1 for some gamma' within the fit tolerance.
  bool consistent = false;
};

inline constexpr double kGammaFitTolerance = 0.05;

GrowthReport growth_report(const GrowthFamilySpec& spec, std::span<const int> s_grid,
                           std::span<const double> radii);

/// Consistency of an estimated index with a fitted growth exponent.
bool scale_consistent(int s_min, double gamma_fitted,
                      double tolerance = kGammaFitTolerance);

}  // namespace holodual

#include "holodual/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "holodual/error.hpp"

namespace holodual {

std::string_view to_string(ScaleVerdict verdict) noexcept {
  switch (verdict) {
    case ScaleVerdict::kConverges: return "converges";
    case ScaleVerdict::kBorderline: return "borderline";
    case ScaleVerdict::kDiverges: return "diverges";
  }
  return "unknown";
}

std::string_view to_string(EstimateStatus status) noexcept {
  switch (status) {
    case EstimateStatus::kResolved: return "resolved";
    case EstimateStatus::kSaturated: return "entire-side saturation";
    case EstimateStatus::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string_view to_string(DecayClass cls) noexcept {
  switch (cls) {
    case DecayClass::kSmooth: return "smooth";
    case DecayClass::kFiniteOrder: return "finite-order";
    case DecayClass::kNeither: return "neither";
  }
  return "unknown";
}

void GrowthFamilySpec::validate() const {
  if (!(std::abs(std::abs(z0) - 1.0) < 1e-12)) {
    throw Error(ErrorKind::kValidation, "growth family: z0 must lie on the unit circle");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorKind::kValidation, "growth family: gamma must be positive");
  }
  if (N < 8) {
    throw Error(ErrorKind::kValidation, "growth family: truncation degree N must be >= 8");
  }
}

InteriorFunction growth_family_coeffs(const GrowthFamilySpec& spec) {
  spec.validate();
  const Complex w = std::conj(spec.z0);
  std::vector<Complex> a(static_cast<std::size_t>(spec.N) + 1);
  a[0] = 1.0;
  for (int n = 0; n < spec.N; ++n) {
    a[static_cast<std::size_t>(n) + 1] =
        a[static_cast<std::size_t>(n)] * ((n + spec.gamma) / (n + 1.0)) * w;
  }
  return InteriorFunction(std::move(a));
}

namespace {

struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double rms = 0.0;
};

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

double weighted_block(std::span<const Complex> a, std::size_t lo, std::size_t hi,
                      double exponent) {
  double acc = 0.0;
  for (std::size_t n = lo; n < hi; ++n) {
    const double nn = static_cast<double>(n);
    acc += std::pow(1.0 + nn * nn, exponent) * std::norm(a[n]);
  }
  return acc;
}

}  // namespace

SobolevEstimate estimate_min_sobolev(const InteriorFunction& u,
                                     std::span<const int> s_grid) {
  if (s_grid.empty()) {
    throw Error(ErrorKind::kValidation, "estimate_min_sobolev: empty s grid");
  }
  const auto& a = u.a;
  const auto last_nonzero = std::find_if(a.rbegin(), a.rend(),
                                         [](Complex c) { return c != Complex{}; });
  if (last_nonzero == a.rend()) {
    throw Error(ErrorKind::kDegenerateInput, "estimate_min_sobolev: zero function");
  }
  const std::size_t support = static_cast<std::size_t>(a.rend() - last_nonzero);

  std::vector<int> grid(s_grid.begin(), s_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  SobolevEstimate out;
  const auto trace = trace_interior(u);
  const std::size_t L = a.size();
  const bool polynomial = L < kMinTailSupport || support <= L / 2;

  // Last two full dyadic blocks [2^j, 2^{j+1}) inside [0, L).
  std::size_t top = 1;
  while (2 * top * 2 <= L) top *= 2;  // top block is [top, 2 top)

  for (const int s : grid) {
    ScaleSample sample;
    sample.s = s;
    sample.norm = sobolev_norm(trace, SobolevIndex{s - 0.5});
    if (polynomial) {
      sample.block_ratio = 0.0;
      sample.verdict = ScaleVerdict::kConverges;
    } else {
      const double upper = weighted_block(a, top, 2 * top, s - 0.5);
      const double lower = weighted_block(a, top / 2, top, s - 0.5);
      sample.block_ratio = lower > 0.0 ? upper / lower
                           : upper > 0.0 ? std::numeric_limits<double>::infinity()
                                         : 0.0;
      if (sample.block_ratio < 1.0 - kBlockRatioDelta) {
        sample.verdict = ScaleVerdict::kConverges;
      } else if (sample.block_ratio > 1.0 + kBlockRatioDelta) {
        sample.verdict = ScaleVerdict::kDiverges;
      } else {
        sample.verdict = ScaleVerdict::kBorderline;
      }
    }
    out.norm_curve.push_back(sample);
  }

  if (polynomial) {
    out.status = EstimateStatus::kSaturated;
    out.s_min = grid.back();
    out.note = "finitely supported: lies in every space of the grid";
    return out;
  }

  // Tail regression log|a_n| = alpha + beta log n over the top half.
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t n = L / 2; n < L; ++n) {
    if (a[n] == Complex{}) continue;
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(std::abs(a[n])));
  }
  if (xs.size() < 8) {
    out.status = EstimateStatus::kInconclusive;
    out.note = "too few nonzero coefficients in the upper half for a tail fit";
    return out;
  }
  const auto fit = least_squares(xs, ys);
  out.tail_exponent = fit.slope;
  out.fit_residual = fit.rms;
  if (fit.rms > kTailFitResidualLimit) {
    out.status = EstimateStatus::kInconclusive;
    out.note = "tail regression residual exceeds threshold";
    return out;
  }

  // Membership must be downward closed on the grid.
  std::optional<int> best;
  bool closed = true;
  bool seen_failure = false;
  for (const auto& sample : out.norm_curve) {
    if (sample.verdict != ScaleVerdict::kConverges) {
      seen_failure = true;
    } else {
      if (seen_failure) closed = false;
      best = sample.s;
    }
  }
  if (!closed) {
    out.status = EstimateStatus::kInconclusive;
    out.note = "convergence pattern is not monotone in s";
    return out;
  }
  if (!best.has_value()) {
    out.status = EstimateStatus::kInconclusive;
    out.note = "no grid index passes the convergence test; extend the grid downward";
    return out;
  }
  out.s_min = best;
  if (*best == grid.back()) {
    out.status = EstimateStatus::kSaturated;
    out.note = "largest grid index converges; extend the grid upward";
  } else {
    out.status = EstimateStatus::kResolved;
  }
  return out;
}

PointwiseFit pointwise_growth_exponent(const InteriorFunction& u, Complex z0,
                                       std::span<const double> radii) {
  if (radii.size() < 2) {
    throw Error(ErrorKind::kValidation, "pointwise_growth_exponent: need >= 2 radii");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0 - 1e-6)) {
      throw Error(ErrorKind::kValidation,
                  "pointwise_growth_exponent: radii must lie in (0, 1 - 1e-6)");
    }
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw Error(ErrorKind::kValidation,
                  "pointwise_growth_exponent: radii must increase strictly");
    }
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (const double r : radii) {
    const double magnitude = std::abs(evaluate_interior(u, r * z0));
    if (!(magnitude > 0.0)) {
      throw Error(ErrorKind::kDegenerateInput,
                  "pointwise_growth_exponent: u vanishes on the sampled radius");
    }
    xs.push_back(-std::log1p(-r));
    ys.push_back(std::log(magnitude));
  }
  const auto fit = least_squares(xs, ys);
  PointwiseFit out;
  out.gamma = fit.slope;
  out.C = std::exp(fit.intercept);
  out.R_used = 1.0 - radii.front();
  const double degree = u.a.empty() ? 0.0 : static_cast<double>(u.a.size() - 1);
  out.truncation_warning = degree < 10.0 / (1.0 - radii.back());
  return out;
}

DecayClass classify_decay(std::span<const Complex> coeffs) {
  if (coeffs.size() < 16) {
    throw Error(ErrorKind::kValidation, "classify_decay: needs at least 16 coefficients");
  }
  // Maxima over the last four full dyadic blocks [2^j, 2^{j+1}), j >= 0.
  std::size_t top = 1;
  while (2 * top * 2 <= coeffs.size()) top *= 2;
  double block_max[4] = {};
  std::size_t lo = top / 8;
  for (double& m : block_max) {
    for (std::size_t n = lo; n < 2 * lo; ++n) m = std::max(m, std::abs(coeffs[n]));
    lo *= 2;
  }
  if (block_max[3] == 0.0) return DecayClass::kSmooth;
  if (std::any_of(std::begin(block_max), std::end(block_max),
                  [](double m) { return m == 0.0; })) {
    return DecayClass::kNeither;
  }
  double slope[3];
  for (int i = 0; i < 3; ++i) slope[i] = std::log2(block_max[i + 1] / block_max[i]);
  const double accel_early = slope[1] - slope[0];
  const double accel_late = slope[2] - slope[1];
  constexpr double kAccelThreshold = 0.25;
  if (slope[2] < 0.0 && accel_late < -kAccelThreshold) return DecayClass::kSmooth;
  if (accel_late > kAccelThreshold && accel_late >= accel_early) {
    return DecayClass::kNeither;
  }
  return DecayClass::kFiniteOrder;
}

bool scale_consistent(int s_min, double gamma_fitted, double tolerance) {
  // ceil(1 - g) - 1 is the largest integer below 1 - g; monotone in g.
  const int lo = static_cast<int>(std::ceil(1.0 - (gamma_fitted + tolerance))) - 1;
  const int hi = static_cast<int>(std::ceil(1.0 - (gamma_fitted - tolerance))) - 1;
  return s_min >= lo && s_min <= hi;
}

GrowthReport growth_report(const GrowthFamilySpec& spec, std::span<const int> s_grid,
                           std::span<const double> radii) {
  GrowthReport report;
  report.spec = spec;
  const auto u = growth_family_coeffs(spec);
  report.fit = pointwise_growth_exponent(u, spec.z0, radii);
  report.estimate = estimate_min_sobolev(u, s_grid);
  report.consistent = report.estimate.status == EstimateStatus::kResolved &&
                      report.estimate.s_min.has_value() &&
                      scale_consistent(*report.estimate.s_min, report.fit.gamma);
  return report;
}

}  // namespace holodual

#include "holodual/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "holodual/error.hpp"
#include "holodual/seeded.hpp"

namespace holodual {

DualFunctional functional_from_exterior(ExteriorFunction v, int s) {
  v.s = SobolevIndex{1.0 - s};
  return DualFunctional{std::move(v), s};
}

Complex apply_functional(const DualFunctional& F, const InteriorFunction& u) {
  return koethe_pairing(trace_interior(u), trace_exterior(F.v));
}

double interior_trace_norm(const InteriorFunction& u, int s) {
  return sobolev_norm(trace_interior(u), SobolevIndex{s - 0.5});
}

ExteriorFunction represent_functional(const BoundaryDistribution& w, int s) {
  // w plays the role of boundary data of index 1/2 - s.
  auto parts = hardy_projections(w, SobolevIndex{0.5 - s});
  for (auto& b : parts.exterior.b) b = -b;
  return std::move(parts.exterior);
}

double functional_norm_closed_form(const DualFunctional& F) {
  double acc = 0.0;
  for (std::size_t i = 0; i < F.v.b.size(); ++i) {
    const double shift = static_cast<double>(i);  // m - 1
    acc += std::pow(1.0 + shift * shift, 0.5 - F.s) * std::norm(F.v.b[i]);
  }
  return std::sqrt(acc);
}

double functional_norm_bruteforce(const DualFunctional& F, int N, int iterations,
                                  std::uint64_t seed) {
  const auto& b = F.v.b;
  const auto last = std::find_if(b.rbegin(), b.rend(),
                                 [](Complex c) { return c != Complex{}; });
  const int support = static_cast<int>(b.rend() - last);
  if (N < support) {
    throw Error(ErrorKind::kTruncation,
                "functional_norm_bruteforce: N = " + std::to_string(N) +
                    " is below the support " + std::to_string(support) + " of v");
  }
  if (iterations < 1) {
    throw Error(ErrorKind::kValidation, "functional_norm_bruteforce: iterations must be >= 1");
  }
  if (support == 0) return 0.0;

  double best = 0.0;
  auto probe = [&](const InteriorFunction& u) {
    const double norm = interior_trace_norm(u, F.s);
    if (norm > 0.0) best = std::max(best, std::abs(apply_functional(F, u)) / norm);
  };

  // Weighted-conjugate maximizer a_n = conj(b_{n+1}) (1 + n^2)^{1/2 - s}.
  std::vector<Complex> a(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) {
    const double nn = static_cast<double>(n);
    a[static_cast<std::size_t>(n)] =
        std::conj(F.v.coeff(n + 1)) * std::pow(1.0 + nn * nn, 0.5 - F.s);
  }
  probe(InteriorFunction(a));

  SeededStream rng(seed);
  for (int it = 0; it < iterations; ++it) {
    for (auto& c : a) c = rng.complex_in_square();
    probe(InteriorFunction(a));
  }
  return best;
}

ExteriorFunction reconstruct_exterior_from_blackbox(const FunctionalOracle& oracle,
                                                    int N, SobolevIndex index) {
  if (N < 0) throw Error(ErrorKind::kValidation, "reconstruct: N must be >= 0");
  std::vector<Complex> b(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) {
    std::vector<Complex> monomial(static_cast<std::size_t>(n) + 1);
    monomial.back() = 1.0;
    b[static_cast<std::size_t>(n)] = oracle(InteriorFunction(std::move(monomial)));
  }
  return ExteriorFunction(std::move(b), index);
}

bool TheoremReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

// Worst-case aggregate over trials for one named quantity.
class Aggregate {
 public:
  Aggregate(std::string name, double bound, Relation relation, double slack = 0.0)
      : name_(std::move(name)), bound_(bound), relation_(relation), slack_(slack) {}

  void add(double value) {
    if (!seen_) {
      worst_ = value;
      seen_ = true;
    } else if (relation_ == Relation::kAtMost) {
      worst_ = std::max(worst_, value);
    } else {
      worst_ = std::min(worst_, value);
    }
  }

  bool seen() const { return seen_; }

  Check finish() const {
    Check c{name_, worst_, bound_, relation_, false};
    c.passed = relation_ == Relation::kAtMost ? worst_ <= bound_ + slack_
                                              : worst_ >= bound_ - slack_;
    return c;
  }

 private:
  std::string name_;
  double bound_;
  Relation relation_;
  double slack_;
  double worst_ = 0.0;
  bool seen_ = false;
};

double max_coeff_gap(const ExteriorFunction& x, const ExteriorFunction& y) {
  const int top = static_cast<int>(std::max(x.b.size(), y.b.size()));
  double gap = 0.0;
  for (int m = 1; m <= top; ++m) gap = std::max(gap, std::abs(x.coeff(m) - y.coeff(m)));
  return gap;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial) {
  return SeededStream(seed, 0x8000000000000000ULL | trial).next();
}

}  // namespace

Theorem1Trial make_theorem1_trial(int N, std::uint64_t seed, std::uint64_t trial) {
  SeededStream rng(seed, trial);
  std::vector<Complex> b(static_cast<std::size_t>(N));
  for (auto& c : b) c = rng.complex_in_square();
  std::vector<Complex> w(static_cast<std::size_t>(2 * N + 1));
  for (auto& c : w) c = rng.complex_in_square();
  std::vector<Complex> a(static_cast<std::size_t>(N));
  for (auto& c : a) c = rng.complex_in_square();
  return Theorem1Trial{ExteriorFunction(std::move(b)), BoundaryDistribution(-N, std::move(w)),
                       InteriorFunction(std::move(a))};
}

TheoremReport verify_theorem1(int s, int trials, int N, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::kValidation, "verify_theorem1: trials must be >= 1");
  if (N < 1) throw Error(ErrorKind::kValidation, "verify_theorem1: N must be >= 1");
  std::vector<Theorem1Trial> batch;
  batch.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    batch.push_back(make_theorem1_trial(N, seed, static_cast<std::uint64_t>(t)));
  }
  return verify_theorem1_on(s, batch, N, seed);
}

TheoremReport verify_theorem1_on(int s, std::span<const Theorem1Trial> trials, int N,
                                 std::uint64_t seed) {
  const double spread = std::pow(kShiftConstant, std::abs(s - 0.5) / 2.0);
  constexpr double kRatioSlack = 1e-12;

  Aggregate injectivity("injectivity_roundtrip_max_abs", kInjectivityTolerance,
                        Relation::kAtMost);
  Aggregate surjectivity("surjectivity_identity_max_abs", kSurjectivityTolerance,
                         Relation::kAtMost);
  Aggregate annihilation("annihilation_max_abs", 0.0, Relation::kAtMost);
  Aggregate ratio_min("norm_ratio_min", 1.0 / spread, Relation::kAtLeast,
                      kRatioSlack / spread);
  Aggregate ratio_max("norm_ratio_max", spread, Relation::kAtMost, kRatioSlack * spread);
  Aggregate continuity("continuity_ratio_max", 1.0, Relation::kAtMost, kContinuitySlack);
  Aggregate brute_gap("dual_norm_bruteforce_gap", kBruteforceGapTolerance,
                      Relation::kAtMost);
  Aggregate brute_excess("dual_norm_bruteforce_excess", kBruteforceExcessTolerance,
                         Relation::kAtMost);

  TheoremReport report;
  report.theorem = "1";
  report.s = s;
  report.seed = seed;

  for (std::size_t t = 0; t < trials.size(); ++t) {
    const auto& trial = trials[t];
    const auto F = functional_from_exterior(trial.v, s);

    const auto recovered = reconstruct_exterior_from_blackbox(
        [&F](const InteriorFunction& probe) { return apply_functional(F, probe); },
        std::max(N, static_cast<int>(trial.v.b.size())));
    injectivity.add(max_coeff_gap(recovered, F.v));

    const auto represented = functional_from_exterior(represent_functional(trial.w, s), s);
    surjectivity.add(std::abs(apply_functional(represented, trial.u) -
                              koethe_pairing(trace_interior(trial.u), trial.w)));

    const auto killed = represent_functional(trace_interior(trial.u), s);
    annihilation.add(max_coeff_gap(killed, ExteriorFunction{}));

    const bool degenerate = std::all_of(trial.v.b.begin(), trial.v.b.end(),
                                        [](Complex c) { return c == Complex{}; });
    if (degenerate) {
      report.notes.push_back("degenerate input: v = 0 in trial " + std::to_string(t) +
                             "; norm ratios skipped");
      continue;
    }
    const double closed = functional_norm_closed_form(F);
    const double trace_norm =
        sobolev_norm(trace_exterior(trial.v), SobolevIndex{0.5 - s});
    ratio_min.add(closed / trace_norm);
    ratio_max.add(closed / trace_norm);

    const double u_norm = interior_trace_norm(trial.u, s);
    if (u_norm > 0.0) {
      continuity.add(std::abs(apply_functional(F, trial.u)) / (closed * u_norm));
    }

    const double brute = functional_norm_bruteforce(
        F, std::max(N, static_cast<int>(trial.v.b.size())), kBruteforceProbes,
        substream_seed(seed, t));
    brute_gap.add(std::abs(brute - closed));
    brute_excess.add(brute - closed);
  }

  for (const Aggregate* agg : {&injectivity, &surjectivity, &annihilation, &ratio_min,
                               &ratio_max, &continuity, &brute_gap, &brute_excess}) {
    if (agg->seen()) report.checks.push_back(agg->finish());
  }
  return report;
}

namespace {

std::vector<Complex> padded(const std::vector<Complex>& c, int N) {
  std::vector<Complex> out(static_cast<std::size_t>(N));
  std::copy_n(c.begin(), std::min(c.size(), out.size()), out.begin());
  return out;
}

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

TheoremReport verify_scale_pairing_on(ScaleDirection direction,
                                      const InteriorFunction& u,
                                      const ExteriorFunction& v, int N) {
  if (N < 16 || N % 2 != 0) {
    throw Error(ErrorKind::kValidation, "verify_scale_pairing: N must be even and >= 16");
  }
  const auto a = padded(u.a, N);
  const auto b = padded(v.b, N);  // b[n] = b_{n+1}

  const bool interior_finite = direction == ScaleDirection::kInteriorFiniteOrder;
  const auto& smooth_side = interior_finite ? b : a;
  const auto& finite_side = interior_finite ? a : b;
  const auto smooth_class = classify_decay(smooth_side);
  const auto finite_class = classify_decay(finite_side);
  if (smooth_class != DecayClass::kSmooth) {
    throw Error(ErrorKind::kInvalidFamily,
                std::string("verify_scale_pairing: smooth side classified as ") +
                    std::string(to_string(smooth_class)));
  }
  if (finite_class == DecayClass::kNeither) {
    throw Error(ErrorKind::kInvalidFamily,
                "verify_scale_pairing: finite-order side grows faster than any polynomial");
  }

  Complex kappa{};
  double total = 0.0;
  double upper_half = 0.0;
  std::vector<double> terms(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    kappa += a[i] * b[i];
    terms[i] = std::abs(a[i]) * std::abs(b[i]);
    total += terms[i];
    if (n >= N / 2) upper_half += terms[i];
  }
  if (!(total > 0.0)) {
    throw Error(ErrorKind::kDegenerateInput, "verify_scale_pairing: pairing terms all vanish");
  }

  // Geometric envelope of |a_n b_{n+1}| over the upper half, extrapolated
  // past the truncation.
  std::vector<double> xs;
  std::vector<double> ys;
  for (int n = N / 2; n < N; ++n) {
    const double t = terms[static_cast<std::size_t>(n)];
    if (t > 0.0) {
      xs.push_back(n);
      ys.push_back(std::log(t));
    }
  }
  double q = 0.0;
  double tail = 0.0;
  if (xs.size() == 1) {
    q = 1.0;
    tail = std::numeric_limits<double>::infinity();
  } else if (xs.size() > 1) {
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxx += (xs[i] - mx) * (xs[i] - mx);
      sxy += (xs[i] - mx) * (ys[i] - my);
    }
    q = std::exp(sxy / sxx);
    if (q < 1.0) {
      double envelope = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        envelope = std::max(envelope, std::exp(ys[i]) * std::pow(q, N - xs[i]));
      }
      tail = envelope / (1.0 - q);
    } else {
      tail = std::numeric_limits<double>::infinity();
    }
  }

  TheoremReport report;
  report.theorem = interior_finite ? "2" : "3";
  report.checks.push_back(Check{"tail_fraction_beyond_N", tail / total,
                                kTailFractionTolerance, Relation::kAtMost,
                                tail / total < kTailFractionTolerance});
  report.checks.push_back(Check{"upper_half_decay_ratio", q, 1.0 - kBlockRatioDelta,
                                Relation::kAtMost, q <= 1.0 - kBlockRatioDelta});
  report.notes.push_back("kappa_N = " + format_number(kappa.real()) + " + " +
                         format_number(kappa.imag()) + "i");
  report.notes.push_back("upper-half share of the truncated absolute sum = " +
                         format_number(upper_half / total));
  report.notes.push_back(std::string("smooth side: ") + std::string(to_string(smooth_class)) +
                         ", finite side: " + std::string(to_string(finite_class)));
  return report;
}

TheoremReport verify_scale_pairing(ScaleDirection direction, int N, std::uint64_t seed) {
  SeededStream rng(seed);
  const int k = rng.integer(0, 3);
  const double rho = rng.uniform(0.2, 0.5);
  std::vector<Complex> finite(static_cast<std::size_t>(N));
  std::vector<Complex> smooth(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) {
    finite[static_cast<std::size_t>(n)] = std::pow(n + 1.0, k) * rng.unit_phase();
    smooth[static_cast<std::size_t>(n)] = std::pow(rho, n + 1.0) * rng.unit_phase();
  }
  const bool interior_finite = direction == ScaleDirection::kInteriorFiniteOrder;
  auto report = interior_finite
                    ? verify_scale_pairing_on(direction, InteriorFunction(finite),
                                              ExteriorFunction(smooth), N)
                    : verify_scale_pairing_on(direction, InteriorFunction(smooth),
                                              ExteriorFunction(finite), N);
  report.seed = seed;
  report.notes.push_back("finite-order exponent k = " + std::to_string(k) +
                         ", smooth ratio rho = " + format_number(rho));
  return report;
}

}  // namespace holodual

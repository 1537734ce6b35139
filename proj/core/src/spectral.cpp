#include "holodual/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "holodual/error.hpp"

namespace holodual {
namespace {

bool is_finite(Complex c) noexcept {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

// e^{-2 pi i k / M} for k = 0 .. M-1. Products n*j are reduced mod M before
// lookup so every twiddle is taken from the first period.
std::vector<Complex> twiddles(int M) {
  std::vector<Complex> w(static_cast<std::size_t>(M));
  for (int k = 0; k < M; ++k) {
    const double angle = -2.0 * std::numbers::pi * k / M;
    w[static_cast<std::size_t>(k)] = {std::cos(angle), std::sin(angle)};
  }
  return w;
}

// |c|^2 as re^2 + im^2. std::norm squares abs() in libstdc++, which would
// not match the pairing's summation bit for bit.
double abs2(Complex c) noexcept { return c.real() * c.real() + c.imag() * c.imag(); }

std::size_t wrap(long long value, int M) {
  long long r = value % M;
  if (r < 0) r += M;
  return static_cast<std::size_t>(r);
}

}  // namespace

BoundaryDistribution::BoundaryDistribution(int n_min, std::vector<Complex> coeffs)
    : n_min_(n_min), coeffs_(std::move(coeffs)) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!is_finite(coeffs_[i])) {
      throw Error(ErrorKind::kInvalidData,
                  "non-finite coefficient at frequency " +
                      std::to_string(n_min_ + static_cast<int>(i)));
    }
  }
}

BoundaryDistribution BoundaryDistribution::mode(int n, Complex c) {
  return BoundaryDistribution(n, {c});
}

Complex BoundaryDistribution::operator[](int n) const noexcept {
  const long long idx = static_cast<long long>(n) - n_min_;
  if (idx < 0 || idx >= static_cast<long long>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(idx)];
}

bool BoundaryDistribution::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Complex c) { return c == Complex{}; });
}

BoundaryDistribution BoundaryDistribution::trimmed() const {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](Complex c) { return c != Complex{}; });
  if (first == coeffs_.end()) return {};
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](Complex c) { return c != Complex{}; });
  const int lo = n_min_ + static_cast<int>(first - coeffs_.begin());
  return BoundaryDistribution(lo, std::vector<Complex>(first, last.base()));
}

namespace {

template <class Op>
BoundaryDistribution combine(const BoundaryDistribution& f,
                             const BoundaryDistribution& g, Op op) {
  if (f.empty() && g.empty()) return {};
  const int lo = f.empty() ? g.n_min()
                 : g.empty() ? f.n_min()
                             : std::min(f.n_min(), g.n_min());
  const int hi = f.empty() ? g.n_max()
                 : g.empty() ? f.n_max()
                             : std::max(f.n_max(), g.n_max());
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) out[static_cast<std::size_t>(n - lo)] = op(f[n], g[n]);
  return BoundaryDistribution(lo, std::move(out));
}

}  // namespace

BoundaryDistribution operator+(const BoundaryDistribution& f,
                               const BoundaryDistribution& g) {
  return combine(f, g, [](Complex a, Complex b) { return a + b; });
}

BoundaryDistribution operator-(const BoundaryDistribution& f,
                               const BoundaryDistribution& g) {
  return combine(f, g, [](Complex a, Complex b) { return a - b; });
}

BoundaryDistribution operator*(Complex alpha, const BoundaryDistribution& f) {
  std::vector<Complex> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : out) c *= alpha;
  return BoundaryDistribution(f.n_min(), std::move(out));
}

bool operator==(const BoundaryDistribution& f,
                const BoundaryDistribution& g) noexcept {
  if (f.empty() && g.empty()) return true;
  const int lo = f.empty() ? g.n_min()
                 : g.empty() ? f.n_min()
                             : std::min(f.n_min(), g.n_min());
  const int hi = f.empty() ? g.n_max()
                 : g.empty() ? f.n_max()
                             : std::max(f.n_max(), g.n_max());
  for (int n = lo; n <= hi; ++n) {
    if (f[n] != g[n]) return false;
  }
  return true;
}

BoundaryDistribution fourier_analyze(std::span<const Complex> samples) {
  const auto count = samples.size();
  if (count < 2 || count % 2 != 0) {
    throw Error(ErrorKind::kInvalidGrid,
                "fourier_analyze needs an even sample count >= 2, got " +
                    std::to_string(count));
  }
  for (std::size_t j = 0; j < count; ++j) {
    if (!is_finite(samples[j])) {
      throw Error(ErrorKind::kInvalidData,
                  "non-finite sample at node " + std::to_string(j));
    }
  }
  const int M = static_cast<int>(count);
  const auto w = twiddles(M);
  const int n_lo = -M / 2 + 1;
  std::vector<Complex> coeffs(count);
  for (int n = n_lo; n <= M / 2; ++n) {
    Complex acc{};
    for (int j = 0; j < M; ++j) {
      acc += samples[static_cast<std::size_t>(j)] *
             w[wrap(static_cast<long long>(n) * j, M)];
    }
    coeffs[static_cast<std::size_t>(n - n_lo)] = acc / static_cast<double>(M);
  }
  return BoundaryDistribution(n_lo, std::move(coeffs));
}

std::vector<Complex> fourier_synthesize(const BoundaryDistribution& f, int M) {
  const auto support = f.trimmed();
  const int reach = support.empty()
                        ? 0
                        : std::max(std::abs(support.n_min()), std::abs(support.n_max()));
  if (M < 2 || M < 2 * reach + 2) {
    throw Error(ErrorKind::kAliasing,
                "fourier_synthesize: M = " + std::to_string(M) +
                    " cannot resolve frequencies up to |n| = " +
                    std::to_string(reach) + " (need M >= " +
                    std::to_string(2 * reach + 2) + ")");
  }
  const auto w = twiddles(M);
  std::vector<Complex> values(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    Complex acc{};
    for (int n = support.n_min(); n <= support.n_max(); ++n) {
      acc += support[n] * std::conj(w[wrap(static_cast<long long>(n) * j, M)]);
    }
    values[static_cast<std::size_t>(j)] = acc;
  }
  return values;
}

double sobolev_norm_squared(const BoundaryDistribution& f, SobolevIndex sp) {
  double acc = 0.0;
  for (int n = f.n_min(); n <= f.n_max(); ++n) {
    const double weight = std::pow(1.0 + static_cast<double>(n) * n, sp.value);
    acc += weight * abs2(f[n]);
  }
  return acc;
}

double sobolev_norm(const BoundaryDistribution& f, SobolevIndex sp) {
  return std::sqrt(sobolev_norm_squared(f, sp));
}

Complex l2_pairing(const BoundaryDistribution& f, const BoundaryDistribution& g) {
  double re = 0.0;
  double im = 0.0;
  for (int n = f.n_min(); n <= f.n_max(); ++n) {
    const Complex a = f[n];
    const Complex b = g[n];
    re += a.real() * b.real() + a.imag() * b.imag();
    im += a.imag() * b.real() - a.real() * b.imag();
  }
  return {re, im};
}

Complex koethe_pairing(const BoundaryDistribution& f,
                       const BoundaryDistribution& g) {
  Complex acc{};
  for (int n = f.n_min(); n <= f.n_max(); ++n) acc += f[n] * g[-1 - n];
  return acc;
}

BoundaryDistribution pad_or_truncate(const BoundaryDistribution& f, int n_lo,
                                     int n_hi) {
  if (n_lo > n_hi) {
    throw Error(ErrorKind::kValidation, "pad_or_truncate: empty window [" +
                                            std::to_string(n_lo) + ", " +
                                            std::to_string(n_hi) + "]");
  }
  std::vector<Complex> out(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (int n = n_lo; n <= n_hi; ++n) out[static_cast<std::size_t>(n - n_lo)] = f[n];
  return BoundaryDistribution(n_lo, std::move(out));
}

}  // namespace holodual

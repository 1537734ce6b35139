#pragma once

// Coefficient algebra on the unit circle: discrete Fourier analysis and
// synthesis, the Sobolev scale of boundary norms, and the two boundary
// pairings (sesquilinear L2 and bilinear Koethe).

#include <complex>
#include <span>
#include <vector>

namespace holodual {

using Complex = std::complex<double>;

/// Index on the Sobolev scale. Boundary operations accept any finite real;
/// spaces of holomorphic functions use integer values.
struct SobolevIndex {
  double value = 0.0;

  constexpr SobolevIndex() = default;
  constexpr explicit SobolevIndex(double v) : value(v) {}

  friend constexpr bool operator==(SobolevIndex, SobolevIndex) = default;
};

/// Finitely supported two-sided Fourier series sum_n c_n e^{in theta}.
///
/// Coefficients are stored contiguously for n = n_min ... n_min + size - 1.
/// Reads outside the stored window return zero. Every stored value is
/// finite; construction throws ErrorKind::kInvalidData otherwise.
class BoundaryDistribution {
 public:
  BoundaryDistribution() = default;
  BoundaryDistribution(int n_min, std::vector<Complex> coeffs);

  /// Single frequency n with coefficient c.
  static BoundaryDistribution mode(int n, Complex c = 1.0);

  int n_min() const noexcept { return n_min_; }
  /// Last stored frequency; n_min() - 1 when empty.
  int n_max() const noexcept {
    return n_min_ + static_cast<int>(coeffs_.size()) - 1;
  }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// c_n, zero outside the stored window.
  Complex operator[](int n) const noexcept;

  /// True when every stored coefficient is exactly zero.
  bool is_zero() const noexcept;

  /// Smallest window [lo, hi] holding all nonzero coefficients; empty
  /// distribution when is_zero().
  BoundaryDistribution trimmed() const;

  friend BoundaryDistribution operator+(const BoundaryDistribution& f,
                                        const BoundaryDistribution& g);
  friend BoundaryDistribution operator-(const BoundaryDistribution& f,
                                        const BoundaryDistribution& g);
  friend BoundaryDistribution operator*(Complex alpha,
                                        const BoundaryDistribution& f);

  /// Coefficient-wise equality after zero padding (windows may differ).
  friend bool operator==(const BoundaryDistribution& f,
                         const BoundaryDistribution& g) noexcept;

 private:
  int n_min_ = 0;
  std::vector<Complex> coeffs_;
};

/// Frequencies [-M/2 + 1, M/2] from M equispaced samples at 2 pi j / M.
/// Throws kInvalidGrid for odd M or M < 2, kInvalidData on non-finite input.
BoundaryDistribution fourier_analyze(std::span<const Complex> samples);

/// Values sum_n c_n e^{i n theta_j} at theta_j = 2 pi j / M. Requires
/// M >= 2 * max|n| + 2 over the nonzero support (kAliasing otherwise).
std::vector<Complex> fourier_synthesize(const BoundaryDistribution& f, int M);

/// Squared H^{s'} norm sum_n (1 + n^2)^{s'} |c_n|^2.
double sobolev_norm_squared(const BoundaryDistribution& f, SobolevIndex sp);

/// H^{s'} norm (sum_n (1 + n^2)^{s'} |c_n|^2)^{1/2}.
double sobolev_norm(const BoundaryDistribution& f, SobolevIndex sp);

/// Sesquilinear pairing sum_n c_n(f) conj(c_n(g)), i.e. the normalized
/// (1/2pi) integral of f conj(g) over the circle.
Complex l2_pairing(const BoundaryDistribution& f, const BoundaryDistribution& g);

/// Bilinear pairing (1/2 pi i) \oint f g dzeta = sum_n c_n(f) c_{-1-n}(g).
Complex koethe_pairing(const BoundaryDistribution& f,
                       const BoundaryDistribution& g);

/// Restriction / zero extension to the window [n_lo, n_hi].
BoundaryDistribution pad_or_truncate(const BoundaryDistribution& f, int n_lo,
                                     int n_hi);

}  // namespace holodual

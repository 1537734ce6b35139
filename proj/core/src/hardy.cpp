#include "holodual/hardy.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "holodual/error.hpp"

namespace holodual {
namespace {

void require_finite(const std::vector<Complex>& values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
      throw Error(ErrorKind::kInvalidData, std::string(what) +
                                               ": non-finite coefficient at position " +
                                               std::to_string(i));
    }
  }
}

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << z.real() << ", " << z.imag() << ')';
  return os.str();
}

Complex horner(const std::vector<Complex>& coeffs, Complex x) {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

InteriorFunction::InteriorFunction(std::vector<Complex> coeffs, SobolevIndex index)
    : a(std::move(coeffs)), s(index) {
  require_finite(a, "InteriorFunction");
}

ExteriorFunction::ExteriorFunction(std::vector<Complex> coeffs, SobolevIndex index)
    : b(std::move(coeffs)), s(index) {
  require_finite(b, "ExteriorFunction");
}

Complex ExteriorFunction::coeff(int m) const noexcept {
  if (m < 1 || m > static_cast<int>(b.size())) return {};
  return b[static_cast<std::size_t>(m - 1)];
}

BoundaryDistribution trace_interior(const InteriorFunction& u) {
  return BoundaryDistribution(0, u.a);
}

BoundaryDistribution trace_exterior(const ExteriorFunction& v) {
  // c_{-m} = b_m, stored ascending from n = -N.
  std::vector<Complex> c(v.b.rbegin(), v.b.rend());
  return BoundaryDistribution(-static_cast<int>(v.b.size()), std::move(c));
}

InteriorFunction interior_part(const BoundaryDistribution& f, SobolevIndex s) {
  std::vector<Complex> a;
  for (int n = 0; n <= f.n_max(); ++n) a.push_back(f[n]);
  return InteriorFunction(std::move(a), s);
}

Complex cauchy_transform(const BoundaryDistribution& f, Complex z) {
  const double r = std::abs(z);
  if (!(std::abs(r - 1.0) > kBoundaryProximity)) {
    throw Error(ErrorKind::kBoundaryProximity,
                "cauchy_transform: z = " + describe(z) +
                    " lies within 1e-9 of the unit circle");
  }
  const auto parts = hardy_projections(f);
  if (r < 1.0) return evaluate_interior(parts.interior, z);
  return evaluate_exterior(parts.exterior, z);
}

HardyPair hardy_projections(const BoundaryDistribution& f,
                            SobolevIndex boundary_index) {
  const SobolevIndex index{boundary_index.value + 0.5};
  HardyPair out{interior_part(f, index), ExteriorFunction({}, index)};
  for (int m = 1; m <= -f.n_min(); ++m) out.exterior.b.push_back(-f[-m]);
  return out;
}

double jump_residual(const BoundaryDistribution& f) {
  const auto parts = hardy_projections(f);
  const auto residual =
      trace_interior(parts.interior) - trace_exterior(parts.exterior) - f;
  return sobolev_norm(residual, SobolevIndex{0.0});
}

Complex evaluate_interior(const InteriorFunction& u, Complex z) {
  if (!(std::abs(z) < 1.0)) {
    throw Error(ErrorKind::kDomain,
                "evaluate_interior: z = " + describe(z) + " is not inside the unit disk");
  }
  return horner(u.a, z);
}

Complex evaluate_exterior(const ExteriorFunction& v, Complex z) {
  if (!(std::abs(z) > 1.0)) {
    throw Error(ErrorKind::kDomain,
                "evaluate_exterior: z = " + describe(z) + " is not outside the unit disk");
  }
  const Complex w = 1.0 / z;
  return w * horner(v.b, w);
}

Complex evaluate_laurent(const BoundaryDistribution& f, Complex z) {
  std::vector<Complex> positive;
  for (int n = 0; n <= f.n_max(); ++n) positive.push_back(f[n]);
  Complex value = horner(positive, z);
  if (f.n_min() < 0) {
    if (z == Complex{}) {
      throw Error(ErrorKind::kDomain, "evaluate_laurent: z = 0 with negative frequencies");
    }
    std::vector<Complex> negative;
    for (int m = 1; m <= -f.n_min(); ++m) negative.push_back(f[-m]);
    const Complex w = 1.0 / z;
    value += w * horner(negative, w);
  }
  return value;
}

}  // namespace holodual

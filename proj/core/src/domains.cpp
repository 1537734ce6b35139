#include "holodual/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "holodual/error.hpp"

namespace holodual {
namespace {

constexpr Complex kI{0.0, 1.0};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate(const CurveShape& shape) {
  std::visit(Overloaded{
                 [](const Circle& c) {
                   if (!(c.radius > 0.0) || !std::isfinite(c.radius)) {
                     throw Error(ErrorKind::kValidation, "circle radius must be positive");
                   }
                 },
                 [](const Ellipse& e) {
                   if (!(e.p > 0.0 && e.q > 0.0) || !std::isfinite(e.p) ||
                       !std::isfinite(e.q)) {
                     throw Error(ErrorKind::kValidation,
                                 "ellipse semi-axes must be positive");
                   }
                 },
                 [](const PerturbedCircle& pc) {
                   if (!(std::abs(pc.eps) < 1.0) || pc.k < 1) {
                     throw Error(ErrorKind::kValidation,
                                 "perturbed circle needs |eps| < 1 and k >= 1");
                   }
                 },
             },
             shape);
}

Complex position_of(const CurveShape& shape, double t) {
  return std::visit(
      Overloaded{
          [t](const Circle& c) { return c.radius * Complex{std::cos(t), std::sin(t)}; },
          [t](const Ellipse& e) { return Complex{e.p * std::cos(t), e.q * std::sin(t)}; },
          [t](const PerturbedCircle& pc) {
            return (1.0 + pc.eps * std::cos(pc.k * t)) * Complex{std::cos(t), std::sin(t)};
          },
      },
      shape);
}

Complex derivative_of(const CurveShape& shape, double t) {
  return std::visit(
      Overloaded{
          [t](const Circle& c) {
            return c.radius * kI * Complex{std::cos(t), std::sin(t)};
          },
          [t](const Ellipse& e) { return Complex{-e.p * std::sin(t), e.q * std::cos(t)}; },
          [t](const PerturbedCircle& pc) {
            const Complex e_it{std::cos(t), std::sin(t)};
            const double radial = 1.0 + pc.eps * std::cos(pc.k * t);
            const double radial_dt = -pc.eps * pc.k * std::sin(pc.k * t);
            return (radial_dt + kI * radial) * e_it;
          },
      },
      shape);
}

void require_node_count(std::span<const Complex> values, const QuadratureGrid& grid,
                        const char* what) {
  if (values.size() != static_cast<std::size_t>(grid.size())) {
    throw Error(ErrorKind::kValidation,
                std::string(what) + ": expected " + std::to_string(grid.size()) +
                    " node values, got " + std::to_string(values.size()));
  }
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (!std::isfinite(values[j].real()) || !std::isfinite(values[j].imag())) {
      throw Error(ErrorKind::kInvalidData,
                  std::string(what) + ": non-finite value at node " + std::to_string(j));
    }
  }
}

}  // namespace

Curve::Curve(CurveShape shape, bool reversed) : shape_(shape), reversed_(reversed) {
  validate(shape_);
}

Complex Curve::position(double theta) const {
  return position_of(shape_, reversed_ ? -theta : theta);
}

Complex Curve::derivative(double theta) const {
  return reversed_ ? -derivative_of(shape_, -theta) : derivative_of(shape_, theta);
}

std::string Curve::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&os](const Circle& c) { os << "circle:" << c.radius; },
                 [&os](const Ellipse& e) { os << "ellipse:" << e.p << ',' << e.q; },
                 [&os](const PerturbedCircle& pc) {
                   os << "perturbed:" << pc.eps << ',' << pc.k;
                 },
             },
             shape_);
  if (reversed_) os << " (reversed)";
  return os.str();
}

Curve parse_curve(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string::npos) {
    std::istringstream is(text.substr(colon + 1));
    std::string item;
    while (std::getline(is, item, ',')) {
      try {
        std::size_t used = 0;
        params.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorKind::kValidation, "bad curve parameter '" + item + "'");
      }
    }
  }
  if (name == "circle") {
    if (params.size() > 1) throw Error(ErrorKind::kValidation, "circle takes one radius");
    return Curve(Circle{params.empty() ? 1.0 : params[0]});
  }
  if (name == "ellipse" && params.size() == 2) {
    return Curve(Ellipse{params[0], params[1]});
  }
  if (name == "perturbed" && params.size() == 2) {
    const double k = params[1];
    if (k != std::floor(k)) {
      throw Error(ErrorKind::kValidation, "perturbed circle frequency must be an integer");
    }
    return Curve(PerturbedCircle{params[0], static_cast<int>(k)});
  }
  throw Error(ErrorKind::kValidation, "unknown curve '" + text +
                                          "' (expected circle:R, ellipse:p,q or "
                                          "perturbed:eps,k)");
}

QuadratureGrid::QuadratureGrid(int M) : M_(M) {
  if (M < 16 || M % 2 != 0) {
    throw Error(ErrorKind::kInvalidGrid,
                "quadrature grid needs an even node count >= 16, got " + std::to_string(M));
  }
}

double QuadratureGrid::node(int j) const noexcept {
  return 2.0 * std::numbers::pi * j / M_;
}

double QuadratureGrid::weight() const noexcept { return 2.0 * std::numbers::pi / M_; }

std::vector<Complex> curve_nodes(const Curve& curve, const QuadratureGrid& grid) {
  std::vector<Complex> out(static_cast<std::size_t>(grid.size()));
  for (int j = 0; j < grid.size(); ++j) {
    out[static_cast<std::size_t>(j)] = curve.position(grid.node(j));
  }
  return out;
}

std::vector<Complex> sample_on_curve(const Curve& curve, const QuadratureGrid& grid,
                                     const std::function<Complex(Complex)>& g) {
  auto nodes = curve_nodes(curve, grid);
  for (auto& z : nodes) z = g(z);
  return nodes;
}

double arc_length(const Curve& curve, const QuadratureGrid& grid) {
  double acc = 0.0;
  for (int j = 0; j < grid.size(); ++j) acc += std::abs(curve.derivative(grid.node(j)));
  return acc * grid.weight();
}

double distance_to_curve(const Curve& curve, const QuadratureGrid& grid, Complex z) {
  const int fine = 4 * grid.size();
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < fine; ++j) {
    const double t = 2.0 * std::numbers::pi * j / fine;
    best = std::min(best, std::abs(curve.position(t) - z));
  }
  return best;
}

Complex contour_integral(std::span<const Complex> values, const Curve& curve,
                         const QuadratureGrid& grid) {
  require_node_count(values, grid, "contour_integral");
  Complex acc{};
  for (int j = 0; j < grid.size(); ++j) {
    acc += values[static_cast<std::size_t>(j)] * curve.derivative(grid.node(j));
  }
  return acc * grid.weight();
}

double quadrature_proximity_bound(const Curve& curve, const QuadratureGrid& grid) {
  return 5.0 * arc_length(curve, grid) / grid.size();
}

Complex cauchy_integral_quadrature(std::span<const Complex> values,
                                   const Curve& curve, const QuadratureGrid& grid,
                                   Complex z) {
  require_node_count(values, grid, "cauchy_integral_quadrature");
  const double bound = quadrature_proximity_bound(curve, grid);
  const double dist = distance_to_curve(curve, grid, z);
  if (!(dist > bound)) {
    std::ostringstream os;
    os << "cauchy_integral_quadrature: dist(z, curve) = " << dist
       << " does not exceed 5 * length / M = " << bound << " (M = " << grid.size()
       << ")";
    throw Error(ErrorKind::kBoundaryProximity, os.str());
  }
  const auto nodes = curve_nodes(curve, grid);
  std::vector<Complex> integrand(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    integrand[j] = values[j] / (nodes[j] - z);
  }
  return contour_integral(integrand, curve, grid) / (2.0 * std::numbers::pi * kI);
}

Complex pairing_quadrature(std::span<const Complex> u_values,
                           std::span<const Complex> v_values, const Curve& curve,
                           const QuadratureGrid& grid) {
  require_node_count(u_values, grid, "pairing_quadrature");
  require_node_count(v_values, grid, "pairing_quadrature");
  std::vector<Complex> product(u_values.size());
  for (std::size_t j = 0; j < product.size(); ++j) product[j] = u_values[j] * v_values[j];
  return contour_integral(product, curve, grid) / (2.0 * std::numbers::pi * kI);
}

}  // namespace holodual

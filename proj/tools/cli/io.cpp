#include "io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace holodual::cli {
namespace {

std::string_view kind_name(CoeffKind kind) {
  switch (kind) {
    case CoeffKind::kBoundary: return "boundary";
    case CoeffKind::kInterior: return "interior";
    case CoeffKind::kExterior: return "exterior";
  }
  return "boundary";
}

double finite_or_null_guard(double x, const char* what) {
  if (!std::isfinite(x)) throw UsageError(std::string(what) + ": non-finite value");
  return x;
}

}  // namespace

CoeffDocument parse_coeff_document(const Json& doc) {
  if (!doc.is_object()) throw UsageError("coefficient file: expected a JSON object");
  CoeffDocument out;
  try {
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "boundary") {
      out.kind = CoeffKind::kBoundary;
    } else if (kind == "interior") {
      out.kind = CoeffKind::kInterior;
    } else if (kind == "exterior") {
      out.kind = CoeffKind::kExterior;
    } else {
      throw UsageError("coefficient file: unknown kind '" + kind + "'");
    }
    out.n_min = doc.at("n_min").get<int>();
    for (const auto& pair : doc.at("coeffs")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
          !pair[1].is_number()) {
        throw UsageError("coefficient file: each coefficient must be [re, im]");
      }
      out.coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    if (doc.contains("s") && !doc.at("s").is_null()) out.s = doc.at("s").get<double>();
  } catch (const Json::exception& e) {
    throw UsageError(std::string("coefficient file: ") + e.what());
  }
  return out;
}

CoeffDocument read_coeff_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
  return parse_coeff_document(doc);
}

Json to_json(const CoeffDocument& doc) {
  Json coeffs = Json::array();
  for (const auto& c : doc.coeffs) coeffs.push_back(complex_json(c));
  Json out = {{"kind", kind_name(doc.kind)}, {"n_min", doc.n_min}, {"coeffs", coeffs}};
  if (doc.s) out["s"] = finite_or_null_guard(*doc.s, "s");
  return out;
}

CoeffDocument document_of(const BoundaryDistribution& f) {
  return {CoeffKind::kBoundary, f.n_min(), {f.coeffs().begin(), f.coeffs().end()}, {}};
}

CoeffDocument document_of(const InteriorFunction& u) {
  return {CoeffKind::kInterior, 0, u.a, u.s.value};
}

CoeffDocument document_of(const ExteriorFunction& v) {
  const auto trace = trace_exterior(v);
  return {CoeffKind::kExterior, trace.n_min(), {trace.coeffs().begin(), trace.coeffs().end()},
          v.s.value};
}

BoundaryDistribution as_boundary(const CoeffDocument& doc) {
  return BoundaryDistribution(doc.n_min, doc.coeffs);
}

InteriorFunction as_interior(const CoeffDocument& doc) {
  if (doc.kind == CoeffKind::kExterior || (!doc.coeffs.empty() && doc.n_min < 0)) {
    throw UsageError("expected interior data (frequencies >= 0)");
  }
  const auto f = as_boundary(doc);
  std::vector<Complex> a;
  for (int n = 0; n <= f.n_max(); ++n) a.push_back(f[n]);
  return InteriorFunction(std::move(a), SobolevIndex{doc.s.value_or(0.0)});
}

ExteriorFunction as_exterior(const CoeffDocument& doc) {
  const int n_max = doc.n_min + static_cast<int>(doc.coeffs.size()) - 1;
  if (doc.kind == CoeffKind::kInterior || (!doc.coeffs.empty() && n_max > -1)) {
    throw UsageError("expected exterior data (frequencies <= -1)");
  }
  const auto f = as_boundary(doc);
  std::vector<Complex> b;
  for (int m = 1; m <= -f.n_min(); ++m) b.push_back(f[-m]);
  return ExteriorFunction(std::move(b), SobolevIndex{doc.s.value_or(0.0)});
}

Complex parse_point(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw UsageError("bad point '" + text + "', expected re,im");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw UsageError("bad point '" + text + "', expected re,im");
    std::string rest;
    if (in >> rest) throw UsageError("bad point '" + text + "', expected re,im");
  }
  return {re, im};
}

Json complex_json(Complex z) {
  return Json::array({finite_or_null_guard(z.real(), "complex value"),
                      finite_or_null_guard(z.imag(), "complex value")});
}

Json to_json(const TheoremReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"value", c.value},
                      {"bound", c.bound},
                      {"relation", c.relation == Relation::kAtMost ? "<=" : ">="},
                      {"pass", c.passed}});
  }
  Json out = {{"theorem", report.theorem},
              {"seed", report.seed},
              {"checks", checks},
              {"notes", report.notes},
              {"pass", report.passed()}};
  out["s"] = report.s ? Json(*report.s) : Json(nullptr);
  return out;
}

Json to_json(const SobolevEstimate& estimate) {
  Json curve = Json::array();
  for (const auto& sample : estimate.norm_curve) {
    curve.push_back({{"s", sample.s},
                     {"norm", sample.norm},
                     {"block_ratio", sample.block_ratio},
                     {"verdict", to_string(sample.verdict)}});
  }
  Json out = {{"status", to_string(estimate.status)},
              {"norm_curve", curve},
              {"tail_exponent", estimate.tail_exponent},
              {"fit_residual", estimate.fit_residual},
              {"note", estimate.note}};
  out["s_min"] = estimate.s_min ? Json(*estimate.s_min) : Json(nullptr);
  return out;
}

Json to_json(const PointwiseFit& fit) {
  return {{"gamma", fit.gamma},
          {"C", fit.C},
          {"R_used", fit.R_used},
          {"truncation_warning", fit.truncation_warning}};
}

void emit(const Json& doc, const std::string& path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw UsageError("cannot write '" + path + "'");
}

}  // namespace holodual::cli

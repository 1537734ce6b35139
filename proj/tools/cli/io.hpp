#pragma once

// File and report plumbing for the command-line front end. Coefficient files
// and reports are JSON; keys are emitted in sorted order so identical runs
// give identical bytes.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "holodual/duality.hpp"
#include "holodual/growth.hpp"
#include "holodual/hardy.hpp"
#include "holodual/spectral.hpp"

namespace holodual::cli {

using Json = nlohmann::json;

/// Bad flags, unreadable files or malformed documents (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CoeffKind { kBoundary, kInterior, kExterior };

/// {"kind", "n_min", "coeffs": [[re, im], ...], "s"?}, ascending frequencies.
struct CoeffDocument {
  CoeffKind kind = CoeffKind::kBoundary;
  int n_min = 0;
  std::vector<Complex> coeffs;
  std::optional<double> s;
};

CoeffDocument parse_coeff_document(const Json& doc);
CoeffDocument read_coeff_document(const std::string& path);
Json to_json(const CoeffDocument& doc);

CoeffDocument document_of(const BoundaryDistribution& f);
CoeffDocument document_of(const InteriorFunction& u);
CoeffDocument document_of(const ExteriorFunction& v);

/// Boundary trace of any kind of document.
BoundaryDistribution as_boundary(const CoeffDocument& doc);
/// Needs all stored frequencies >= 0.
InteriorFunction as_interior(const CoeffDocument& doc);
/// Needs all stored frequencies <= -1.
ExteriorFunction as_exterior(const CoeffDocument& doc);

/// "re,im" or a bare real.
Complex parse_point(const std::string& text);

Json complex_json(Complex z);
Json to_json(const TheoremReport& report);
Json to_json(const SobolevEstimate& estimate);
Json to_json(const PointwiseFit& fit);

/// Writes doc (two-space indent, trailing newline) to path, or to out when
/// path is empty.
void emit(const Json& doc, const std::string& path, std::ostream& out);

}  // namespace holodual::cli

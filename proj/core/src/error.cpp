#include "holodual/error.hpp"

namespace holodual {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidGrid: return "invalid-grid";
    case ErrorKind::kInvalidData: return "invalid-data";
    case ErrorKind::kAliasing: return "aliasing";
    case ErrorKind::kBoundaryProximity: return "boundary-proximity";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kTruncation: return "truncation";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kDegenerateInput: return "degenerate-input";
    case ErrorKind::kInvalidFamily: return "invalid-family";
  }
  return "unknown";
}

}  // namespace holodual

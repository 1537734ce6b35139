#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holodual {

/// Failure categories raised by the numerical routines.
enum class ErrorKind {
  kInvalidGrid,        // sample count odd or too small
  kInvalidData,        // non-finite value offered to a container
  kAliasing,           // synthesis grid cannot resolve the support
  kBoundaryProximity,  // evaluation point too close to the curve
  kDomain,             // evaluation on the wrong side of the curve
  kTruncation,         // truncation too short for the requested operation
  kValidation,         // malformed parameters
  kDegenerateInput,    // all-zero input where a nonzero one is required
  kInvalidFamily,      // coefficient family violates the decay contract
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace holodual

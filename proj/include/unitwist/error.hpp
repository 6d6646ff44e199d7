#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unitwist {

enum class ErrorKind {
  OddExponent,
  SystemMismatch,
  SizeBound,
  Singular,
  NotInBigCell,
  NotUpperTriangular,
  NotInHg,
  DimensionMismatch,
  DegenerateSample,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type; callers
// that need to branch on the failure inspect kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace unitwist

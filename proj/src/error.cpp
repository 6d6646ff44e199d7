#include "unitwist/error.hpp"

namespace unitwist {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OddExponent: return "OddExponent";
    case ErrorKind::SystemMismatch: return "SystemMismatch";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotInBigCell: return "NotInBigCell";
    case ErrorKind::NotUpperTriangular: return "NotUpperTriangular";
    case ErrorKind::NotInHg: return "NotInH_g";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace unitwist

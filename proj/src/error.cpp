#include "qgeom/error.hpp"

namespace qgeom {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DegenerateX: return "DegenerateX";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

void require_same_dim(long a, long b, const char* where) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(where) + ": dimension mismatch (" +
                    std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace qgeom

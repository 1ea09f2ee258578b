#pragma once

#include <stdexcept>
#include <string>

namespace qgeom {

enum class ErrorKind {
  ZeroVector,
  DimensionTooSmall,
  DimensionMismatch,
  NotNormalized,
  NotHermitian,
  DegenerateX,
  SupportViolation,
  InvalidArgument,
  Io,
  Parse,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so front ends can map
// it onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

void require_same_dim(long a, long b, const char* where);

}  // namespace qgeom

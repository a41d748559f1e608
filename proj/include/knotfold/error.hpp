#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotfold {

enum class ErrorKind {
  // diagram codec
  NonInteger,
  OddEntry,
  DuplicateOrGap,
  NotRealizable,
  BadArcMultiplicity,
  Disconnected,
  MalformedInput,
  // invariant engine
  VariableMismatch,
  CapExceeded,
  WidthOverflow,
  NotAKnot,
  InexactDivision,
  Unsupported,
  // point clouds
  HalfIntegerExponent,
  EmptyFamily,
  WindowOverflow,
  CoefficientOverflow,
  // pca
  DimensionMismatch,
  InsufficientData,
  NotSymmetric,
  NoConvergence,
  DegenerateSpectrum,
  // pipeline
  Unreadable,
  UnknownFormat,
  QuarantineOverflow,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace knotfold

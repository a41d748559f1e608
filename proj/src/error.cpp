#include "knotfold/error.hpp"

namespace knotfold {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonInteger: return "NonInteger";
    case ErrorKind::OddEntry: return "OddEntry";
    case ErrorKind::DuplicateOrGap: return "DuplicateOrGap";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::BadArcMultiplicity: return "BadArcMultiplicity";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::WidthOverflow: return "WidthOverflow";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::HalfIntegerExponent: return "HalfIntegerExponent";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::WindowOverflow: return "WindowOverflow";
    case ErrorKind::CoefficientOverflow: return "CoefficientOverflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::Unreadable: return "Unreadable";
    case ErrorKind::UnknownFormat: return "UnknownFormat";
    case ErrorKind::QuarantineOverflow: return "QuarantineOverflow";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace knotfold

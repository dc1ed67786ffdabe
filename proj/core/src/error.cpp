#include "treejac/error.hpp"

#include <utility>

namespace treejac {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DisconnectedCurve: return "DisconnectedCurve";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::DanglingNodeReference: return "DanglingNodeReference";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::EmptySubcurve: return "EmptySubcurve";
    case ErrorKind::UnknownComponent: return "UnknownComponent";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::FullCurve: return "FullCurve";
    case ErrorKind::DisconnectedSubcurve: return "DisconnectedSubcurve";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonPositivePolarization: return "NonPositivePolarization";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotFinal: return "NotFinal";
    case ErrorKind::NotAWall: return "NotAWall";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::SweepTooLarge: return "SweepTooLarge";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegreeMismatch:
    case ErrorKind::NotFinal:
    case ErrorKind::NotAWall:
      return 2;
    case ErrorKind::ResourceCap:
    case ErrorKind::SweepTooLarge:
      return 3;
    default:
      return 1;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

NotAdmissibleError::NotAdmissibleError(std::size_t index, std::vector<std::vector<std::string>> violating,
                                       const std::string& message)
    : Error(ErrorKind::NotAdmissible, message), index_(index), violating_(std::move(violating)) {}

}  // namespace treejac

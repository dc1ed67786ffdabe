#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treejac {

enum class ErrorKind {
  // structural (curve description, subcurves, orderings)
  ParseError,
  DisconnectedCurve,
  CycleDetected,
  DuplicateId,
  DanglingNodeReference,
  SelfLoop,
  EmptySubcurve,
  UnknownComponent,
  UnknownNode,
  FullCurve,
  DisconnectedSubcurve,
  NotAdmissible,
  IndexOutOfRange,
  NonPositivePolarization,
  InvalidArgument,
  // degree bookkeeping
  DegreeMismatch,
  NotFinal,
  NotAWall,
  // resource guards
  ResourceCap,
  SweepTooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Process exit status for an error: 1 structural, 2 degree/profile mismatch, 3 resource cap.
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by verify_ordering; carries the first failing position and the
/// connected pieces of X - C_i (other than the one holding the last component)
/// that contain a component placed after position i.
class NotAdmissibleError : public Error {
 public:
  NotAdmissibleError(std::size_t index, std::vector<std::vector<std::string>> violating, const std::string& message);

  [[nodiscard]] std::size_t index() const noexcept { return index_; }
  [[nodiscard]] const std::vector<std::vector<std::string>>& violating() const noexcept { return violating_; }

 private:
  std::size_t index_;
  std::vector<std::vector<std::string>> violating_;
};

}  // namespace treejac

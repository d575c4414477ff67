#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logmut {

enum class ErrorKind {
  ZeroVector,
  Overflow,
  ClosureViolation,
  DuplicateDirection,
  PartitionSumMismatch,
  InvalidPartition,
  TooFewEdges,
  NotRankOne,
  NotRankTwo,
  IllegalMutation,
  InvalidDatum,
  ShapeMismatch,
  SubordinationRequired,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures are reported through this exception. `kind()` names
/// the violated invariant; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace logmut

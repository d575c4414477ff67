#include "logmut/error.hpp"

namespace logmut {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::DuplicateDirection: return "DuplicateDirection";
    case ErrorKind::PartitionSumMismatch: return "PartitionSumMismatch";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::TooFewEdges: return "TooFewEdges";
    case ErrorKind::NotRankOne: return "NotRankOne";
    case ErrorKind::NotRankTwo: return "NotRankTwo";
    case ErrorKind::IllegalMutation: return "IllegalMutation";
    case ErrorKind::InvalidDatum: return "InvalidDatum";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SubordinationRequired: return "SubordinationRequired";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace logmut

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace speclap {

enum class ErrorKind {
  InvalidArgument,
  NotSymmetric,
  NonZeroDiagonal,
  NoConvergence,
  ZeroVector,
  NegativeWeight,
  IsolatedVertex,
  NotConnected,
  InconsistentBipartition,
  Disconnected,
  DimensionTooLarge,
  NoNegativeEdges,
  DegenerateSubset,
  AllOneSide,
  EmptyBlock,
  ZeroVolume,
  RankDeficient,
  PreconditionViolated,
  ParseError,
  DuplicateEdge,
  IndexOutOfRange,
  IoError,
  NegativeWeightInUnsignedMode,
};

constexpr std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::InconsistentBipartition: return "InconsistentBipartition";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::NoNegativeEdges: return "NoNegativeEdges";
    case ErrorKind::DegenerateSubset: return "DegenerateSubset";
    case ErrorKind::AllOneSide: return "AllOneSide";
    case ErrorKind::EmptyBlock: return "EmptyBlock";
    case ErrorKind::ZeroVolume: return "ZeroVolume";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::NegativeWeightInUnsignedMode: return "NegativeWeightInUnsignedMode";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable and machine readable;
/// `what()` carries a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace speclap

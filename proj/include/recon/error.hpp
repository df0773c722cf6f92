#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace recon {

enum class ErrorCode {
  DisconnectedGraph,
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  OrderOutOfRange,
  OrderTooLarge,
  LengthMismatch,
  InvalidSpec,
  NegativeCoordinate,
  NoUniqueNonzero,
  DegreeTooSmall,
  AlphabetTooLarge,
  StructureMismatch,
  OracleInconsistent,
  CollapseContradiction,
  EvenTail,
  BudgetExceeded,
  CarrierMismatch,
  EvenP2Length,
  BitLengthMismatch,
  UnsupportedFamily,
  ParseError,
  UsageError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI renders it as `ERROR <code> <detail>`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace recon

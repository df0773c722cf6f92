#include "recon/error.hpp"

namespace recon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorCode::NoUniqueNonzero: return "NoUniqueNonzero";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::AlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::OracleInconsistent: return "OracleInconsistent";
    case ErrorCode::CollapseContradiction: return "CollapseContradiction";
    case ErrorCode::EvenTail: return "EvenTail";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::EvenP2Length: return "EvenP2Length";
    case ErrorCode::BitLengthMismatch: return "BitLengthMismatch";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace recon

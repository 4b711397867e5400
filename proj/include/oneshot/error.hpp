#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oneshot {

enum class ErrorKind {
  ParseError,
  InvalidAlphabet,
  UnknownVertex,
  UnknownEdge,
  DuplicateVertex,
  DuplicateEdge,
  CyclicGraph,
  EmptyTerminals,
  SourceIsTerminal,
  NoSourceTerminalPath,
  OrphanIntermediate,
  TerminalHasOutEdges,
  InvalidEdgeOrder,
  InvalidAdversary,
  InvalidCode,
  SymbolOutOfRange,
  LengthMismatch,
  ConeClosureViolation,
  AmbiguousCode,
  MultipleTerminals,
  NotTwoLevel,
  AdversaryNotFirstLevel,
  TooManyIntermediates,
  DammingVertexPresent,
  UnsupportedTopology,
  NotPrime,
  FieldTooSmall,
  DecodingFailure,
  DivisionByZero,
  SearchSpaceTooLarge,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::CyclicGraph: return "CyclicGraph";
    case ErrorKind::EmptyTerminals: return "EmptyTerminals";
    case ErrorKind::SourceIsTerminal: return "SourceIsTerminal";
    case ErrorKind::NoSourceTerminalPath: return "NoSourceTerminalPath";
    case ErrorKind::OrphanIntermediate: return "OrphanIntermediate";
    case ErrorKind::TerminalHasOutEdges: return "TerminalHasOutEdges";
    case ErrorKind::InvalidEdgeOrder: return "InvalidEdgeOrder";
    case ErrorKind::InvalidAdversary: return "InvalidAdversary";
    case ErrorKind::InvalidCode: return "InvalidCode";
    case ErrorKind::SymbolOutOfRange: return "SymbolOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ConeClosureViolation: return "ConeClosureViolation";
    case ErrorKind::AmbiguousCode: return "AmbiguousCode";
    case ErrorKind::MultipleTerminals: return "MultipleTerminals";
    case ErrorKind::NotTwoLevel: return "NotTwoLevel";
    case ErrorKind::AdversaryNotFirstLevel: return "AdversaryNotFirstLevel";
    case ErrorKind::TooManyIntermediates: return "TooManyIntermediates";
    case ErrorKind::DammingVertexPresent: return "DammingVertexPresent";
    case ErrorKind::UnsupportedTopology: return "UnsupportedTopology";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::DecodingFailure: return "DecodingFailure";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
  }
  return "Unknown";
}

/// The single exception type thrown by the library. `kind()` is stable and is
/// what the command-line front end reports; `what()` carries detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace oneshot

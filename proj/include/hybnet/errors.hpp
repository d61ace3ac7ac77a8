#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hybnet {

enum class Errc {
  EmptyRestriction,
  UnknownLabel,
  InvalidEdgeRef,
  NotACherry,
  InvalidTree,
  DuplicateLabel,
  Disconnected,
  TooSmall,
  UnsupportedConfiguration,
  NotABlobEdge,
  NotPendantBlob,
  TooManyLeaves,
  SyntaxError,
  NonBinary,
  DegreeViolation,
  TripleEdge,
  SchemaError,
  GroundSetMismatch,
  InapplicableStep,
  ReplayError,
  BadTerminal,
  NotATree,
  InvalidTrace,
  ImageTrackingError,
  LabelMismatch,
  CapExceeded,
  ScaleGuard,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Errors raised while reading a document. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Raised by trace replay; step is the 0-based index of the offending step.
class ReplayError : public Error {
 public:
  ReplayError(std::size_t step, const std::string& reason);
  std::size_t step() const noexcept { return step_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t step_;
  std::string reason_;
};

}  // namespace hybnet

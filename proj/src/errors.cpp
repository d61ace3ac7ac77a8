#include "hybnet/errors.hpp"

namespace hybnet {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::EmptyRestriction: return "EmptyRestriction";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::InvalidEdgeRef: return "InvalidEdgeRef";
    case Errc::NotACherry: return "NotACherry";
    case Errc::InvalidTree: return "InvalidTree";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::Disconnected: return "Disconnected";
    case Errc::TooSmall: return "TooSmall";
    case Errc::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case Errc::NotABlobEdge: return "NotABlobEdge";
    case Errc::NotPendantBlob: return "NotPendantBlob";
    case Errc::TooManyLeaves: return "TooManyLeaves";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NonBinary: return "NonBinary";
    case Errc::DegreeViolation: return "DegreeViolation";
    case Errc::TripleEdge: return "TripleEdge";
    case Errc::SchemaError: return "SchemaError";
    case Errc::GroundSetMismatch: return "GroundSetMismatch";
    case Errc::InapplicableStep: return "InapplicableStep";
    case Errc::ReplayError: return "ReplayError";
    case Errc::BadTerminal: return "BadTerminal";
    case Errc::NotATree: return "NotATree";
    case Errc::InvalidTrace: return "InvalidTrace";
    case Errc::ImageTrackingError: return "ImageTrackingError";
    case Errc::LabelMismatch: return "LabelMismatch";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ScaleGuard: return "ScaleGuard";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(Errc code, std::size_t line, std::size_t column, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

ReplayError::ReplayError(std::size_t step, const std::string& reason)
    : Error(Errc::ReplayError, "step " + std::to_string(step) + ": " + reason),
      step_(step),
      reason_(reason) {}

}  // namespace hybnet

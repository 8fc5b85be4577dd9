#include "elmatch/diagnostics.hpp"

#include <algorithm>

namespace elmatch {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSymbol:
      return "UnknownSymbol";
    case ErrorCode::DuplicateComponent:
      return "DuplicateComponent";
    case ErrorCode::DuplicateOfferName:
      return "DuplicateOfferName";
    case ErrorCode::NonComponentConjunct:
      return "NonComponentConjunct";
    case ErrorCode::ComponentRangeViolated:
      return "ComponentRangeViolated";
    case ErrorCode::NominalUnsupported:
      return "NominalUnsupported";
    case ErrorCode::NotSimpleDescription:
      return "NotSimpleDescription";
    case ErrorCode::PreconditionViolated:
      return "PreconditionViolated";
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
  }
  return "Error";
}

std::string format_diagnostic(const Diagnostic& d, const std::string& path) {
  std::string out;
  if (!path.empty()) {
    out += path;
    out += ':';
  }
  out += std::to_string(d.line);
  out += ':';
  out += std::to_string(d.column);
  out += d.severity == Severity::Error ? ": error: " : ": warning: ";
  out += d.message;
  if (!d.code.empty()) {
    out += " [";
    out += d.code;
    out += ']';
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

}  // namespace elmatch

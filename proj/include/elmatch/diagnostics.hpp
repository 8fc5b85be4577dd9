#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace elmatch {

enum class ErrorCode {
  UnknownSymbol,
  DuplicateComponent,
  DuplicateOfferName,
  NonComponentConjunct,
  ComponentRangeViolated,
  NominalUnsupported,
  NotSimpleDescription,
  PreconditionViolated,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

// Domain error for semantic operations. Parsing reports problems as
// Diagnostics instead; parse-adjacent code converts between the two.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class Severity { Error, Warning };

// One parser or input problem, anchored to a source position (1-based).
struct Diagnostic {
  Severity severity = Severity::Error;
  std::size_t line = 0;
  std::size_t column = 0;
  std::string code;  // short stable slug, e.g. "syntax", "unknown-symbol"
  std::string message;
};

std::string format_diagnostic(const Diagnostic& d, const std::string& path);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

}  // namespace elmatch

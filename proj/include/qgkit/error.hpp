#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qgkit/report.hpp"

namespace qgkit {

enum class ErrorCode {
  IndexOutOfRange,
  ProductDomainMismatch,
  InvalidStructure,
  NotAGroup,
  InvalidAction,
  NotSurjective,
  EmptyBase,
  CompositionMismatch,
  BaseMismatch,
  DomainMismatch,
  ActionInvalid,
  InvalidMatchedPair,
  ObjectMapNotIdentity,
  NotExact,
  InternalInconsistency,
  BoundExceeded,
  DimensionMismatch,
  PreconditionFailed,
  NotWhq,
  InvalidMorphism,
  SchemaError,
  RangeError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the toolkit. Validation failures carry the report
// that caused them so callers can print the witnesses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}
  Error(ErrorCode code, const std::string& message, StructureReport report)
      : Error(code, message) {
    report_ = std::move(report);
  }

  ErrorCode code() const noexcept { return code_; }
  const std::optional<StructureReport>& report() const noexcept { return report_; }

 private:
  ErrorCode code_;
  std::optional<StructureReport> report_;
};

}  // namespace qgkit

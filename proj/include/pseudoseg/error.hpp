#pragma once

#include <stdexcept>
#include <string>

namespace pseudoseg {

enum class ErrorCode {
  Structural,             // malformed cross-references in a family
  InvalidRotation,        // a rotation that is not a valid meeting pattern
  NotRealizable,          // Euler characteristic check failed
  AmbiguousPlacement,     // disconnected input without a containment forest
  GeneralPositionViolation,
  NonFiniteIntersection,
  TangencyUnresolvable,
  ArclengthTie,
  InvalidPolyline,
  InputContradictsLemma,  // input is encodable but contradicts a structural lemma
  Precondition,
  Parse,
  Schema,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pseudoseg

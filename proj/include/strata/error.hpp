#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strata {

enum class ErrorCode {
  OutOfCanonicalRange,
  WrongArity,
  EmptyProduct,
  SizeLimit,
  WeightOutOfRange,
  InvalidTuple,
  PosetMismatch,
  NotCoordinateInduced,
  NotFound,
  Ambiguous,
  InvalidInvariant,
  SyntaxError,
  Overflow,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type; `code()`
// identifies the contract violation, `what()` carries a readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace strata

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "strata/domain.hpp"
#include "strata/error.hpp"

namespace strata {

/// Parse failure at a byte offset of the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, std::string_view found);
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Grammar (whitespace is ignored between tokens):
///
///   domain := factor ( ("x" | "*") factor )*
///   factor := "I(" int "," int ")" | "II(" int ")" | "III(" int ")"
///           | "IV(" int ")" | "V" | "VI" | "Ball(" int ")"
///
/// Ball(n) is the unit ball of C^n, I(n,1). Throws SyntaxError, or the
/// range errors of make_factor.
Domain parse_domain(std::string_view text);

}  // namespace strata

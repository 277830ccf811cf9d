#include "strata/parse.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace strata {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += (i + 1 == items.size()) ? " or " : ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         std::string_view found)
    : Error(ErrorCode::SyntaxError,
            "syntax error at position " + std::to_string(position) + ": expected " + join(expected) +
                ", found " + (found.empty() ? std::string("end of input") : "'" + std::string(found) + "'")),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Domain domain() {
    std::vector<CartanFactor> factors{factor()};
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() == 'x' || peek() == '*') {
        ++pos_;
        factors.push_back(factor());
      } else {
        fail({"'x'", "'*'", "end of input"});
      }
    }
    return product(std::move(factors));
  }

 private:
  // Longest names first so "III" is not read as "I" followed by junk.
  static constexpr std::array<std::string_view, 7> kNames{"Ball", "III", "II", "IV", "VI", "I", "V"};

  CartanFactor factor() {
    skip_space();
    std::string_view name;
    for (std::string_view candidate : kNames) {
      if (text_.substr(pos_).starts_with(candidate)) {
        name = candidate;
        break;
      }
    }
    if (name.empty()) fail({"I(", "II(", "III(", "IV(", "V", "VI", "Ball("});
    pos_ += name.size();

    if (name == "V") return make_factor(Family::V, {});
    if (name == "VI") return make_factor(Family::VI, {});

    expect('(');
    const std::int64_t first = integer();
    if (name == "I") {
      expect(',');
      const std::int64_t second = integer();
      expect(')');
      return make_factor(Family::I, {first, second});
    }
    expect(')');
    if (name == "Ball") return make_factor(Family::I, {first, 1});
    return make_factor(*family_from_string(name), {first});
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail({"integer"}, start);
    std::int64_t value = 0;
    const auto digits = text_.substr(start, pos_ - start);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc()) {
      // Too large to represent; make_factor would reject it anyway.
      value = kMaxParameter + 1;
    }
    return value;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) { fail(std::move(expected), pos_); }
  [[noreturn]] void fail(std::vector<std::string> expected, std::size_t at) {
    std::size_t end = at;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) && end - at < 12) ++end;
    throw SyntaxError(at, std::move(expected), text_.substr(at, end - at));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Domain parse_domain(std::string_view text) { return Parser(text).domain(); }

}  // namespace strata

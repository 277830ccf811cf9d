#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace strata {

/// Cartan families of irreducible bounded symmetric domains. The declaration
/// order is the total order used for domain normal forms.
enum class Family : std::uint8_t { I, II, III, IV, V, VI };

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

/// Number of integer parameters a family takes (2 for I, 1 for II-IV, 0 for V/VI).
std::size_t arity(Family family);

/// Largest accepted value of any single parameter.
inline constexpr std::int64_t kMaxParameter = 1'000'000;

/// (rank, real dimension, Shilov-boundary dimension). Additive under products.
struct InvariantTriple {
  std::int64_t rank = 0;
  std::int64_t real_dim = 0;
  std::int64_t shilov_dim = 0;

  friend auto operator<=>(const InvariantTriple&, const InvariantTriple&) = default;
  InvariantTriple& operator+=(const InvariantTriple& other);
  friend InvariantTriple operator+(InvariantTriple a, const InvariantTriple& b) { return a += b; }
};

std::string to_string(const InvariantTriple& t);

/// An irreducible bounded symmetric domain in canonical form. Instances can
/// only be obtained through make_factor, so every value is within the
/// canonical parameter ranges:
///   I(p,q)   p >= q >= 1
///   II(n)    n >= 5   (even n = 2q is tube type, odd n = 2q+1 is not)
///   III(q)   q >= 2
///   IV(q)    q >= 5
///   V, VI
/// Lower values overlap with other families and are rejected.
class CartanFactor {
 public:
  Family family() const noexcept { return family_; }

  /// Parameters in canonical order; length equals arity(family()).
  std::span<const std::int64_t> params() const noexcept {
    return std::span<const std::int64_t>(params_.data(), arity(family_));
  }

  /// Ordered by family, then parameters lexicographically.
  friend auto operator<=>(const CartanFactor&, const CartanFactor&) = default;

 private:
  friend CartanFactor make_factor(Family, std::span<const std::int64_t>);
  CartanFactor(Family family, std::array<std::int64_t, 2> params)
      : family_(family), params_(params) {}

  Family family_;
  std::array<std::int64_t, 2> params_;  // unused slots are zero
};

/// Validates and canonicalizes. Family I parameters are reordered so p >= q.
/// Throws Error{WrongArity} or Error{OutOfCanonicalRange}.
CartanFactor make_factor(Family family, std::span<const std::int64_t> params);
CartanFactor make_factor(Family family, std::initializer_list<std::int64_t> params);

std::int64_t rank(const CartanFactor& f);
std::int64_t real_dim(const CartanFactor& f);
std::int64_t shilov_dim(const CartanFactor& f);
bool is_tube(const CartanFactor& f);
InvariantTriple invariant_triple(const CartanFactor& f);

/// "I(3,2)", "II(7)", "V".
std::string to_string(const CartanFactor& f);

namespace detail {
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace strata

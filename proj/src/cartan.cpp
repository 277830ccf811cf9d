#include "strata/cartan.hpp"

#include <algorithm>
#include <vector>

#include "strata/error.hpp"

namespace strata {

namespace detail {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in invariant arithmetic");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in invariant arithmetic");
  }
  return out;
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;

std::string_view to_string(Family family) {
  switch (family) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::V: return "V";
    case Family::VI: return "VI";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : {Family::I, Family::II, Family::III, Family::IV, Family::V, Family::VI}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::size_t arity(Family family) {
  switch (family) {
    case Family::I: return 2;
    case Family::II:
    case Family::III:
    case Family::IV: return 1;
    case Family::V:
    case Family::VI: return 0;
  }
  return 0;
}

InvariantTriple& InvariantTriple::operator+=(const InvariantTriple& other) {
  rank = checked_add(rank, other.rank);
  real_dim = checked_add(real_dim, other.real_dim);
  shilov_dim = checked_add(shilov_dim, other.shilov_dim);
  return *this;
}

std::string to_string(const InvariantTriple& t) {
  return "(" + std::to_string(t.rank) + "," + std::to_string(t.real_dim) + "," +
         std::to_string(t.shilov_dim) + ")";
}

namespace {

[[noreturn]] void out_of_range(Family family, std::span<const std::int64_t> params,
                               std::string_view range) {
  std::string shown(to_string(family));
  shown += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) shown += ",";
    shown += std::to_string(params[i]);
  }
  shown += ")";
  throw Error(ErrorCode::OutOfCanonicalRange,
              shown + " is outside the canonical range " + std::string(range));
}

}  // namespace

CartanFactor make_factor(Family family, std::span<const std::int64_t> params) {
  if (params.size() != arity(family)) {
    throw Error(ErrorCode::WrongArity, std::string(to_string(family)) + " takes " +
                                           std::to_string(arity(family)) + " parameter(s), got " +
                                           std::to_string(params.size()));
  }
  for (std::int64_t v : params) {
    if (v > kMaxParameter) out_of_range(family, params, "(parameters are bounded by 1000000)");
  }
  std::array<std::int64_t, 2> stored{0, 0};
  std::copy(params.begin(), params.end(), stored.begin());
  switch (family) {
    case Family::I:
      if (stored[0] < stored[1]) std::swap(stored[0], stored[1]);
      if (stored[1] < 1) out_of_range(family, params, "p >= q >= 1");
      break;
    case Family::II:
      if (stored[0] < 5) out_of_range(family, params, "II(2q) with q >= 3 or II(2q+1) with q >= 2");
      break;
    case Family::III:
      if (stored[0] < 2) out_of_range(family, params, "q >= 2");
      break;
    case Family::IV:
      if (stored[0] < 5) out_of_range(family, params, "q >= 5");
      break;
    case Family::V:
    case Family::VI:
      break;
  }
  return CartanFactor(family, stored);
}

CartanFactor make_factor(Family family, std::initializer_list<std::int64_t> params) {
  return make_factor(family, std::span<const std::int64_t>(params.begin(), params.size()));
}

std::int64_t rank(const CartanFactor& f) {
  const auto p = f.params();
  switch (f.family()) {
    case Family::I: return p[1];
    case Family::II: return p[0] / 2;
    case Family::III: return p[0];
    case Family::IV:
    case Family::V: return 2;
    case Family::VI: return 3;
  }
  return 0;
}

std::int64_t real_dim(const CartanFactor& f) {
  const auto p = f.params();
  switch (f.family()) {
    case Family::I: return checked_mul(2, checked_mul(p[0], p[1]));
    case Family::II: return checked_mul(p[0], p[0] - 1);  // n(n-1) covers both parities
    case Family::III: return checked_mul(p[0], p[0] + 1);
    case Family::IV: return checked_mul(2, p[0]);
    case Family::V: return 32;
    case Family::VI: return 54;
  }
  return 0;
}

bool is_tube(const CartanFactor& f) {
  const auto p = f.params();
  switch (f.family()) {
    case Family::I: return p[0] == p[1];
    case Family::II: return p[0] % 2 == 0;
    case Family::III:
    case Family::IV:
    case Family::VI: return true;
    case Family::V: return false;
  }
  return false;
}

std::int64_t shilov_dim(const CartanFactor& f) {
  if (is_tube(f)) return real_dim(f) / 2;
  const auto p = f.params();
  switch (f.family()) {
    case Family::I: {
      // 2pq - q^2
      const std::int64_t q = p[1];
      return checked_mul(2, checked_mul(p[0], q)) - checked_mul(q, q);
    }
    case Family::II: {
      // n = 2q+1: 2q^2 + 3q
      const std::int64_t q = p[0] / 2;
      return checked_add(checked_mul(2, checked_mul(q, q)), checked_mul(3, q));
    }
    case Family::V: return 24;
    default: break;
  }
  return 0;
}

InvariantTriple invariant_triple(const CartanFactor& f) {
  return {rank(f), real_dim(f), shilov_dim(f)};
}

std::string to_string(const CartanFactor& f) {
  std::string out(to_string(f.family()));
  const auto p = f.params();
  if (p.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  out += ")";
  return out;
}

}  // namespace strata

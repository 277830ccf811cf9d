#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "strata/cartan.hpp"

namespace strata {

/// A possibly reducible bounded symmetric domain D = D_1 x ... x D_s,
/// stored as a non-empty multiset of Cartan factors. The factor list is kept
/// sorted by CartanFactor's ordering (family I < II < ... < VI, then
/// parameters lexicographically); that sorted list is the normal form, and two
/// domains are isomorphic exactly when their normal forms agree.
class Domain {
 public:
  const std::vector<CartanFactor>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  const CartanFactor& operator[](std::size_t j) const { return factors_[j]; }

  friend bool operator==(const Domain&, const Domain&) = default;
  friend auto operator<=>(const Domain&, const Domain&) = default;

 private:
  friend Domain product(std::vector<CartanFactor> factors);
  explicit Domain(std::vector<CartanFactor> sorted) : factors_(std::move(sorted)) {}

  std::vector<CartanFactor> factors_;
};

/// Throws Error{EmptyProduct} on an empty list.
Domain product(std::vector<CartanFactor> factors);
Domain product(const Domain& a, const Domain& b);

bool is_isomorphic(const Domain& a, const Domain& b);

/// Componentwise sum of the factor triples.
InvariantTriple invariants(const Domain& d);

/// Factor ranks in normal-form coordinate order.
std::vector<std::int64_t> ranks(const Domain& d);

struct SymBlock {
  CartanFactor factor;
  std::int64_t multiplicity = 0;

  friend bool operator==(const SymBlock&, const SymBlock&) = default;
};

/// The group sym_D of permutations of the factors that only move a factor
/// onto an isomorphic one: a product of full symmetric groups, one per block
/// of equal factors.
struct SymGroupDescriptor {
  std::vector<SymBlock> blocks;
  std::uint64_t order = 1;  // product of multiplicity!
};

SymGroupDescriptor sym_group(const Domain& d);

/// "I(1,1) x I(1,1)"
std::string to_string(const Domain& d);

}  // namespace strata

#include "strata/domain.hpp"

#include <algorithm>

#include "strata/error.hpp"

namespace strata {

Domain product(std::vector<CartanFactor> factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::EmptyProduct, "a domain needs at least one factor");
  }
  std::sort(factors.begin(), factors.end());
  return Domain(std::move(factors));
}

Domain product(const Domain& a, const Domain& b) {
  std::vector<CartanFactor> all = a.factors();
  all.insert(all.end(), b.factors().begin(), b.factors().end());
  return product(std::move(all));
}

bool is_isomorphic(const Domain& a, const Domain& b) { return a == b; }

InvariantTriple invariants(const Domain& d) {
  InvariantTriple sum;
  for (const auto& f : d.factors()) sum += invariant_triple(f);
  return sum;
}

std::vector<std::int64_t> ranks(const Domain& d) {
  std::vector<std::int64_t> out;
  out.reserve(d.size());
  for (const auto& f : d.factors()) out.push_back(rank(f));
  return out;
}

SymGroupDescriptor sym_group(const Domain& d) {
  SymGroupDescriptor sym;
  for (const auto& f : d.factors()) {
    if (!sym.blocks.empty() && sym.blocks.back().factor == f) {
      ++sym.blocks.back().multiplicity;
    } else {
      sym.blocks.push_back({f, 1});
    }
  }
  for (const auto& block : sym.blocks) {
    for (std::int64_t k = 2; k <= block.multiplicity; ++k) {
      std::uint64_t next = 0;
      if (__builtin_mul_overflow(sym.order, static_cast<std::uint64_t>(k), &next)) {
        throw Error(ErrorCode::Overflow, "sym_D order does not fit in 64 bits");
      }
      sym.order = next;
    }
  }
  return sym;
}

std::string to_string(const Domain& d) {
  std::string out;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j) out += " x ";
    out += to_string(d[j]);
  }
  return out;
}

}  // namespace strata

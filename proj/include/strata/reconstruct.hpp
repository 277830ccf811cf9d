#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "strata/domain.hpp"
#include "strata/error.hpp"
#include "strata/spectrum.hpp"

namespace strata {

/// Raised by from_invariants when several canonical factors share a triple.
class AmbiguousInvariant : public Error {
 public:
  AmbiguousInvariant(const InvariantTriple& t, std::vector<CartanFactor> matches);
  const std::vector<CartanFactor>& matches() const noexcept { return matches_; }

 private:
  std::vector<CartanFactor> matches_;
};

/// Every canonical factor whose invariant triple equals t, found by solving
/// each family's closed forms in integers. Sorted.
std::vector<CartanFactor> invariant_matches(const InvariantTriple& t);

/// The unique canonical factor with invariant triple t.
/// Throws Error{InvalidInvariant} for non-positive components, Error{NotFound},
/// or AmbiguousInvariant (code Ambiguous).
CartanFactor from_invariants(const InvariantTriple& t);

/// Throws as from_invariants per element, Error{EmptyProduct} on empty input.
Domain reconstruct_product(std::span<const InvariantTriple> triples);

/// Per-coordinate factor triples read off the spectrum labels, sorted.
std::vector<InvariantTriple> factor_data_of_spectrum(const StratumPoset& p);

/// All canonical factors with every parameter <= max_param, plus V and VI,
/// in ascending CartanFactor order.
std::vector<CartanFactor> enumerate_factors(std::int64_t max_param);

struct Collision {
  InvariantTriple triple;
  std::vector<CartanFactor> factors;

  friend bool operator==(const Collision&, const Collision&) = default;
};

/// Two or more tube-type factors sharing (rank, real_dim).
struct TubeCollision {
  std::int64_t rank = 0;
  std::int64_t real_dim = 0;
  std::vector<CartanFactor> factors;

  friend bool operator==(const TubeCollision&, const TubeCollision&) = default;
};

struct ReconstructionReport {
  std::int64_t max_param = 0;
  std::uint64_t scanned_count = 0;
  std::vector<Collision> collisions;
  std::vector<TubeCollision> tube_collisions;
  std::vector<CartanFactor> round_trip_failures;
  /// Factors where is_tube disagrees with 2 * shilov_dim == real_dim.
  std::vector<CartanFactor> tube_violations;
  std::int64_t elapsed_ms = 0;

  bool ok() const noexcept {
    return collisions.empty() && tube_collisions.empty() && round_trip_failures.empty() &&
           tube_violations.empty();
  }
  friend bool operator==(const ReconstructionReport&, const ReconstructionReport&) = default;
};

/// Scans enumerate_factors(max_param): injectivity of invariant_triple,
/// injectivity of (rank, real_dim) on tube factors, the tube criterion in both
/// directions, and from_invariants(invariant_triple(f)) == f.
/// The default runs under OpenMP; the serial version is the reference.
/// Throws Error{InvalidInvariant} when max_param < 1.
ReconstructionReport verify_complete_invariant(std::int64_t max_param);
ReconstructionReport verify_complete_invariant_serial(std::int64_t max_param);

/// Stratum-level checks for one domain; returns a description of every
/// violated property (empty when all hold):
///   solvable length equals rank; each weight ideal is the union of its
///   principal summands, all down-closed; label-respecting automorphisms
///   number |sym_D|, are coordinate-induced by label-preserving permutations,
///   preserve every weight ideal and carry each bullet ideal to the bullet of
///   the permuted coordinate; the spectrum labels reconstruct the domain.
std::vector<std::string> check_spectrum(const Domain& d, const SpectrumLimits& limits = {});

/// Canonical factors of rank <= max_rank and real dimension <= max_dim.
std::vector<CartanFactor> spectrum_pool(std::int64_t max_rank, std::int64_t max_dim);

/// All multisets of 1..max_factors factors drawn from pool, as domains, in
/// ascending order.
std::vector<Domain> domains_over(std::span<const CartanFactor> pool, std::size_t max_factors);

struct SpectrumSweepReport {
  std::uint64_t domains_checked = 0;
  std::uint64_t automorphisms_checked = 0;
  std::vector<std::string> violations;
  std::int64_t elapsed_ms = 0;

  bool ok() const noexcept { return violations.empty(); }
};

/// check_spectrum over domains_over(pool, max_factors), in parallel.
SpectrumSweepReport verify_spectrum(std::span<const CartanFactor> pool, std::size_t max_factors,
                                    const SpectrumLimits& limits = {});

}  // namespace strata

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "strata/domain.hpp"

namespace strata {

/// Multi-index (i_1, ..., i_s) with 0 <= i_j <= r_j, in the coordinate order
/// of the domain's normal form.
using Stratum = std::vector<std::int64_t>;

/// Layer descriptor of one coordinate of a stratum: the factor's invariants
/// and the filtration index inside that factor.
struct CoordinateLabel {
  InvariantTriple factor;
  std::int64_t index = 0;

  friend auto operator<=>(const CoordinateLabel&, const CoordinateLabel&) = default;
};

struct SpectrumLimits {
  std::size_t max_strata = 1'000'000;       // build_spectrum
  std::size_t max_brute_force = 10'000;     // poset_automorphisms
};

/// The primitive-ideal spectrum of the Toeplitz algebra of a domain, at
/// stratum granularity: a product of chains [0, r_1] x ... x [0, r_s] ordered
/// componentwise and graded by weight |i| = sum of i_j.
///
/// Strata are numbered by mixed radix with the first coordinate most
/// significant, so ascending index is ascending lexicographic order. The
/// bottom (0,...,0) is index 0 and the top (r_1,...,r_s) is size() - 1.
class StratumPoset {
 public:
  const Domain& domain() const noexcept { return domain_; }
  std::span<const std::int64_t> ranks() const noexcept { return ranks_; }
  std::size_t coordinates() const noexcept { return ranks_.size(); }
  std::size_t size() const noexcept { return weights_.size(); }

  Stratum stratum(std::size_t index) const;
  std::int64_t coordinate(std::size_t index, std::size_t j) const {
    return coords_[index * ranks_.size() + j];
  }
  /// Throws Error{InvalidTuple} when the tuple is not a stratum of this poset.
  std::size_t index_of(std::span<const std::int64_t> tuple) const;

  std::int64_t weight(std::size_t index) const { return weights_[index]; }
  std::int64_t max_weight() const noexcept { return max_weight_; }

  bool leq(std::size_t a, std::size_t b) const;

  /// Strata covered by / covering `index` (one coordinate changed by one).
  std::vector<std::size_t> lower_covers(std::size_t index) const;
  std::vector<std::size_t> upper_covers(std::size_t index) const;
  /// All covering pairs (lower, upper), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  std::vector<CoordinateLabel> label(std::size_t index) const;
  /// The label as a sorted multiset; automorphisms that respect labels
  /// preserve it.
  std::vector<CoordinateLabel> label_multiset(std::size_t index) const;

  /// Strata of weight k in descending lexicographic order, so the bullet
  /// (k,0,...,0) comes first. Empty when k is out of range.
  std::vector<std::size_t> strata_of_weight(std::int64_t k) const;

 private:
  friend StratumPoset build_spectrum(const Domain&, const SpectrumLimits&);
  explicit StratumPoset(Domain d) : domain_(std::move(d)) {}

  Domain domain_;
  std::vector<std::int64_t> ranks_;
  std::vector<InvariantTriple> factor_triples_;
  std::vector<std::size_t> strides_;
  std::vector<std::int64_t> coords_;   // size() * coordinates(), row-major
  std::vector<std::int64_t> weights_;
  std::int64_t max_weight_ = 0;
};

/// An ideal of the Toeplitz algebra, modelled as a down-closed set of strata
/// (ideals correspond to open subsets of the spectrum).
class IdealDownSet {
 public:
  const Domain& domain() const noexcept { return domain_; }
  bool contains(std::size_t index) const { return members_[index]; }
  std::size_t size() const;
  /// Member indices in ascending order.
  std::vector<std::size_t> indices() const;
  std::vector<Stratum> members(const StratumPoset& p) const;

  friend bool operator==(const IdealDownSet&, const IdealDownSet&) = default;

 private:
  friend class DownSetBuilder;
  IdealDownSet(Domain domain, std::vector<bool> members)
      : domain_(std::move(domain)), members_(std::move(members)) {}

  Domain domain_;
  std::vector<bool> members_;
};

bool is_down_closed(const StratumPoset& p, const IdealDownSet& s);

/// Throws Error{SizeLimit} if the number of strata exceeds limits.max_strata.
StratumPoset build_spectrum(const Domain& d, const SpectrumLimits& limits = {});

/// Length of the solvable filtration: the top weight, sum of r_j.
std::int64_t solvable_length(const StratumPoset& p);

/// All strata of weight <= k. Throws Error{WeightOutOfRange}.
IdealDownSet ideal_of_weight(const StratumPoset& p, std::int64_t k);

/// {j : j <= i componentwise}. Throws Error{InvalidTuple}.
IdealDownSet principal_downset(const StratumPoset& p, std::span<const std::int64_t> i);
IdealDownSet principal_downset(const StratumPoset& p, std::size_t index);

/// The summands I_i, |i| = k, of the weight-k ideal, in layer_components
/// order. Their union is checked against ideal_of_weight(p, k).
std::vector<IdealDownSet> decompose_weight_ideal(const StratumPoset& p, std::int64_t k);

/// Throws Error{PosetMismatch} when the operands live on different posets.
IdealDownSet ideal_union(const IdealDownSet& a, const IdealDownSet& b);

/// The weight-k tuples; each indexes one connected component of the k-th
/// layer. Throws Error{WeightOutOfRange}.
std::vector<Stratum> layer_components(const StratumPoset& p, std::int64_t k);

/// The bullet tuple with k in coordinate j and zeros elsewhere.
/// Throws Error{InvalidTuple} if j or k is out of range.
Stratum bullet(const StratumPoset& p, std::size_t j, std::int64_t k);

struct ChainStats {
  std::int64_t length = 0;   // common length of every maximal bottom-to-i chain
  std::uint64_t count = 0;   // number of such chains (a multinomial coefficient)
};

/// Throws Error{InvalidTuple}; Error{Overflow} if the count exceeds 64 bits.
ChainStats maximal_chain_lengths(const StratumPoset& p, std::span<const std::int64_t> i);

/// A permutation of the strata that preserves the order. image[x] is the
/// stratum x is sent to.
struct PosetAutomorphism {
  std::vector<std::size_t> image;

  friend auto operator<=>(const PosetAutomorphism&, const PosetAutomorphism&) = default;
};

bool is_order_automorphism(const StratumPoset& p, const PosetAutomorphism& a);
IdealDownSet apply(const StratumPoset& p, const PosetAutomorphism& a, const IdealDownSet& s);

struct AutomorphismOptions {
  bool respect_labels = true;
  std::size_t max_strata = SpectrumLimits{}.max_brute_force;
};

/// Every order automorphism (optionally restricted to label-preserving
/// ones), sorted ascending so the identity comes first. Backtracking search
/// over candidates of equal weight, label multiset and cover degrees.
/// Runs in parallel under OpenMP; results are identical to the serial
/// version. Throws Error{SizeLimit}.
std::vector<PosetAutomorphism> poset_automorphisms(const StratumPoset& p,
                                                   const AutomorphismOptions& options = {});
std::vector<PosetAutomorphism> poset_automorphisms_serial(const StratumPoset& p,
                                                          const AutomorphismOptions& options = {});

/// A permutation sigma of the coordinates with a(i)_{sigma(j)} = i_j for all
/// strata i. Entries are 0-based. Throws Error{NotCoordinateInduced}.
std::vector<std::size_t> factor_permutation_of(const StratumPoset& p, const PosetAutomorphism& a);

/// 1-based cycle notation, "()" for the identity: {1,0,2} -> "(1 2)".
std::string cycle_notation(std::span<const std::size_t> permutation);

/// "1,0" (no parentheses), as used for DOT node identifiers.
std::string tuple_key(std::span<const std::int64_t> tuple);
/// "(1,0)"
std::string to_string(std::span<const std::int64_t> tuple);

}  // namespace strata

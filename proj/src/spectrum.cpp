#include "strata/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "strata/error.hpp"

namespace strata {

class DownSetBuilder {
 public:
  static IdealDownSet make(const StratumPoset& p, std::vector<bool> members) {
    return IdealDownSet(p.domain(), std::move(members));
  }
  static IdealDownSet make(const Domain& d, std::vector<bool> members) {
    return IdealDownSet(d, std::move(members));
  }
  static const std::vector<bool>& mask(const IdealDownSet& s) { return s.members_; }
};

// ---------------------------------------------------------------------------
// StratumPoset

StratumPoset build_spectrum(const Domain& d, const SpectrumLimits& limits) {
  StratumPoset p(d);
  const std::size_t s = d.size();
  p.ranks_ = ranks(d);
  for (const auto& f : d.factors()) p.factor_triples_.push_back(invariant_triple(f));

  std::size_t total = 1;
  for (std::int64_t r : p.ranks_) {
    const auto radix = static_cast<std::size_t>(r + 1);
    if (total > limits.max_strata / radix) {
      throw Error(ErrorCode::SizeLimit, "spectrum of " + to_string(d) + " exceeds " +
                                            std::to_string(limits.max_strata) + " strata");
    }
    total *= radix;
  }

  p.strides_.assign(s, 1);
  for (std::size_t j = s; j-- > 1;) {
    p.strides_[j - 1] = p.strides_[j] * static_cast<std::size_t>(p.ranks_[j] + 1);
  }

  p.coords_.resize(total * s);
  p.weights_.resize(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::int64_t w = 0;
    for (std::size_t j = 0; j < s; ++j) {
      const auto c = static_cast<std::int64_t>((idx / p.strides_[j]) %
                                               static_cast<std::size_t>(p.ranks_[j] + 1));
      p.coords_[idx * s + j] = c;
      w += c;
    }
    p.weights_[idx] = w;
  }
  p.max_weight_ = p.weights_.back();
  return p;
}

Stratum StratumPoset::stratum(std::size_t index) const {
  const std::size_t s = ranks_.size();
  return Stratum(coords_.begin() + static_cast<std::ptrdiff_t>(index * s),
                 coords_.begin() + static_cast<std::ptrdiff_t>((index + 1) * s));
}

std::size_t StratumPoset::index_of(std::span<const std::int64_t> tuple) const {
  if (tuple.size() != ranks_.size()) {
    throw Error(ErrorCode::InvalidTuple, "tuple " + to_string(tuple) + " has " +
                                             std::to_string(tuple.size()) + " coordinates, expected " +
                                             std::to_string(ranks_.size()));
  }
  std::size_t idx = 0;
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    if (tuple[j] < 0 || tuple[j] > ranks_[j]) {
      throw Error(ErrorCode::InvalidTuple,
                  "tuple " + to_string(tuple) + " is not a stratum: coordinate " +
                      std::to_string(j + 1) + " must lie in [0," + std::to_string(ranks_[j]) + "]");
    }
    idx += static_cast<std::size_t>(tuple[j]) * strides_[j];
  }
  return idx;
}

bool StratumPoset::leq(std::size_t a, std::size_t b) const {
  const std::size_t s = ranks_.size();
  for (std::size_t j = 0; j < s; ++j) {
    if (coords_[a * s + j] > coords_[b * s + j]) return false;
  }
  return true;
}

std::vector<std::size_t> StratumPoset::lower_covers(std::size_t index) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ranks_.size(); ++j) {
    if (coordinate(index, j) > 0) out.push_back(index - strides_[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> StratumPoset::upper_covers(std::size_t index) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ranks_.size(); ++j) {
    if (coordinate(index, j) < ranks_[j]) out.push_back(index + strides_[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> StratumPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y : upper_covers(x)) out.emplace_back(x, y);
  }
  return out;
}

std::vector<CoordinateLabel> StratumPoset::label(std::size_t index) const {
  std::vector<CoordinateLabel> out;
  out.reserve(ranks_.size());
  for (std::size_t j = 0; j < ranks_.size(); ++j) {
    out.push_back({factor_triples_[j], coordinate(index, j)});
  }
  return out;
}

std::vector<CoordinateLabel> StratumPoset::label_multiset(std::size_t index) const {
  auto out = label(index);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> StratumPoset::strata_of_weight(std::int64_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t idx = size(); idx-- > 0;) {
    if (weights_[idx] == k) out.push_back(idx);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Down-sets

std::size_t IdealDownSet::size() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<std::size_t> IdealDownSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i]) out.push_back(i);
  }
  return out;
}

std::vector<Stratum> IdealDownSet::members(const StratumPoset& p) const {
  std::vector<Stratum> out;
  for (std::size_t i : indices()) out.push_back(p.stratum(i));
  return out;
}

bool is_down_closed(const StratumPoset& p, const IdealDownSet& s) {
  const auto& mask = DownSetBuilder::mask(s);
  if (mask.size() != p.size() || s.domain() != p.domain()) return false;
  // Down-closure of a finite poset is equivalent to closure under lower covers.
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!mask[x]) continue;
    for (std::size_t y : p.lower_covers(x)) {
      if (!mask[y]) return false;
    }
  }
  return true;
}

std::int64_t solvable_length(const StratumPoset& p) { return p.max_weight(); }

namespace {

void check_weight(const StratumPoset& p, std::int64_t k) {
  if (k < 0 || k > p.max_weight()) {
    throw Error(ErrorCode::WeightOutOfRange, "weight " + std::to_string(k) +
                                                 " is outside [0," +
                                                 std::to_string(p.max_weight()) + "]");
  }
}

void check_same_poset(const IdealDownSet& a, const IdealDownSet& b) {
  if (a.domain() != b.domain() ||
      DownSetBuilder::mask(a).size() != DownSetBuilder::mask(b).size()) {
    throw Error(ErrorCode::PosetMismatch, "ideals of " + to_string(a.domain()) + " and " +
                                              to_string(b.domain()) + " cannot be combined");
  }
}

}  // namespace

IdealDownSet ideal_of_weight(const StratumPoset& p, std::int64_t k) {
  check_weight(p, k);
  std::vector<bool> mask(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) mask[x] = p.weight(x) <= k;
  return DownSetBuilder::make(p, std::move(mask));
}

IdealDownSet principal_downset(const StratumPoset& p, std::size_t index) {
  if (index >= p.size()) {
    throw Error(ErrorCode::InvalidTuple, "stratum index " + std::to_string(index) + " out of range");
  }
  std::vector<bool> mask(p.size());
  for (std::size_t x = 0; x <= index; ++x) mask[x] = p.leq(x, index);
  return DownSetBuilder::make(p, std::move(mask));
}

IdealDownSet principal_downset(const StratumPoset& p, std::span<const std::int64_t> i) {
  return principal_downset(p, p.index_of(i));
}

IdealDownSet ideal_union(const IdealDownSet& a, const IdealDownSet& b) {
  check_same_poset(a, b);
  const auto& ma = DownSetBuilder::mask(a);
  const auto& mb = DownSetBuilder::mask(b);
  std::vector<bool> mask(ma.size());
  for (std::size_t x = 0; x < mask.size(); ++x) mask[x] = ma[x] || mb[x];
  return DownSetBuilder::make(a.domain(), std::move(mask));
}

std::vector<IdealDownSet> decompose_weight_ideal(const StratumPoset& p, std::int64_t k) {
  check_weight(p, k);
  std::vector<IdealDownSet> summands;
  for (std::size_t x : p.strata_of_weight(k)) summands.push_back(principal_downset(p, x));

  IdealDownSet sum = summands.front();
  for (std::size_t t = 1; t < summands.size(); ++t) sum = ideal_union(sum, summands[t]);
  if (sum != ideal_of_weight(p, k)) {
    throw std::logic_error("weight-" + std::to_string(k) + " ideal of " + to_string(p.domain()) +
                           " is not the sum of its principal summands");
  }
  return summands;
}

std::vector<Stratum> layer_components(const StratumPoset& p, std::int64_t k) {
  check_weight(p, k);
  std::vector<Stratum> out;
  for (std::size_t x : p.strata_of_weight(k)) out.push_back(p.stratum(x));
  return out;
}

Stratum bullet(const StratumPoset& p, std::size_t j, std::int64_t k) {
  if (j >= p.coordinates() || k < 0 || k > p.ranks()[j]) {
    throw Error(ErrorCode::InvalidTuple, "no bullet with value " + std::to_string(k) +
                                             " in coordinate " + std::to_string(j + 1));
  }
  Stratum out(p.coordinates(), 0);
  out[j] = k;
  return out;
}

ChainStats maximal_chain_lengths(const StratumPoset& p, std::span<const std::int64_t> i) {
  const std::size_t idx = p.index_of(i);
  ChainStats stats;
  stats.length = p.weight(idx);
  // |i|! / prod(i_j!) built as a product of binomials C(i_1 + ... + i_j, i_j).
  // Each step multiplies by (prefix + t) / t; dividing out gcd(count, t)
  // first keeps the arithmetic exact in 64 bits.
  std::uint64_t count = 1;
  std::uint64_t prefix = 0;
  for (std::int64_t part : i) {
    for (std::uint64_t t = 1; t <= static_cast<std::uint64_t>(part); ++t) {
      const std::uint64_t g = std::gcd(count, t);
      const std::uint64_t factor = (prefix + t) / (t / g);
      if (__builtin_mul_overflow(count / g, factor, &count)) {
        throw Error(ErrorCode::Overflow, "chain count of " + to_string(i) + " exceeds 64 bits");
      }
    }
    prefix += static_cast<std::uint64_t>(part);
  }
  stats.count = count;
  return stats;
}

// ---------------------------------------------------------------------------
// Automorphisms

bool is_order_automorphism(const StratumPoset& p, const PosetAutomorphism& a) {
  const std::size_t n = p.size();
  if (a.image.size() != n) return false;
  std::vector<bool> hit(n);
  for (std::size_t y : a.image) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  // A bijection of a finite poset that preserves covers is an automorphism.
  for (const auto& [x, y] : p.covers()) {
    const std::size_t fx = a.image[x];
    const std::size_t fy = a.image[y];
    if (!(p.leq(fx, fy) && p.weight(fy) == p.weight(fx) + 1)) return false;
  }
  return true;
}

IdealDownSet apply(const StratumPoset& p, const PosetAutomorphism& a, const IdealDownSet& s) {
  if (s.domain() != p.domain()) {
    throw Error(ErrorCode::PosetMismatch, "ideal does not belong to this poset");
  }
  std::vector<bool> mask(p.size());
  for (std::size_t x : s.indices()) mask[a.image[x]] = true;
  return DownSetBuilder::make(p, std::move(mask));
}

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

// Precomputed search data. Strata are visited by ascending weight, so every
// lower cover of the current stratum is already assigned when it is reached.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const StratumPoset& p, const AutomorphismOptions& options) : p_(p) {
    if (p.size() > options.max_strata) {
      throw Error(ErrorCode::SizeLimit,
                  "automorphism search on " + std::to_string(p.size()) +
                      " strata exceeds the brute-force bound of " + std::to_string(options.max_strata));
    }
    const std::size_t n = p.size();
    order_.resize(n);
    for (std::size_t x = 0; x < n; ++x) order_[x] = x;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return p.weight(a) < p.weight(b); });

    lower_.resize(n);
    for (std::size_t x = 0; x < n; ++x) lower_[x] = p.lower_covers(x);

    // Candidate classes: strata can only be exchanged within a class.
    using Key = std::tuple<std::int64_t, std::size_t, std::size_t, std::vector<CoordinateLabel>>;
    std::map<Key, std::size_t> class_ids;
    class_of_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      Key key{p.weight(x), lower_[x].size(), p.upper_covers(x).size(),
              options.respect_labels ? p.label_multiset(x) : std::vector<CoordinateLabel>{}};
      auto [it, inserted] = class_ids.try_emplace(std::move(key), class_ids.size());
      class_of_[x] = it->second;
    }
    members_.resize(class_ids.size());
    for (std::size_t x = 0; x < n; ++x) members_[class_of_[x]].push_back(x);
  }

  struct State {
    std::vector<std::size_t> image;
    std::vector<bool> used;
    std::size_t depth = 0;
  };

  State initial() const {
    return State{std::vector<std::size_t>(p_.size(), kUnassigned), std::vector<bool>(p_.size()), 0};
  }

  std::vector<std::size_t> candidates(const State& st) const {
    std::vector<std::size_t> out;
    const std::size_t x = order_[st.depth];
    for (std::size_t y : members_[class_of_[x]]) {
      if (st.used[y]) continue;
      bool ok = true;
      for (std::size_t z : lower_[x]) {
        const std::size_t fz = st.image[z];
        if (!(p_.weight(fz) + 1 == p_.weight(y) && p_.leq(fz, y))) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(y);
    }
    return out;
  }

  void assign(State& st, std::size_t y) const {
    st.image[order_[st.depth]] = y;
    st.used[y] = true;
    ++st.depth;
  }

  void unassign(State& st) const {
    --st.depth;
    const std::size_t x = order_[st.depth];
    st.used[st.image[x]] = false;
    st.image[x] = kUnassigned;
  }

  bool complete(const State& st) const { return st.depth == p_.size(); }

  void run(State& st, std::vector<PosetAutomorphism>& out) const {
    if (complete(st)) {
      out.push_back({st.image});
      return;
    }
    for (std::size_t y : candidates(st)) {
      assign(st, y);
      run(st, out);
      unassign(st);
    }
  }

 private:
  const StratumPoset& p_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> members_;
};

}  // namespace

std::vector<PosetAutomorphism> poset_automorphisms_serial(const StratumPoset& p,
                                                          const AutomorphismOptions& options) {
  AutomorphismSearch search(p, options);
  auto st = search.initial();
  std::vector<PosetAutomorphism> out;
  search.run(st, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PosetAutomorphism> poset_automorphisms(const StratumPoset& p,
                                                   const AutomorphismOptions& options) {
  AutomorphismSearch search(p, options);

  // Expand the search tree breadth-first until there are enough independent
  // prefixes to hand out, then finish each prefix depth-first.
  std::size_t want = 64;
#ifdef _OPENMP
  want = std::max<std::size_t>(want, 8 * static_cast<std::size_t>(omp_get_max_threads()));
#endif
  std::vector<AutomorphismSearch::State> frontier{search.initial()};
  std::vector<PosetAutomorphism> finished;
  while (!frontier.empty() && frontier.size() < want) {
    std::vector<AutomorphismSearch::State> next;
    for (auto& st : frontier) {
      if (search.complete(st)) {
        finished.push_back({st.image});
        continue;
      }
      for (std::size_t y : search.candidates(st)) {
        auto child = st;
        search.assign(child, y);
        next.push_back(std::move(child));
      }
    }
    if (next.empty()) {
      frontier.clear();
      break;
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<PosetAutomorphism>> partial(frontier.size());
  const auto tasks = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t t = 0; t < tasks; ++t) {
    search.run(frontier[static_cast<std::size_t>(t)], partial[static_cast<std::size_t>(t)]);
  }
  for (auto& chunk : partial) {
    finished.insert(finished.end(), std::make_move_iterator(chunk.begin()),
                    std::make_move_iterator(chunk.end()));
  }
  std::sort(finished.begin(), finished.end());
  return finished;
}

std::vector<std::size_t> factor_permutation_of(const StratumPoset& p, const PosetAutomorphism& a) {
  const std::size_t s = p.coordinates();
  auto not_induced = [&](const std::string& why) {
    return Error(ErrorCode::NotCoordinateInduced, "automorphism of the spectrum of " +
                                                      to_string(p.domain()) +
                                                      " is not a coordinate permutation: " + why);
  };
  if (a.image.size() != p.size()) throw not_induced("wrong number of strata");

  // The atom bullet(j, 1) must land on some atom bullet(l, 1); that fixes sigma(j) = l.
  std::vector<std::size_t> sigma(s, kUnassigned);
  std::vector<bool> taken(s);
  for (std::size_t j = 0; j < s; ++j) {
    const Stratum target = p.stratum(a.image[p.index_of(bullet(p, j, 1))]);
    std::size_t l = kUnassigned;
    for (std::size_t c = 0; c < s; ++c) {
      if (target[c] == 1 && std::count(target.begin(), target.end(), 0) ==
                                static_cast<std::ptrdiff_t>(s - 1)) {
        l = c;
      }
    }
    if (l == kUnassigned || taken[l] || p.ranks()[l] != p.ranks()[j]) {
      throw not_induced("atom " + to_string(bullet(p, j, 1)) + " is not sent to a matching atom");
    }
    sigma[j] = l;
    taken[l] = true;
  }

  Stratum expected(s);
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t j = 0; j < s; ++j) expected[sigma[j]] = p.coordinate(x, j);
    if (a.image[x] != p.index_of(expected)) {
      throw not_induced("stratum " + to_string(p.stratum(x)) + " breaks the induced permutation");
    }
  }
  return sigma;
}

std::string cycle_notation(std::span<const std::size_t> permutation) {
  std::string out;
  std::vector<bool> seen(permutation.size());
  for (std::size_t start = 0; start < permutation.size(); ++start) {
    if (seen[start] || permutation[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = permutation[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string tuple_key(std::span<const std::int64_t> tuple) {
  std::string out;
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(tuple[j]);
  }
  return out;
}

std::string to_string(std::span<const std::int64_t> tuple) { return "(" + tuple_key(tuple) + ")"; }

}  // namespace strata

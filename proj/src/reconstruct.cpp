#include "strata/reconstruct.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <utility>

#include "strata/error.hpp"

namespace strata {

AmbiguousInvariant::AmbiguousInvariant(const InvariantTriple& t, std::vector<CartanFactor> matches)
    : Error(ErrorCode::Ambiguous,
            [&] {
              std::string msg = "invariants " + to_string(t) + " match several factors:";
              for (const auto& f : matches) msg += " " + to_string(f);
              return msg;
            }()),
      matches_(std::move(matches)) {}

namespace {

std::optional<CartanFactor> try_factor(Family family, std::initializer_list<std::int64_t> params) {
  try {
    return make_factor(family, params);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<CartanFactor> invariant_matches(const InvariantTriple& t) {
  std::vector<CartanFactor> out;
  if (t.rank < 1 || t.real_dim < 1 || t.shilov_dim < 1) return out;

  // One candidate per closed form; each is confirmed against the forward map.
  std::vector<std::optional<CartanFactor>> candidates;
  const std::int64_t r = t.rank;
  if (r <= kMaxParameter) {
    if (t.real_dim % (2 * r) == 0) candidates.push_back(try_factor(Family::I, {t.real_dim / (2 * r), r}));
    if (r <= kMaxParameter / 2) {
      candidates.push_back(try_factor(Family::II, {2 * r}));
      candidates.push_back(try_factor(Family::II, {2 * r + 1}));
    }
    candidates.push_back(try_factor(Family::III, {r}));
  }
  if (r == 2 && t.real_dim % 2 == 0) candidates.push_back(try_factor(Family::IV, {t.real_dim / 2}));
  candidates.push_back(make_factor(Family::V, {}));
  candidates.push_back(make_factor(Family::VI, {}));

  for (const auto& c : candidates) {
    if (c && invariant_triple(*c) == t) out.push_back(*c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CartanFactor from_invariants(const InvariantTriple& t) {
  if (t.rank < 1 || t.real_dim < 1 || t.shilov_dim < 1) {
    throw Error(ErrorCode::InvalidInvariant,
                "invariants " + to_string(t) + " must have positive components");
  }
  auto matches = invariant_matches(t);
  if (matches.empty()) {
    throw Error(ErrorCode::NotFound, "no canonical factor has invariants " + to_string(t));
  }
  if (matches.size() > 1) throw AmbiguousInvariant(t, std::move(matches));
  return matches.front();
}

Domain reconstruct_product(std::span<const InvariantTriple> triples) {
  std::vector<CartanFactor> factors;
  factors.reserve(triples.size());
  for (const auto& t : triples) factors.push_back(from_invariants(t));
  return product(std::move(factors));
}

std::vector<InvariantTriple> factor_data_of_spectrum(const StratumPoset& p) {
  std::vector<InvariantTriple> out;
  for (const auto& coordinate : p.label(0)) out.push_back(coordinate.factor);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CartanFactor> enumerate_factors(std::int64_t max_param) {
  if (max_param < 1) {
    throw Error(ErrorCode::InvalidInvariant, "max_param must be at least 1");
  }
  max_param = std::min(max_param, kMaxParameter);
  std::vector<CartanFactor> out;
  for (std::int64_t p = 1; p <= max_param; ++p) {
    for (std::int64_t q = 1; q <= p; ++q) out.push_back(make_factor(Family::I, {p, q}));
  }
  for (std::int64_t n = 5; n <= max_param; ++n) out.push_back(make_factor(Family::II, {n}));
  for (std::int64_t q = 2; q <= max_param; ++q) out.push_back(make_factor(Family::III, {q}));
  for (std::int64_t q = 5; q <= max_param; ++q) out.push_back(make_factor(Family::IV, {q}));
  out.push_back(make_factor(Family::V, {}));
  out.push_back(make_factor(Family::VI, {}));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

bool round_trips(const CartanFactor& f) {
  try {
    return from_invariants(invariant_triple(f)) == f;
  } catch (const Error&) {
    return false;
  }
}

bool tube_criterion_holds(const CartanFactor& f, const InvariantTriple& t) {
  return is_tube(f) == (2 * t.shilov_dim == t.real_dim);
}

struct FactorResult {
  InvariantTriple triple;
  bool round_trip = false;
  bool tube_ok = false;
};

// Groups factors sharing a key; input must be sorted by key.
template <class Key, class Emit>
void collect_groups(const std::vector<std::pair<Key, CartanFactor>>& keyed, Emit emit) {
  for (std::size_t a = 0; a < keyed.size();) {
    std::size_t b = a + 1;
    while (b < keyed.size() && keyed[b].first == keyed[a].first) ++b;
    if (b - a > 1) {
      std::vector<CartanFactor> group;
      for (std::size_t i = a; i < b; ++i) group.push_back(keyed[i].second);
      std::sort(group.begin(), group.end());
      emit(keyed[a].first, std::move(group));
    }
    a = b;
  }
}

void finish_report(ReconstructionReport& report, const std::vector<CartanFactor>& factors,
                   const std::vector<FactorResult>& results) {
  std::vector<std::pair<InvariantTriple, CartanFactor>> by_triple;
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, CartanFactor>> by_rank_dim;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& r = results[i];
    by_triple.emplace_back(r.triple, factors[i]);
    if (is_tube(factors[i])) by_rank_dim.push_back({{r.triple.rank, r.triple.real_dim}, factors[i]});
    if (!r.round_trip) report.round_trip_failures.push_back(factors[i]);
    if (!r.tube_ok) report.tube_violations.push_back(factors[i]);
  }
  std::sort(by_triple.begin(), by_triple.end());
  std::sort(by_rank_dim.begin(), by_rank_dim.end());
  collect_groups(by_triple, [&](const InvariantTriple& t, std::vector<CartanFactor> g) {
    report.collisions.push_back({t, std::move(g)});
  });
  collect_groups(by_rank_dim, [&](const std::pair<std::int64_t, std::int64_t>& key,
                                  std::vector<CartanFactor> g) {
    report.tube_collisions.push_back({key.first, key.second, std::move(g)});
  });
}

}  // namespace

ReconstructionReport verify_complete_invariant_serial(std::int64_t max_param) {
  const auto start = Clock::now();
  ReconstructionReport report;
  report.max_param = max_param;
  const auto factors = enumerate_factors(max_param);
  report.scanned_count = factors.size();

  std::map<InvariantTriple, std::vector<CartanFactor>> seen;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<CartanFactor>> seen_tube;
  for (const auto& f : factors) {
    const auto t = invariant_triple(f);
    seen[t].push_back(f);
    if (is_tube(f)) seen_tube[{t.rank, t.real_dim}].push_back(f);
    if (!round_trips(f)) report.round_trip_failures.push_back(f);
    if (!tube_criterion_holds(f, t)) report.tube_violations.push_back(f);
  }
  for (auto& [t, group] : seen) {
    if (group.size() > 1) report.collisions.push_back({t, group});
  }
  for (auto& [key, group] : seen_tube) {
    if (group.size() > 1) report.tube_collisions.push_back({key.first, key.second, group});
  }
  report.elapsed_ms = millis_since(start);
  return report;
}

ReconstructionReport verify_complete_invariant(std::int64_t max_param) {
  const auto start = Clock::now();
  ReconstructionReport report;
  report.max_param = max_param;
  const auto factors = enumerate_factors(max_param);
  report.scanned_count = factors.size();

  std::vector<FactorResult> results(factors.size());
  const auto n = static_cast<std::ptrdiff_t>(factors.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& f = factors[static_cast<std::size_t>(i)];
    auto& r = results[static_cast<std::size_t>(i)];
    r.triple = invariant_triple(f);
    r.round_trip = round_trips(f);
    r.tube_ok = tube_criterion_holds(f, r.triple);
  }
  finish_report(report, factors, results);
  report.elapsed_ms = millis_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// Spectrum sweep

namespace {

struct SpectrumCheck {
  std::size_t automorphisms = 0;
  std::vector<std::string> violations;
};

SpectrumCheck run_spectrum_check(const Domain& d, const SpectrumLimits& limits) {
  SpectrumCheck check;
  const std::string name = to_string(d);
  auto fail = [&](const std::string& what) { check.violations.push_back(name + ": " + what); };

  try {
    const auto p = build_spectrum(d, limits);
    if (solvable_length(p) != invariants(d).rank) fail("solvable length differs from rank");

    for (std::int64_t k = 0; k <= solvable_length(p); ++k) {
      const auto summands = decompose_weight_ideal(p, k);
      if (summands.size() != layer_components(p, k).size()) {
        fail("weight " + std::to_string(k) + " summand count differs from layer components");
      }
      IdealDownSet sum = summands.front();
      for (const auto& s : summands) {
        if (!is_down_closed(p, s)) fail("non-down-closed summand at weight " + std::to_string(k));
        sum = ideal_union(sum, s);
      }
      if (sum != ideal_of_weight(p, k) || !is_down_closed(p, sum)) {
        fail("weight " + std::to_string(k) + " ideal is not the union of its summands");
      }
    }

    const auto autos = poset_automorphisms_serial(p, {.respect_labels = true,
                                                      .max_strata = limits.max_brute_force});
    check.automorphisms = autos.size();
    if (autos.size() != sym_group(d).order) {
      fail(std::to_string(autos.size()) + " label-respecting automorphisms, |sym_D| = " +
           std::to_string(sym_group(d).order));
    }
    for (const auto& a : autos) {
      if (!is_order_automorphism(p, a)) fail("search returned a non-automorphism");
      for (std::int64_t k = 0; k <= solvable_length(p); ++k) {
        const auto ideal = ideal_of_weight(p, k);
        if (apply(p, a, ideal) != ideal) fail("automorphism moves the weight-" + std::to_string(k) + " ideal");
      }
      std::vector<std::size_t> sigma;
      try {
        sigma = factor_permutation_of(p, a);
      } catch (const Error& e) {
        fail(e.what());
        continue;
      }
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[sigma[j]] != d[j]) fail("permutation " + cycle_notation(sigma) + " mixes distinct factors");
        for (std::int64_t k = 1; k <= p.ranks()[j]; ++k) {
          const auto moved = apply(p, a, principal_downset(p, bullet(p, j, k)));
          if (moved != principal_downset(p, bullet(p, sigma[j], k))) {
            fail("bullet " + to_string(bullet(p, j, k)) + " not sent to its permuted counterpart");
          }
        }
      }
    }

    if (!is_isomorphic(reconstruct_product(factor_data_of_spectrum(p)), d)) {
      fail("spectrum labels do not reconstruct the domain");
    }
  } catch (const Error& e) {
    fail(std::string(to_string(e.code())) + ": " + e.what());
  }
  return check;
}

}  // namespace

std::vector<std::string> check_spectrum(const Domain& d, const SpectrumLimits& limits) {
  return run_spectrum_check(d, limits).violations;
}

std::vector<CartanFactor> spectrum_pool(std::int64_t max_rank, std::int64_t max_dim) {
  std::vector<CartanFactor> pool;
  if (max_rank < 1 || max_dim < 1) return pool;
  // Every family's dimension grows at least linearly in each parameter, so
  // max_dim bounds the parameters too.
  for (const auto& f : enumerate_factors(std::max<std::int64_t>(max_dim, 1))) {
    if (rank(f) <= max_rank && real_dim(f) <= max_dim) pool.push_back(f);
  }
  return pool;
}

std::vector<Domain> domains_over(std::span<const CartanFactor> pool, std::size_t max_factors) {
  std::vector<CartanFactor> sorted(pool.begin(), pool.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<Domain> out;
  std::vector<std::size_t> pick;
  // Non-decreasing index sequences enumerate multisets exactly once.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (!pick.empty()) {
      std::vector<CartanFactor> factors;
      for (std::size_t i : pick) factors.push_back(sorted[i]);
      out.push_back(product(std::move(factors)));
    }
    if (pick.size() == max_factors) return;
    for (std::size_t i = from; i < sorted.size(); ++i) {
      pick.push_back(i);
      self(self, i);
      pick.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumSweepReport verify_spectrum(std::span<const CartanFactor> pool, std::size_t max_factors,
                                    const SpectrumLimits& limits) {
  const auto start = Clock::now();
  const auto domains = domains_over(pool, max_factors);
  std::vector<SpectrumCheck> checks(domains.size());
  const auto n = static_cast<std::ptrdiff_t>(domains.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    checks[static_cast<std::size_t>(i)] = run_spectrum_check(domains[static_cast<std::size_t>(i)], limits);
  }

  SpectrumSweepReport report;
  report.domains_checked = domains.size();
  for (auto& c : checks) {
    report.automorphisms_checked += c.automorphisms;
    for (auto& v : c.violations) report.violations.push_back(std::move(v));
  }
  report.elapsed_ms = millis_since(start);
  return report;
}

}  // namespace strata

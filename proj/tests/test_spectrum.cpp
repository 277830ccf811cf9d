#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "strata/error.hpp"
#include "strata/spectrum.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace strata;

namespace {

const CartanFactor disk = make_factor(Family::I, {1, 1});
const CartanFactor ball2 = make_factor(Family::I, {2, 1});
const CartanFactor i22 = make_factor(Family::I, {2, 2});
const CartanFactor i32 = make_factor(Family::I, {3, 2});
const CartanFactor iii2 = make_factor(Family::III, {2});
const CartanFactor iv5 = make_factor(Family::IV, {5});
const CartanFactor six = make_factor(Family::VI, {});

using TupleSet = std::set<Stratum>;

TupleSet as_set(const StratumPoset& p, const IdealDownSet& s) {
  const auto m = s.members(p);
  return TupleSet(m.begin(), m.end());
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Overflow;
}

// --- oracles, written against tuples only ---------------------------------

std::vector<Stratum> odometer(const std::vector<std::int64_t>& ranks) {
  std::vector<Stratum> out;
  Stratum t(ranks.size(), 0);
  for (;;) {
    out.push_back(t);
    std::size_t j = ranks.size();
    while (j > 0) {
      --j;
      if (t[j] < ranks[j]) {
        ++t[j];
        break;
      }
      t[j] = 0;
      if (j == 0) return out;
    }
    if (ranks.empty()) return out;
  }
}

bool tuple_leq(const Stratum& a, const Stratum& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
  }
  return true;
}

std::int64_t tuple_weight(const Stratum& t) {
  std::int64_t w = 0;
  for (auto c : t) w += c;
  return w;
}

// Every maximal chain from the bottom to `target`: the chain lengths seen and
// how many chains there are.
void chains_to(const Stratum& at, const Stratum& target, std::int64_t length, std::set<std::int64_t>& lengths,
               std::uint64_t& count) {
  if (at == target) {
    lengths.insert(length);
    ++count;
    return;
  }
  for (std::size_t j = 0; j < at.size(); ++j) {
    if (at[j] < target[j]) {
      Stratum next = at;
      ++next[j];
      chains_to(next, target, length + 1, lengths, count);
    }
  }
}

// All bijections that preserve weight levels and the componentwise order,
// enumerated as a product of per-level permutations.
std::set<std::map<Stratum, Stratum>> brute_force_automorphisms(const Domain& d, bool respect_labels) {
  std::vector<std::int64_t> rk;
  std::vector<InvariantTriple> triples;
  for (const auto& f : d.factors()) {
    rk.push_back(rank(f));
    triples.push_back(invariant_triple(f));
  }
  const auto all = odometer(rk);
  std::map<std::int64_t, std::vector<Stratum>> levels;
  for (const auto& t : all) levels[tuple_weight(t)].push_back(t);

  auto label = [&](const Stratum& t) {
    std::vector<std::pair<InvariantTriple, std::int64_t>> l;
    for (std::size_t j = 0; j < t.size(); ++j) l.emplace_back(triples[j], t[j]);
    std::sort(l.begin(), l.end());
    return l;
  };

  std::vector<std::vector<Stratum>> level_list;
  for (auto& [w, v] : levels) level_list.push_back(v);

  std::set<std::map<Stratum, Stratum>> out;
  std::map<Stratum, Stratum> f;
  auto rec = [&](auto&& self, std::size_t level) -> void {
    if (level == level_list.size()) {
      for (const auto& a : all) {
        for (const auto& b : all) {
          if (tuple_leq(a, b) != tuple_leq(f[a], f[b])) return;
        }
      }
      out.insert(f);
      return;
    }
    auto images = level_list[level];
    std::sort(images.begin(), images.end());
    do {
      bool ok = true;
      for (std::size_t t = 0; t < images.size(); ++t) {
        f[level_list[level][t]] = images[t];
        if (respect_labels && label(level_list[level][t]) != label(images[t])) ok = false;
      }
      if (ok) self(self, level + 1);
    } while (std::next_permutation(images.begin(), images.end()));
  };
  rec(rec, 0);
  return out;
}

std::set<std::map<Stratum, Stratum>> as_maps(const StratumPoset& p, const std::vector<PosetAutomorphism>& autos) {
  std::set<std::map<Stratum, Stratum>> out;
  for (const auto& a : autos) {
    std::map<Stratum, Stratum> m;
    for (std::size_t x = 0; x < p.size(); ++x) m[p.stratum(x)] = p.stratum(a.image[x]);
    out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("build_spectrum examples") {
  const auto bidisk = build_spectrum(product({disk, disk}));
  CHECK(bidisk.size() == 4);
  std::vector<Stratum> strata;
  for (std::size_t x = 0; x < bidisk.size(); ++x) strata.push_back(bidisk.stratum(x));
  CHECK(strata == std::vector<Stratum>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  const auto vi = build_spectrum(product({six}));
  CHECK(vi.size() == 4);
  for (std::size_t x = 0; x + 1 < vi.size(); ++x) CHECK(vi.upper_covers(x) == std::vector<std::size_t>{x + 1});

  const auto grid = build_spectrum(product({i32, iv5}));
  CHECK(grid.size() == 9);
  CHECK(std::vector<std::int64_t>(grid.ranks().begin(), grid.ranks().end()) == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("build_spectrum matches an odometer enumeration") {
  for (const auto& d : {product({disk}), product({disk, disk}), product({i32, iv5, disk}),
                        product({six, iii2, disk, ball2})}) {
    const auto p = build_spectrum(d);
    const auto expected = odometer(ranks(d));
    REQUIRE(p.size() == expected.size());
    std::size_t covers = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      CHECK(p.stratum(x) == expected[x]);
      CHECK(p.index_of(expected[x]) == x);
      CHECK(p.weight(x) == tuple_weight(expected[x]));
      for (std::size_t y : p.upper_covers(x)) {
        CHECK(p.weight(y) == p.weight(x) + 1);
        CHECK(tuple_leq(expected[x], expected[y]));
        ++covers;
      }
      for (std::size_t y = 0; y < p.size(); ++y) CHECK(p.leq(x, y) == tuple_leq(expected[x], expected[y]));
    }
    CHECK(covers == p.covers().size());
    CHECK(p.weight(0) == 0);
    // Unique minimum.
    for (std::size_t x = 1; x < p.size(); ++x) CHECK(!p.lower_covers(x).empty());
  }
}

TEST_CASE("labels carry factor triples and coordinates") {
  const auto p = build_spectrum(product({i32, make_factor(Family::V, {})}));
  const auto l = p.label(p.index_of(Stratum{1, 2}));
  REQUIRE(l.size() == 2);
  CHECK(l[0].factor == InvariantTriple{2, 12, 8});
  CHECK(l[0].index == 1);
  CHECK(l[1].factor == InvariantTriple{2, 32, 24});
  CHECK(l[1].index == 2);
}

TEST_CASE("SizeLimit") {
  std::vector<CartanFactor> many(21, disk);
  CHECK(code_of([&] { build_spectrum(product(many)); }) == ErrorCode::SizeLimit);
  CHECK(code_of([&] { build_spectrum(product({disk, disk}), {.max_strata = 3}); }) == ErrorCode::SizeLimit);
  CHECK_NOTHROW(build_spectrum(product({disk, disk}), {.max_strata = 4}));

  std::vector<CartanFactor> fourteen(14, disk);
  const auto big = build_spectrum(product(fourteen));
  CHECK(code_of([&] { poset_automorphisms(big); }) == ErrorCode::SizeLimit);
}

TEST_CASE("solvable_length examples") {
  CHECK(solvable_length(build_spectrum(product({disk, disk}))) == 2);
  CHECK(solvable_length(build_spectrum(product({six}))) == 3);
  CHECK(solvable_length(build_spectrum(product({i32, iv5}))) == 4);
}

TEST_CASE("ideal_of_weight and principal_downset") {
  const auto p = build_spectrum(product({disk, disk}));
  CHECK(as_set(p, ideal_of_weight(p, 1)) == TupleSet{{0, 0}, {1, 0}, {0, 1}});
  CHECK(as_set(p, ideal_of_weight(p, 0)) == TupleSet{{0, 0}});
  CHECK(ideal_of_weight(p, 2).size() == 4);
  CHECK(code_of([&] { ideal_of_weight(p, 3); }) == ErrorCode::WeightOutOfRange);
  CHECK(code_of([&] { ideal_of_weight(p, -1); }) == ErrorCode::WeightOutOfRange);

  CHECK(as_set(p, principal_downset(p, Stratum{1, 0})) == TupleSet{{0, 0}, {1, 0}});
  CHECK(as_set(p, principal_downset(p, Stratum{0, 0})) == TupleSet{{0, 0}});
  CHECK(principal_downset(p, Stratum{1, 1}).size() == 4);
  CHECK(code_of([&] { principal_downset(p, Stratum{2, 0}); }) == ErrorCode::InvalidTuple);
  CHECK(code_of([&] { principal_downset(p, Stratum{1}); }) == ErrorCode::InvalidTuple);
  CHECK(code_of([&] { principal_downset(p, Stratum{0, -1}); }) == ErrorCode::InvalidTuple);
}

TEST_CASE("decompose_weight_ideal examples") {
  const auto p = build_spectrum(product({disk, disk}));
  const auto parts = decompose_weight_ideal(p, 1);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == principal_downset(p, Stratum{1, 0}));
  CHECK(parts[1] == principal_downset(p, Stratum{0, 1}));
  CHECK(ideal_union(parts[0], parts[1]) == ideal_of_weight(p, 1));

  const auto chain = build_spectrum(product({six}));
  for (std::int64_t k = 0; k <= 3; ++k) CHECK(decompose_weight_ideal(chain, k).size() == 1);

  const auto cube = build_spectrum(product({disk, disk, disk}));
  const auto tops = layer_components(cube, 2);
  CHECK(tops == std::vector<Stratum>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(decompose_weight_ideal(cube, 2).size() == 3);
  CHECK(code_of([&] { decompose_weight_ideal(cube, 4); }) == ErrorCode::WeightOutOfRange);
}

TEST_CASE("ideal_union examples and errors") {
  const auto p = build_spectrum(product({disk, disk}));
  const auto x = principal_downset(p, Stratum{1, 0});
  const auto y = principal_downset(p, Stratum{0, 1});
  CHECK(as_set(p, ideal_union(x, y)) == TupleSet{{0, 0}, {1, 0}, {0, 1}});
  CHECK(ideal_union(x, x) == x);
  CHECK(ideal_union(x, principal_downset(p, Stratum{0, 0})) == x);
  CHECK(is_down_closed(p, ideal_union(x, y)));

  const auto q = build_spectrum(product({ball2, disk}));
  CHECK(code_of([&] { ideal_union(x, principal_downset(q, Stratum{1, 0})); }) == ErrorCode::PosetMismatch);
}

TEST_CASE("union of down-sets is a down-set (random)") {
  std::mt19937_64 rng(3);
  const auto p = build_spectrum(product({i32, disk, iii2}));
  std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    auto a = principal_downset(p, pick(rng));
    auto b = principal_downset(p, pick(rng));
    a = ideal_union(a, principal_downset(p, pick(rng)));
    const auto u = ideal_union(a, b);
    REQUIRE(is_down_closed(p, u));
    REQUIRE(ideal_union(a, b) == ideal_union(b, a));
    REQUIRE(u.size() >= std::max(a.size(), b.size()));
  }
}

TEST_CASE("layer_components examples") {
  CHECK(layer_components(build_spectrum(product({disk, disk})), 1) == std::vector<Stratum>{{1, 0}, {0, 1}});
  CHECK(layer_components(build_spectrum(product({disk, disk})), 0) == std::vector<Stratum>{{0, 0}});
  CHECK(layer_components(build_spectrum(product({i32, iv5})), 2) == std::vector<Stratum>{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("bullets") {
  const auto p = build_spectrum(product({i32, disk}));
  // normal form is I(1,1) x I(3,2): ranks (1, 2)
  CHECK(bullet(p, 1, 2) == Stratum{0, 2});
  CHECK(bullet(p, 0, 1) == Stratum{1, 0});
  CHECK(code_of([&] { bullet(p, 0, 2); }) == ErrorCode::InvalidTuple);
  CHECK(code_of([&] { bullet(p, 2, 0); }) == ErrorCode::InvalidTuple);
}

TEST_CASE("maximal chains agree with brute-force enumeration") {
  const auto bidisk = build_spectrum(product({disk, disk}));
  CHECK(maximal_chain_lengths(bidisk, Stratum{1, 1}).length == 2);
  CHECK(maximal_chain_lengths(bidisk, Stratum{0, 0}).length == 0);
  CHECK(maximal_chain_lengths(bidisk, Stratum{0, 0}).count == 1);
  const auto cube = build_spectrum(product({disk, disk, disk}));
  CHECK(maximal_chain_lengths(cube, Stratum{1, 1, 1}).length == 3);
  CHECK(maximal_chain_lengths(cube, Stratum{1, 1, 1}).count == 6);
  CHECK(code_of([&] { maximal_chain_lengths(cube, Stratum{1, 2, 1}); }) == ErrorCode::InvalidTuple);

  for (const auto& d : {product({i32, iv5, disk}), product({six, iii2, disk, disk}), product({six, six})}) {
    const auto p = build_spectrum(d);
    for (std::size_t x = 0; x < p.size(); ++x) {
      const auto target = p.stratum(x);
      std::set<std::int64_t> lengths;
      std::uint64_t count = 0;
      chains_to(Stratum(target.size(), 0), target, 0, lengths, count);
      const auto stats = maximal_chain_lengths(p, target);
      REQUIRE(lengths.size() == 1);
      CHECK(*lengths.begin() == stats.length);
      CHECK(stats.length == tuple_weight(target));
      CHECK(count == stats.count);
    }
  }
}

TEST_CASE("automorphism examples") {
  const auto bidisk = build_spectrum(product({disk, disk}));
  const auto autos = poset_automorphisms(bidisk);
  REQUIRE(autos.size() == 2);
  CHECK(autos[0].image == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(autos[1].image == std::vector<std::size_t>{0, 2, 1, 3});
  CHECK(factor_permutation_of(bidisk, autos[0]) == std::vector<std::size_t>{0, 1});
  CHECK(factor_permutation_of(bidisk, autos[1]) == std::vector<std::size_t>{1, 0});
  CHECK(cycle_notation(factor_permutation_of(bidisk, autos[1])) == "(1 2)");
  CHECK(cycle_notation(factor_permutation_of(bidisk, autos[0])) == "()");

  const auto mixed = build_spectrum(product({ball2, disk}));
  CHECK(poset_automorphisms(mixed).size() == 1);
  CHECK(poset_automorphisms(mixed, {.respect_labels = false}).size() == 2);
  CHECK(poset_automorphisms(build_spectrum(product({six}))).size() == 1);

  const auto cube = build_spectrum(product({disk, disk, disk}));
  const auto cube_autos = poset_automorphisms(cube);
  CHECK(cube_autos.size() == 6);
  std::set<std::vector<std::size_t>> perms;
  for (const auto& a : cube_autos) perms.insert(factor_permutation_of(cube, a));
  CHECK(perms.size() == 6);
}

TEST_CASE("automorphisms agree with level-permutation brute force") {
  for (const auto& d : {product({disk, disk}), product({ball2, disk}), product({disk, disk, disk}),
                        product({iii2, disk}), product({iii2, i22}), product({i22, i22}), product({disk, disk, ball2}),
                        product({six, disk})}) {
    const auto p = build_spectrum(d);
    for (bool labels : {true, false}) {
      const auto fast = poset_automorphisms(p, {.respect_labels = labels});
      const auto reference = poset_automorphisms_serial(p, {.respect_labels = labels});
      CHECK(fast == reference);
      CHECK(as_maps(p, fast) == brute_force_automorphisms(d, labels));
      for (const auto& a : fast) CHECK(is_order_automorphism(p, a));
    }
  }
}

TEST_CASE("non-coordinate maps are rejected") {
  const auto p = build_spectrum(product({disk, disk}));
  PosetAutomorphism bogus{{0, 1, 3, 2}};
  CHECK_FALSE(is_order_automorphism(p, bogus));
  CHECK(code_of([&] { factor_permutation_of(p, bogus); }) == ErrorCode::NotCoordinateInduced);
  CHECK(code_of([&] { factor_permutation_of(p, PosetAutomorphism{{0, 1}}); }) == ErrorCode::NotCoordinateInduced);
}

TEST_CASE("automorphisms preserve weight ideals and permute bullets") {
  const auto d = product({disk, disk, iii2, iii2});
  const auto p = build_spectrum(d);
  const auto autos = poset_automorphisms(p);
  CHECK(autos.size() == 4);
  for (const auto& a : autos) {
    for (std::int64_t k = 0; k <= p.max_weight(); ++k) {
      CHECK(apply(p, a, ideal_of_weight(p, k)) == ideal_of_weight(p, k));
    }
    const auto sigma = factor_permutation_of(p, a);
    for (std::size_t j = 0; j < d.size(); ++j) {
      CHECK(d[sigma[j]] == d[j]);
      for (std::int64_t k = 1; k <= p.ranks()[j]; ++k) {
        CHECK(apply(p, a, principal_downset(p, bullet(p, j, k))) == principal_downset(p, bullet(p, sigma[j], k)));
      }
    }
  }
}

TEST_CASE("cycle notation") {
  CHECK(cycle_notation(std::vector<std::size_t>{0, 1, 2}) == "()");
  CHECK(cycle_notation(std::vector<std::size_t>{1, 2, 0}) == "(1 2 3)");
  CHECK(cycle_notation(std::vector<std::size_t>{1, 0, 3, 2}) == "(1 2)(3 4)");
}

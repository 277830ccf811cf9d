#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "strata/error.hpp"
#include "strata/reconstruct.hpp"

#include <map>
#include <random>

using namespace strata;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Overflow;
}

// Bounded brute-force inversion: every canonical factor of real dimension at
// most max_dim, keyed by its forward triple. Parameters are enumerated
// directly from the canonical ranges.
std::multimap<InvariantTriple, CartanFactor> forward_table(std::int64_t max_dim) {
  std::multimap<InvariantTriple, CartanFactor> table;
  auto add = [&](Family fam, std::initializer_list<std::int64_t> params) {
    const auto f = make_factor(fam, params);
    if (real_dim(f) <= max_dim) table.emplace(invariant_triple(f), f);
  };
  for (std::int64_t p = 1; 2 * p <= max_dim; ++p) {
    for (std::int64_t q = 1; q <= p; ++q) add(Family::I, {p, q});
  }
  for (std::int64_t n = 5; n * (n - 1) <= max_dim; ++n) add(Family::II, {n});
  for (std::int64_t q = 2; q * (q + 1) <= max_dim; ++q) add(Family::III, {q});
  for (std::int64_t q = 5; 2 * q <= max_dim; ++q) add(Family::IV, {q});
  add(Family::V, {});
  add(Family::VI, {});
  return table;
}

std::size_t expected_scan_count(std::int64_t n) {
  auto at_least = [&](std::int64_t lo) { return static_cast<std::size_t>(std::max<std::int64_t>(0, n - lo + 1)); };
  return static_cast<std::size_t>(n * (n + 1) / 2) + at_least(5) + at_least(2) + at_least(5) + 2;
}

ReconstructionReport without_time(ReconstructionReport r) {
  r.elapsed_ms = 0;
  return r;
}

}  // namespace

TEST_CASE("from_invariants examples") {
  CHECK(from_invariants({2, 12, 8}) == make_factor(Family::I, {3, 2}));
  CHECK(from_invariants({3, 54, 27}) == make_factor(Family::VI, {}));
  CHECK(from_invariants({2, 32, 24}) == make_factor(Family::V, {}));
  CHECK(code_of([] { from_invariants({1, 7, 6}); }) == ErrorCode::NotFound);
  CHECK(code_of([] { from_invariants({2, 8, 5}); }) == ErrorCode::NotFound);
  CHECK(code_of([] { from_invariants({0, 8, 4}); }) == ErrorCode::InvalidInvariant);
  CHECK(code_of([] { from_invariants({2, -8, 4}); }) == ErrorCode::InvalidInvariant);
  // IV(4) would have (2, 8, 4); that triple belongs to I(2,2) alone.
  CHECK(from_invariants({2, 8, 4}) == make_factor(Family::I, {2, 2}));
  // Parameters beyond the supported bound are not representable.
  CHECK(code_of([] { from_invariants({1, 2 * (kMaxParameter + 1), 2 * kMaxParameter + 1}); }) ==
        ErrorCode::NotFound);
}

TEST_CASE("(2,12,8) is unique among all factors of dimension <= 12") {
  const auto table = forward_table(12);
  CHECK(table.count({2, 12, 8}) == 1);
  CHECK(table.find({2, 12, 8})->second == make_factor(Family::I, {3, 2}));
}

TEST_CASE("closed-form inversion agrees with the brute-force table") {
  const std::int64_t max_dim = 2000;
  const auto table = forward_table(max_dim);
  for (auto it = table.begin(); it != table.end(); it = table.upper_bound(it->first)) {
    REQUIRE(table.count(it->first) == 1);
    CHECK(from_invariants(it->first) == it->second);
  }
  // Every triple that does not occur in the table is rejected.
  for (std::int64_t r = 1; r <= 4; ++r) {
    for (std::int64_t dim = 1; dim <= 80; ++dim) {
      for (std::int64_t sh = 1; sh <= dim; ++sh) {
        const InvariantTriple t{r, dim, sh};
        CHECK(invariant_matches(t).size() == table.count(t));
      }
    }
  }
}

TEST_CASE("inversion is never ambiguous for parameters up to 10^4") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> param(1, 10'000);
  std::uniform_int_distribution<int> fam(0, 5);
  for (int trial = 0; trial < 200'000; ++trial) {
    const auto family = static_cast<Family>(fam(rng));
    std::vector<std::int64_t> params;
    for (std::size_t i = 0; i < arity(family); ++i) params.push_back(param(rng));
    try {
      const auto f = make_factor(family, params);
      REQUIRE(invariant_matches(invariant_triple(f)) == std::vector<CartanFactor>{f});
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::OutOfCanonicalRange);
    }
  }
}

TEST_CASE("reconstruct_product examples") {
  const auto disk = make_factor(Family::I, {1, 1});
  const std::vector<InvariantTriple> bidisk{{1, 2, 1}, {1, 2, 1}};
  CHECK(reconstruct_product(bidisk) == product({disk, disk}));
  const std::vector<InvariantTriple> v_vi{{2, 32, 24}, {3, 54, 27}};
  CHECK(reconstruct_product(v_vi) == product({make_factor(Family::V, {}), make_factor(Family::VI, {})}));
  const std::vector<InvariantTriple> odd{{1, 3, 2}};
  CHECK(code_of([&] { reconstruct_product(odd); }) == ErrorCode::NotFound);
  CHECK(code_of([] { reconstruct_product({}); }) == ErrorCode::EmptyProduct);
}

TEST_CASE("factor_data_of_spectrum examples") {
  const auto disk = make_factor(Family::I, {1, 1});
  CHECK(factor_data_of_spectrum(build_spectrum(product({disk, disk}))) ==
        std::vector<InvariantTriple>{{1, 2, 1}, {1, 2, 1}});
  CHECK(factor_data_of_spectrum(build_spectrum(product({make_factor(Family::I, {3, 2}), make_factor(Family::V, {})}))) ==
        std::vector<InvariantTriple>{{2, 12, 8}, {2, 32, 24}});
  CHECK(factor_data_of_spectrum(build_spectrum(product({make_factor(Family::IV, {9})}))) ==
        std::vector<InvariantTriple>{{2, 18, 9}});
}

TEST_CASE("enumerate_factors") {
  const auto one = enumerate_factors(1);
  CHECK(one == std::vector<CartanFactor>{make_factor(Family::I, {1, 1}), make_factor(Family::V, {}),
                                         make_factor(Family::VI, {})});
  for (std::int64_t n : {1, 2, 5, 10, 50}) CHECK(enumerate_factors(n).size() == expected_scan_count(n));
  CHECK(expected_scan_count(50) == 1418);
  CHECK(code_of([] { enumerate_factors(0); }) == ErrorCode::InvalidInvariant);
}

TEST_CASE("verify_complete_invariant examples") {
  const auto r1 = verify_complete_invariant(1);
  CHECK(r1.scanned_count == 3);
  CHECK(r1.ok());

  const auto r10 = verify_complete_invariant(10);
  CHECK(r10.scanned_count == 78);
  CHECK(r10.collisions.empty());
  CHECK(r10.round_trip_failures.empty());
  CHECK(r10.tube_violations.empty());
  CHECK(r10.tube_collisions.empty());

  const auto r50 = verify_complete_invariant(50);
  CHECK(r50.max_param == 50);
  CHECK(r50.scanned_count == 1418);
  CHECK(r50.ok());
}

TEST_CASE("parallel sweep matches the serial reference") {
  for (std::int64_t n : {1, 7, 30, 120}) {
    CHECK(without_time(verify_complete_invariant(n)) == without_time(verify_complete_invariant_serial(n)));
  }
}

TEST_CASE("spectrum pool and domain enumeration") {
  const auto pool = spectrum_pool(2, 8);
  // rank <= 2, dim <= 8: I(1,1) I(2,1) I(3,1) I(4,1) I(2,2) III(2)
  CHECK(pool.size() == 6);
  CHECK(spectrum_pool(3, 12).size() == 12);

  // Multisets of size 1..3 from 6 elements: 6 + 21 + 56.
  const auto domains = domains_over(pool, 3);
  CHECK(domains.size() == 83);
  CHECK(std::is_sorted(domains.begin(), domains.end()));
  CHECK(std::adjacent_find(domains.begin(), domains.end()) == domains.end());
}

TEST_CASE("spectrum sweep is clean") {
  const auto disk = make_factor(Family::I, {1, 1});
  CHECK(check_spectrum(product({disk, disk})).empty());
  CHECK(check_spectrum(product({make_factor(Family::VI, {}), make_factor(Family::II, {7}), disk})).empty());

  const auto report = verify_spectrum(spectrum_pool(3, 12), 3);
  CHECK(report.ok());
  CHECK(report.domains_checked == 12 + 78 + 364);
}

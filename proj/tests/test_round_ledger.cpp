#include <doctest.h>

#include "hypermatch/matching_rounding.hpp"
#include "hypermatch/round_ledger.hpp"
#include "support.hpp"

using namespace hypermatch;
using namespace testing_support;

TEST_SUITE("round_ledger") {

TEST_CASE("charges accumulate") {
  RoundLedger ledger;
  ledger.charge("linial", 5);
  CHECK(ledger.total() == 5);
  ledger.charge("greedy", 3);
  CHECK(ledger.total() == 8);
  CHECK(ledger.entries().size() == 2);
  ledger.charge("greedy", 2);
  CHECK(ledger.entries().size() == 2);
  CHECK(ledger.entries().back().calls == 2);
  CHECK(ledger.total_for("greedy") == 5);
  charge(nullptr, "ignored", 9);
}

TEST_CASE("total equals the sum of entries on a full maximal matching run") {
  std::mt19937_64 rng(50);
  const auto h = random_hypergraph(30, 50, 3, rng);
  RoundLedger ledger;
  const auto res = maximal_matching(h, std::nullopt, &ledger);
  CHECK(ledger.total() > 0);
  std::uint64_t sum = 0;
  for (const auto& e : ledger.entries()) sum += e.rounds;
  CHECK(sum == ledger.total());
  CHECK(ledger.total_for("maximal_driver") == res.iterations);
}

TEST_CASE("identical runs produce identical ledgers and outputs") {
  std::mt19937_64 rng(77);
  const auto h = random_hypergraph(20, 40, 3, rng);
  RoundLedger a, b;
  const auto ma = maximal_matching(h, std::nullopt, &a);
  const auto mb = maximal_matching(h, std::nullopt, &b);
  CHECK(ma.matching.edges == mb.matching.edges);
  REQUIRE(a.entries().size() == b.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    CHECK(a.entries()[i].label == b.entries()[i].label);
    CHECK(a.entries()[i].rounds == b.entries()[i].rounds);
  }
}

TEST_CASE("recurrence depth follows its definition") {
  CHECK(recurrence_depth(1) == 0);
  CHECK(recurrence_depth(2) == 0);
  CHECK(recurrence_depth(4) == 0);
  CHECK(recurrence_depth(8) == 1);
  CHECK(recurrence_depth(16) == 2);
  CHECK(recurrence_depth(32) == 2);
  CHECK(recurrence_depth(64) == 3);
  CHECK(recurrence_depth(1u << 17) == 4);
  // Direct evaluation of min t with (L/2)^(2^-t) <= 2 for powers of two.
  for (int lg = 1; lg < 60; ++lg) {
    int t = 0;
    while (std::pow(std::pow(2.0, lg - 1), std::pow(2.0, -t)) > 2.0 + 1e-9) ++t;
    CHECK(recurrence_depth(std::uint64_t{1} << lg) == t);
  }
}

TEST_CASE("recurrence bound values") {
  const RecurrenceConstants k{32.0, 1.5};
  CHECK(recurrence_bound(4, 2, 16, k) == doctest::Approx(2 * 1.5 * (4 + 4)));
  CHECK(recurrence_bound(8, 2, 16, k) == doctest::Approx(2 * 64 * 1.5 * (4 + 4)));
  CHECK(check_recurrence_bound(0, 1024, 3, 64, k).ok);
  const auto v = check_recurrence_bound(1000, 4, 2, 16, k);
  CHECK(!v.ok);
  CHECK(v.depth == 0);
  const double c = fit_recurrence_c(1000, 4, 2, 16, 32.0);
  CHECK(check_recurrence_bound(1000, 4, 2, 16, {32.0, c}).ok);
  CHECK(!check_recurrence_bound(1001, 4, 2, 16, {32.0, c}).ok);
}

}  // TEST_SUITE

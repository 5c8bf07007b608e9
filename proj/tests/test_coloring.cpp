#include <doctest.h>

#include "hypermatch/coloring.hpp"
#include "support.hpp"

using namespace hypermatch;
using namespace testing_support;

namespace {

std::uint64_t distinct(const std::vector<Color>& colors) {
  std::vector<Color> c = colors;
  std::sort(c.begin(), c.end());
  return static_cast<std::uint64_t>(std::unique(c.begin(), c.end()) - c.begin());
}

bool within_palette(const VertexColoring& c) {
  return std::all_of(c.colors.begin(), c.colors.end(), [&](Color x) { return x < c.palette_size; });
}

}  // namespace

TEST_SUITE("coloring") {

TEST_CASE("linial examples") {
  const auto single = linial_coloring(Graph::build(1, {}), id_coloring(1));
  CHECK(single.palette_size == 1);

  const auto c5 = cycle_graph(5);
  const auto col = linial_coloring(c5, id_coloring(5));
  CHECK(is_proper(c5, col.colors));
  CHECK(col.palette_size <= kLinialConstant * 4);
  CHECK(within_palette(col));

  const auto edgeless = linial_coloring(Graph::build(6, {}), id_coloring(6));
  CHECK(edgeless.palette_size == 1);
  CHECK(distinct(edgeless.colors) == 1);
}

TEST_CASE("linial rejects an improper start") {
  VertexColoring bad{{0, 0}, 2, 0};
  CHECK_THROWS_AS(linial_coloring(Graph::build(2, {{0, 1}}), bad), std::invalid_argument);
  VertexColoring outside{{0, 5}, 2, 0};
  CHECK_THROWS_AS(linial_coloring(Graph::build(2, {{0, 1}}), outside), std::invalid_argument);
  CHECK_THROWS_AS(defective_coloring(Graph::build(2, {{0, 1}}), bad, 0), std::invalid_argument);
}

TEST_CASE("edge_coloring_init examples") {
  CHECK(edge_coloring_init(Hypergraph::build(3, {{0, 1, 2}})).palette_size == 1);
  const auto tri = Hypergraph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto col = edge_coloring_init(tri);
  CHECK(is_proper(line_graph(tri), col.colors));
  CHECK(col.palette_size <= kLinialConstant * 16);
  const auto apart = edge_coloring_init(Hypergraph::build(4, {{0, 1}, {2, 3}}));
  CHECK(apart.colors == std::vector<Color>{0, 0});
}

TEST_CASE("defective examples") {
  const auto k4 = complete_graph(4);
  const auto one = defective_coloring(k4, id_coloring(4), 3);
  CHECK(one.palette_size == 1);
  CHECK(max_defect(k4, one.colors) <= 3);

  const auto c5 = cycle_graph(5);
  const auto proper = defective_coloring(c5, id_coloring(5), 0);
  CHECK(is_proper(c5, proper.colors));
  CHECK(proper.palette_size <= kDefectiveConstant * 4);

  const auto d1 = defective_coloring(k4, id_coloring(4), 1);
  CHECK(max_defect(k4, d1.colors) <= 1);
  CHECK(d1.defect <= 1);
}

TEST_CASE("reduce_color picks the least-conflict evaluation point") {
  // q = 3, k = 1: color c = a0 + 3 a1 is the polynomial a0 + a1 x.
  const ReductionStep step{3, 1};
  // Own polynomial 1 + x (color 4); neighbor 1 (constant 1) agrees at x = 0.
  const Color own = 4;
  const Color out = reduce_color(own, {1}, step);
  CHECK(out / 3 == 1);          // x = 1 is the first conflict-free point
  CHECK(out % 3 == (1 + 1) % 3);
  // Same-colored neighbors are ignored.
  CHECK(reduce_color(own, {own}, step) == 0 * 3 + 1);
}

TEST_CASE("palette bounds hold on random graphs up to 500 nodes") {
  std::mt19937_64 rng(9);
  for (std::size_t n : {20u, 60u, 150u, 300u, 500u}) {
    for (double p : {0.01, 0.05, 0.2}) {
      const auto g = random_graph(n, p, rng);
      const auto delta = static_cast<std::uint64_t>(std::max<std::size_t>(g.max_degree(), 1));
      RoundLedger ledger;
      const auto lin = linial_coloring(g, id_coloring(n), &ledger);
      CHECK(is_proper(g, lin.colors));
      CHECK(within_palette(lin));
      CHECK(lin.palette_size <= std::max<std::uint64_t>(kLinialConstant * delta * delta, 1));
      CHECK(ledger.total_for("linial") == linial_schedule(n, g.max_degree()).size());
      for (std::uint64_t defect : {1ull, 2ull, 5ull}) {
        if (defect >= delta) continue;
        const auto def = defective_coloring(g, id_coloring(n), defect, nullptr);
        CHECK(max_defect(g, def.colors) <= defect);
        CHECK(def.defect <= defect);
        CHECK(within_palette(def));
        const std::uint64_t ratio_sq = (delta * delta + defect * defect - 1) / (defect * defect);
        CHECK(def.palette_size <= kDefectiveConstant * ratio_sq);
      }
    }
  }
}

TEST_CASE("schedules meet the frozen constants for every degree up to 120") {
  for (std::uint64_t delta = 1; delta <= 120; ++delta) {
    for (std::uint64_t palette : {delta + 1, 16 * delta * delta + 1, std::uint64_t{100000}, std::uint64_t{1} << 40}) {
      const auto lin = linial_schedule(palette, delta);
      const auto reached = schedule_palette(palette, lin);
      CHECK(reached <= std::max(kLinialConstant * delta * delta, std::min(palette, kLinialConstant * delta * delta)));
      CHECK(reached <= palette);
      for (std::uint64_t p = 1; p < delta; p += std::max<std::uint64_t>(1, delta / 7)) {
        const auto def = defective_schedule(reached, delta, p);
        std::uint64_t defect = 0;
        for (const auto& s : def) defect += s.k * delta / s.q;
        CHECK(defect <= p);
        const auto final_palette = schedule_palette(reached, def);
        CHECK(final_palette <= kDefectiveConstant * ((delta * delta + p * p - 1) / (p * p)));
      }
    }
  }
}

TEST_CASE("next_prime") {
  CHECK(next_prime(0) == 2);
  CHECK(next_prime(2) == 2);
  CHECK(next_prime(14) == 17);
  CHECK(next_prime(97) == 97);
}

}  // TEST_SUITE

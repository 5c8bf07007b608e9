#include <doctest.h>

#include "hypermatch/matching_rounding.hpp"
#include "support.hpp"

using namespace hypermatch;
using namespace testing_support;

TEST_SUITE("hypergraph") {

TEST_CASE("build computes rank and max degree") {
  const auto single = Hypergraph::build(3, {{0, 1, 2}});
  CHECK(single.rank() == 3);
  CHECK(single.max_degree() == 1);

  const auto tri = Hypergraph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.rank() == 2);
  CHECK(tri.max_degree() == 2);

  const auto parallel = Hypergraph::build(2, {{0, 1}, {0, 1}});
  CHECK(parallel.num_edges() == 2);
  CHECK(parallel.max_degree() == 2);
}

TEST_CASE("build rejects malformed hyperedges") {
  CHECK_THROWS_AS(Hypergraph::build(3, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::build(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::build(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("graph build rejects loops and parallel edges") {
  CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(3, {{0, 5}}), std::invalid_argument);
  const auto g = Graph::build(4, {{2, 1}, {3, 0}});
  CHECK(g.edge(0) == std::pair<VertexId, VertexId>{1, 2});
  CHECK(g.adjacent(2, 1));
  CHECK(!g.adjacent(0, 1));
  CHECK(g.edge_id(0, 3) == 1);
}

TEST_CASE("degenerate edgeless instances") {
  const auto h = Hypergraph::build(4, {});
  CHECK(h.max_degree() == 0);
  CHECK(maximal_matching(h).matching.empty());
  CHECK(validate_matching(h, {}, true).ok(true));
}

TEST_CASE("line graph examples") {
  CHECK(line_graph(Hypergraph::build(2, {{0, 1}})).num_edges() == 0);

  const auto star = line_graph(Hypergraph::build(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(star.num_vertices() == 3);
  CHECK(star.num_edges() == 3);

  const auto f = line_graph(Hypergraph::build(8, {{0, 1, 2}, {2, 3, 4}, {5, 6, 7}}));
  CHECK(f.num_edges() == 1);
  CHECK(f.adjacent(0, 1));
  CHECK(f.degree(2) == 0);
}

TEST_CASE("line graph degree is at most r times delta") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const auto h = random_instance(rng, 15, 30, 2 + i % 3);
    CHECK(line_graph(h).max_degree() <= h.rank() * h.max_degree());
  }
}

TEST_CASE("validate_matching examples") {
  const auto tri = Hypergraph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto one = validate_matching(tri, {{0}}, true);
  CHECK(one.valid);
  CHECK(one.maximal);
  const auto two = validate_matching(tri, {{0, 1}}, false);
  CHECK(!two.valid);
  CHECK(two.witness.find("vertex 1") != std::string::npos);
  CHECK(!validate_matching(tri, {{7}}, false).valid);
  CHECK(!validate_matching(tri, {{0, 0}}, false).valid);
  const auto empty = validate_matching(tri, {}, true);
  CHECK(empty.valid);
  CHECK(!empty.maximal);
}

TEST_CASE("validate_matching agrees with an independent disjointness scan") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const auto h = random_hypergraph(12, 20, 3, rng);
    Matching m;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      if (uniform_below(rng, 4) == 0) m.edges.push_back(e);
    }
    bool disjoint = true;
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        for (VertexId u : h.edge(m.edges[a])) {
          for (VertexId v : h.edge(m.edges[b])) disjoint = disjoint && u != v;
        }
      }
    }
    CHECK(validate_matching(h, m, false).valid == disjoint);
    const auto solved = maximal_matching(h).matching;
    CHECK(validate_matching(h, solved, true).ok(true));
  }
}

TEST_CASE("validate_fractional_matching examples") {
  const auto tri = Hypergraph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto zero = validate_fractional_matching(tri, FractionalAssignment::zeros(3, kHalf));
  CHECK(zero.ok());
  CHECK(zero.half_tight.empty());

  FractionalAssignment half{{kHalf, kHalf, kHalf}, kHalf};
  const auto v = validate_fractional_matching(tri, half);
  CHECK(v.ok());
  CHECK(v.half_tight.size() == 3);
  CHECK(v.max_load == kOne);

  const auto star = Hypergraph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  // 1/3 is not dyadic; 3/8 stands in with the same overload (4 * 3/8 > 1).
  const Dyadic third(3, 3);
  FractionalAssignment over{{third, third, third, third}, Dyadic::inverse_pow2(3)};
  const auto bad = validate_fractional_matching(star, over);
  CHECK(!bad.valid);
  CHECK(bad.max_load == Dyadic(3, 1));

  FractionalAssignment low{{Dyadic::inverse_pow2(3), kZero, kZero}, kHalf};
  CHECK(!validate_fractional_matching(tri, low).floor_ok);
}

TEST_CASE("dyadic values are exact and round-trip through text") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Dyadic a(static_cast<std::int64_t>(uniform_below(rng, 2000)) - 1000, static_cast<int>(uniform_below(rng, 40)));
    CHECK(Dyadic::parse(a.str()) == a);
    const Dyadic b(static_cast<std::int64_t>(uniform_below(rng, 2000)) - 1000, static_cast<int>(uniform_below(rng, 40)));
    CHECK((a + b) - b == a);
    CHECK(a.doubled().halved() == a);
  }
  CHECK(Dyadic(6, 3) == Dyadic(3, 2));
  CHECK(Dyadic(6, 3).str() == "3/4");
  CHECK(Dyadic::parse("-5/8") == Dyadic(-5, 3));
  CHECK_THROWS(Dyadic::parse("1/3"));
  CHECK_THROWS(Dyadic::parse("1/"));
  CHECK_THROWS(Dyadic::integer(INT64_MAX) + kOne);
  CHECK_THROWS(Dyadic::inverse_pow2(Dyadic::kMaxExponent).halved());
}

TEST_CASE("fractional assignments survive serialization") {
  std::mt19937_64 rng(8);
  const auto h = random_hypergraph(10, 25, 3, rng);
  const auto x = greedy_fractional_matching(h);
  std::string text;
  for (const auto& v : x.values) text += v.str() + "\n";
  std::size_t i = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    CHECK(Dyadic::parse(std::string_view(text).substr(start, end - start)) == x.values[i++]);
    start = end + 1;
  }
  CHECK(i == x.values.size());
}

TEST_CASE("restrict_edges and induced subgraphs") {
  const auto h = Hypergraph::build(5, {{0, 1}, {1, 2, 3}, {3, 4}});
  const std::vector<EdgeId> keep{2, 0};
  const auto sub = h.restrict_edges(keep);
  CHECK(sub.num_edges() == 2);
  CHECK(std::vector<VertexId>(sub.edge(0).begin(), sub.edge(0).end()) == std::vector<VertexId>{3, 4});
  CHECK(h.adjacent_edges(1) == std::vector<EdgeId>{0, 2});

  const auto g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  const std::vector<VertexId> nodes{3, 2, 1};
  const auto ind = g.induced(nodes);
  CHECK(ind.num_vertices() == 3);
  CHECK(ind.num_edges() == 2);
  CHECK(ind.adjacent(0, 1));
  CHECK(ind.adjacent(1, 2));
}

}  // TEST_SUITE

#include <doctest.h>

#include "hypermatch/edge_coloring.hpp"
#include "hypermatch/oracles.hpp"
#include "support.hpp"

using namespace hypermatch;
using namespace testing_support;

namespace {

/// Every maximal matching of the reduction decodes to a proper list coloring.
void check_all_decodings(const ColoringReduction& red, const Graph& g, const EdgeLists* lists) {
  const auto all = enumerate_maximal_matchings(red.hypergraph);
  CHECK(!all.empty());
  for (const auto& m : all) {
    std::vector<std::int64_t> colors;
    REQUIRE_NOTHROW(colors = decode_coloring(red, m));
    CHECK(validate_edge_coloring(g, colors, lists).ok());
  }
}

}  // namespace

TEST_SUITE("edge_coloring") {

TEST_CASE("plain reduction examples") {
  const auto edge = Graph::build(2, {{0, 1}});
  const auto red = reduce_edge_coloring(edge);
  CHECK(red.hypergraph.num_edges() == 1);
  CHECK(red.hypergraph.rank() == 3);

  const auto tri = cycle_graph(3);
  const auto rt = reduce_edge_coloring(tri);
  CHECK(rt.hypergraph.num_edges() == 9);
  for (EdgeId e = 0; e < 3; ++e) CHECK(rt.hypergraph.degree(static_cast<VertexId>(3 * 3 + e)) == 3);
  check_all_decodings(rt, tri, nullptr);

  const auto path = path_graph(3);
  const auto rp = reduce_edge_coloring(path);
  CHECK(rp.hypergraph.num_edges() == 6);
  for (const auto& m : enumerate_maximal_matchings(rp.hypergraph)) {
    const auto colors = decode_coloring(rp, m);
    CHECK(colors[0] != colors[1]);
  }
  CHECK_THROWS_AS(reduce_edge_coloring(Graph::build(3, {})), std::invalid_argument);
}

TEST_CASE("plain reduction sizes") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_graph(12, 0.3, rng);
    if (g.max_degree() == 0) continue;
    const auto red = reduce_edge_coloring(g);
    const std::size_t delta = g.max_degree();
    CHECK(red.hypergraph.num_vertices() <= 3 * g.num_vertices() * delta + g.num_edges());
    CHECK(red.copy_vertices == (2 * delta - 1) * g.num_vertices());
    CHECK(red.hypergraph.rank() == 3);
    CHECK(red.hypergraph.max_degree() == 2 * delta - 1);
  }
}

TEST_CASE("list reduction examples") {
  const auto edge = Graph::build(2, {{0, 1}});
  const EdgeLists seven{{7}};
  const auto red = reduce_list_edge_coloring(edge, seven);
  CHECK(red.hypergraph.num_edges() == 1);
  CHECK(list_edge_color(edge, seven).colors == std::vector<std::int64_t>{7});

  const auto path = path_graph(3);
  const EdgeLists two{{1, 2}, {1, 2}};
  check_all_decodings(reduce_list_edge_coloring(path, two), path, &two);

  const auto star = star_graph(4);
  const EdgeLists three{{1, 5, 9}, {5, 9, 2}, {9, 3, 1}};
  const auto rs = reduce_list_edge_coloring(star, three);
  CHECK(rs.hypergraph.num_edges() == 9);
  check_all_decodings(rs, star, &three);
}

TEST_CASE("list reduction names a short list") {
  const auto path = path_graph(3);
  try {
    reduce_list_edge_coloring(path, {{1, 2}, {1}});
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("edge 1") != std::string::npos);
  }
  CHECK_THROWS_AS(reduce_list_edge_coloring(path, {{1, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(reduce_list_edge_coloring(path, {{-1, 2}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("hypergraph list reduction examples") {
  const auto path = path_graph(4);
  const EdgeLists lists{{1, 2}, {2, 3, 4}, {4, 1}};
  const auto a = reduce_list_edge_coloring(path, lists);
  const auto b = reduce_hypergraph_list_edge_coloring(path.as_hypergraph(), lists);
  CHECK(a.hypergraph.edges() == b.hypergraph.edges());
  CHECK(a.hypergraph.num_vertices() == b.hypergraph.num_vertices());

  const auto single = Hypergraph::build(3, {{0, 1, 2}});
  const auto rs = reduce_hypergraph_list_edge_coloring(single, {{5}});
  CHECK(rs.hypergraph.num_edges() == 1);
  CHECK(rs.hypergraph.rank() == 4);
  CHECK(hypergraph_list_edge_color(single, {{5}}).colors == std::vector<std::int64_t>{5});

  const auto two = Hypergraph::build(5, {{0, 1, 2}, {2, 3, 4}});
  const EdgeLists l12{{1, 2}, {1, 2}};
  const auto rt = reduce_hypergraph_list_edge_coloring(two, l12);
  for (const auto& m : enumerate_maximal_matchings(rt.hypergraph)) {
    const auto colors = decode_coloring(rt, m);
    CHECK(colors[0] != colors[1]);
  }
}

TEST_CASE("deterministic edge coloring examples") {
  const auto tri = cycle_graph(3);
  const auto c = edge_color(tri);
  CHECK(validate_edge_coloring(tri, c.colors).ok());
  CHECK(validate_edge_coloring(tri, c.colors).max_color <= 3);

  const auto star = star_graph(5);
  const auto s = edge_color(star);
  auto sorted = s.colors;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::unique(sorted.begin(), sorted.end()) == sorted.end());
  CHECK(sorted.back() <= 7);

  const auto p = petersen();
  const auto pc = edge_color(p);
  const auto v = validate_edge_coloring(p, pc.colors);
  CHECK(v.ok());
  CHECK(v.max_color <= 5);
  CHECK(edge_color(Graph::build(3, {})).colors.empty());
}

TEST_CASE("validator catches adjacent repeats and list violations") {
  const auto path = path_graph(3);
  const auto bad = validate_edge_coloring(path, {1, 1});
  CHECK(!bad.proper);
  CHECK(!bad.witness.empty());
  const EdgeLists lists{{1}, {2}};
  CHECK(!validate_edge_coloring(path, {1, 3}, &lists).in_lists);
}

TEST_CASE("randomized hybrid examples") {
  const auto edge = Graph::build(2, {{0, 1}});
  RandomizedStats stats;
  const auto c = randomized_edge_color(edge, 3, nullptr, &stats);
  CHECK(c.colors == std::vector<std::int64_t>{1});
  CHECK(stats.uncolored_after_trials == 0);

  std::mt19937_64 rng(13);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_graph(16, 0.3, rng);
    const auto col = randomized_edge_color(g, seed);
    const auto v = validate_edge_coloring(g, col.colors);
    CHECK(v.ok());
    CHECK(v.max_color <= static_cast<std::int64_t>(2 * g.max_degree()) - 1 + (g.num_edges() == 0 ? 1 : 0));
    CHECK(randomized_edge_color(g, seed).colors == col.colors);
  }
}

TEST_CASE("h-partition examples") {
  const auto star = star_graph(6);
  const auto hp = h_partition(star, 1, Rational{1, 1});
  CHECK(hp.layers == 2);
  CHECK(hp.layer[0] == 2);
  for (VertexId v = 1; v < 6; ++v) CHECK(hp.layer[v] == 1);
  CHECK(validate_h_partition(star, hp));

  const auto edgeless = h_partition(Graph::build(4, {}), 1, Rational{1, 1});
  CHECK(edgeless.layers == 1);

  CHECK_THROWS_AS(h_partition(complete_graph(4), 1, Rational{1, 10}), PeelingStalled);
}

TEST_CASE("h-partition layer count") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_graph(40, 0.1, rng);
    const auto a = static_cast<std::int64_t>(std::max<std::size_t>(1, (g.max_degree() + 1) / 2));
    const Rational eps{1, 2};
    const auto hp = h_partition(g, a, eps);
    CHECK(validate_h_partition(g, hp));
    CHECK(hp.layers <= static_cast<std::size_t>(std::ceil(4.0 * std::log2(40.0) * 2.0)));
  }
}

TEST_CASE("arboricity coloring examples") {
  const auto tree = Graph::build(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {6, 7}});
  const auto tc = arboricity_edge_color(tree, 1, Rational{1, 1});
  CHECK(validate_edge_coloring(tree, tc.colors).ok());
  CHECK(validate_edge_coloring(tree, tc.colors).max_color <= 6);
  CHECK(arboricity_palette(tree, 1, Rational{1, 1}) == 6);

  const auto cyc = cycle_graph(7);
  const auto cc = arboricity_edge_color(cyc, 1, Rational{1, 1});
  CHECK(validate_edge_coloring(cyc, cc.colors).ok());
  CHECK(validate_edge_coloring(cyc, cc.colors).max_color <= 4);

  const auto k4 = complete_graph(4);
  const auto kc = arboricity_edge_color(k4, 2, Rational{1, 1});
  CHECK(validate_edge_coloring(k4, kc.colors).ok());
  CHECK(validate_edge_coloring(k4, kc.colors).max_color <= 8);
}

}  // TEST_SUITE

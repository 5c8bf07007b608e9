// Shared helpers for the test binaries: instance corpora and second,
// independent implementations of the ground-truth checks.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hypermatch/generators.hpp"
#include "hypermatch/hypergraph.hpp"
#include "hypermatch/packing_mis.hpp"

namespace testing_support {

using namespace hypermatch;

/// Random rank-<=r hypergraph with at least one edge.
inline Hypergraph random_instance(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m, std::size_t r) {
  const std::size_t n = std::max<std::size_t>(r, 4 + uniform_below(rng, max_n - 3));
  const std::size_t m = 1 + uniform_below(rng, max_m);
  return random_hypergraph(n, m, r, rng);
}

/// Random valid (1/d)-fractional matching: edges in random order take a random
/// multiple of 1/d that fits the residual capacity of their vertices.
inline FractionalAssignment random_fractional_matching(const Hypergraph& h, std::uint64_t d, std::mt19937_64& rng) {
  const int exp = floor_log2(d);
  std::vector<std::uint64_t> used(h.num_vertices(), 0);  // in units of 1/d
  FractionalAssignment x = FractionalAssignment::zeros(h.num_edges(), Dyadic::inverse_pow2(exp));
  std::vector<EdgeId> order(h.num_edges());
  std::iota(order.begin(), order.end(), EdgeId{0});
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  for (EdgeId e : order) {
    std::uint64_t room = d;
    for (VertexId v : h.edge(e)) room = std::min(room, d - used[v]);
    if (room == 0) continue;
    const std::uint64_t k = uniform_below(rng, room + 1);
    if (k == 0) continue;
    x.values[e] = Dyadic(static_cast<std::int64_t>(k), exp);
    for (VertexId v : h.edge(e)) used[v] += k;
  }
  return x;
}

/// Maximum matching by plain subset enumeration (m <= 20).
inline std::size_t brute_max_matching(const Hypergraph& h) {
  const std::size_t m = h.num_edges();
  std::vector<std::uint64_t> vmask(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    for (VertexId v : h.edge(e)) vmask[e] |= std::uint64_t{1} << v;
  }
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::uint64_t seen = 0;
    bool ok = true;
    for (std::uint64_t rest = s; rest != 0 && ok; rest &= rest - 1) {
      const int e = std::countr_zero(rest);
      ok = (seen & vmask[e]) == 0;
      seen |= vmask[e];
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

/// Maximum independent set by subset enumeration (n <= 20).
inline std::size_t brute_mis(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::uint64_t rest = s; rest != 0 && ok; rest &= rest - 1) ok = (adj[std::countr_zero(rest)] & s) == 0;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

/// Nash-Williams maximum by subset enumeration with edge counting per subset.
inline std::size_t brute_arboricity(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto k = static_cast<std::size_t>(std::popcount(s));
    if (k < 2) continue;
    std::size_t e = 0;
    for (auto [u, v] : g.edges()) e += ((s >> u) & 1) && ((s >> v) & 1);
    best = std::max(best, (e + k - 2) / (k - 1));
  }
  return best;
}

/// Neighborhood independence by enumeration of neighbor subsets.
inline std::size_t brute_neighborhood_independence(const Graph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto nb = g.neighbors(v);
    const std::size_t k = nb.size();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        if (!((s >> i) & 1)) continue;
        for (std::size_t j = i + 1; j < k && ok; ++j) ok = !(((s >> j) & 1) && g.adjacent(nb[i], nb[j]));
      }
      if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
    }
  }
  return best;
}

/// Does some order of the positive nodes witness a greedy packing? (n <= 8)
inline bool some_order_is_greedy(const Graph& g, const std::vector<Dyadic>& x) {
  std::vector<VertexId> pos;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (x[v].is_positive()) pos.push_back(v);
  }
  do {
    GreedyPacking p{{x, kZero}, pos};
    if (verify_greedy_packing(g, p).valid) return true;
  } while (std::next_permutation(pos.begin(), pos.end()));
  return false;
}

inline Dyadic sum(const std::vector<Dyadic>& values) {
  Dyadic s;
  for (const auto& v : values) s += v;
  return s;
}

inline Graph petersen() {
  return Graph::build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

}  // namespace testing_support

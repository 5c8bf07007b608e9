#include "hypermatch/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace hypermatch {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw OracleBudgetExceeded(what);
}

struct MatchingSearch {
  const Hypergraph& h;
  std::vector<char> used;
  std::vector<EdgeId> current;
  std::vector<EdgeId> best;

  bool fits(EdgeId e) const {
    const auto vs = h.edge(e);
    return std::none_of(vs.begin(), vs.end(), [&](VertexId v) { return used[v] != 0; });
  }

  void set(EdgeId e, char value) {
    for (VertexId v : h.edge(e)) used[v] = value;
  }

  void run(EdgeId next) {
    if (current.size() > best.size()) best = current;
    const std::size_t m = h.num_edges();
    if (current.size() + (m - next) <= best.size()) return;
    for (EdgeId e = next; e < m; ++e) {
      if (current.size() + (m - e) <= best.size()) return;
      if (!fits(e)) continue;
      set(e, 1);
      current.push_back(e);
      run(e + 1);
      current.pop_back();
      set(e, 0);
    }
  }
};

using Mask = std::uint64_t;

// Maximum independent set inside `candidates` for adjacency masks.
std::size_t mis_masks(const std::vector<Mask>& adj, Mask candidates, Mask& witness) {
  if (candidates == 0) {
    witness = 0;
    return 0;
  }
  int pick = -1;
  int pick_degree = -1;
  for (Mask rest = candidates; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int deg = std::popcount(adj[v] & candidates);
    if (deg > pick_degree) {
      pick = v;
      pick_degree = deg;
    }
  }
  const Mask bit = Mask{1} << pick;
  if (pick_degree == 0) {
    witness = candidates;
    return static_cast<std::size_t>(std::popcount(candidates));
  }
  Mask with_w = 0;
  const std::size_t with = 1 + mis_masks(adj, candidates & ~bit & ~adj[pick], with_w);
  Mask without_w = 0;
  const std::size_t without = mis_masks(adj, candidates & ~bit, without_w);
  if (with >= without) {
    witness = with_w | bit;
    return with;
  }
  witness = without_w;
  return without;
}

}  // namespace

MatchingOracleResult max_matching_oracle(const Hypergraph& h, const OracleBudget& budget) {
  require(h.num_edges() <= budget.matching_edges,
          "max_matching_oracle: " + std::to_string(h.num_edges()) + " edges exceeds budget " +
              std::to_string(budget.matching_edges));
  MatchingSearch search{h, std::vector<char>(h.num_vertices(), 0), {}, {}};
  search.run(0);
  return {search.best.size(), Matching{search.best}};
}

IndependentSetOracleResult max_independent_set_oracle(const Graph& g, const OracleBudget& budget) {
  require(g.num_vertices() <= budget.mis_nodes && g.num_vertices() <= 64,
          "max_independent_set_oracle: " + std::to_string(g.num_vertices()) + " nodes exceeds budget " +
              std::to_string(budget.mis_nodes));
  const std::size_t n = g.num_vertices();
  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  Mask witness = 0;
  IndependentSetOracleResult out;
  out.size = mis_masks(adj, all, witness);
  for (Mask rest = witness; rest != 0; rest &= rest - 1) out.witness.push_back(static_cast<VertexId>(std::countr_zero(rest)));
  return out;
}

std::size_t arboricity_oracle(const Graph& g, const OracleBudget& budget) {
  require(g.num_vertices() <= budget.arboricity_nodes && g.num_vertices() <= 30,
          "arboricity_oracle: " + std::to_string(g.num_vertices()) + " nodes exceeds budget " +
              std::to_string(budget.arboricity_nodes));
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int size = std::popcount(s);
    if (size < 2) continue;
    std::size_t twice_edges = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      twice_edges += static_cast<std::size_t>(std::popcount(adj[std::countr_zero(rest)] & s));
    }
    const std::size_t edges = twice_edges / 2;
    const std::size_t denom = static_cast<std::size_t>(size - 1);
    best = std::max(best, (edges + denom - 1) / denom);
  }
  return best;
}

std::size_t neighborhood_independence_oracle(const Graph& g, const OracleBudget& budget) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto nb = g.neighbors(v);
    require(nb.size() <= budget.neighborhood_size && nb.size() <= 64,
            "neighborhood_independence_oracle: vertex " + std::to_string(v) + " has " + std::to_string(nb.size()) +
                " neighbors, budget " + std::to_string(budget.neighborhood_size));
    std::vector<Mask> adj(nb.size(), 0);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) {
          adj[i] |= Mask{1} << j;
          adj[j] |= Mask{1} << i;
        }
      }
    }
    const Mask all = nb.size() == 64 ? ~Mask{0} : (Mask{1} << nb.size()) - 1;
    Mask witness = 0;
    best = std::max(best, mis_masks(adj, all, witness));
  }
  return best;
}

std::vector<Matching> enumerate_maximal_matchings(const Hypergraph& h, const OracleBudget& budget) {
  require(h.num_edges() <= budget.enumeration_edges && h.num_edges() <= 30,
          "enumerate_maximal_matchings: " + std::to_string(h.num_edges()) + " edges exceeds budget " +
              std::to_string(budget.enumeration_edges));
  const std::size_t m = h.num_edges();
  std::vector<std::uint32_t> conflicts(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    for (EdgeId f : h.adjacent_edges(e)) conflicts[e] |= 1u << f;
  }
  std::vector<Matching> out;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    bool ok = true;
    std::uint32_t blocked = s;
    for (std::uint32_t rest = s; rest != 0 && ok; rest &= rest - 1) {
      const int e = std::countr_zero(rest);
      if (conflicts[e] & s) ok = false;
      blocked |= conflicts[e];
    }
    if (!ok) continue;
    const std::uint32_t all = m == 32 ? ~0u : (1u << m) - 1;
    if (blocked != all) continue;
    Matching mm;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) mm.edges.push_back(static_cast<EdgeId>(std::countr_zero(rest)));
    out.push_back(std::move(mm));
  }
  return out;
}

}  // namespace hypermatch

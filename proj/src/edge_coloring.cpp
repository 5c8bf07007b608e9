#include "hypermatch/edge_coloring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "hypermatch/matching_rounding.hpp"

namespace hypermatch {

std::vector<std::size_t> edge_degrees(const Hypergraph& h) {
  std::vector<std::size_t> out(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) out[e] = h.adjacent_edges(e).size();
  return out;
}

std::vector<std::size_t> edge_degrees(const Graph& g) {
  std::vector<std::size_t> out(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    out[e] = g.degree(u) + g.degree(v) - 2;
  }
  return out;
}

EdgeLists default_lists(const Graph& g) {
  const auto deg = edge_degrees(g);
  EdgeLists lists(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (std::size_t c = 1; c <= deg[e] + 1; ++c) lists[e].push_back(static_cast<std::int64_t>(c));
  }
  return lists;
}

ColoringReduction reduce_edge_coloring(const Graph& g) {
  if (g.max_degree() == 0) throw std::invalid_argument("reduce_edge_coloring: requires max degree >= 1");
  const std::size_t n = g.num_vertices();
  const std::size_t k = 2 * g.max_degree() - 1;
  ColoringReduction red;
  red.base_edges = g.num_edges();
  red.copy_vertices = k * n;
  std::vector<std::vector<VertexId>> hedges;
  hedges.reserve(g.num_edges() * k);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    const auto w = static_cast<VertexId>(k * n + e);
    for (std::size_t i = 1; i <= k; ++i) {
      hedges.push_back({static_cast<VertexId>((i - 1) * n + u), static_cast<VertexId>((i - 1) * n + v), w});
      red.decode.push_back({e, static_cast<std::int64_t>(i)});
    }
  }
  red.hypergraph = Hypergraph::build(k * n + g.num_edges(), std::move(hedges));
  return red;
}

ColoringReduction reduce_hypergraph_list_edge_coloring(const Hypergraph& h, const EdgeLists& lists) {
  if (lists.size() != h.num_edges()) {
    throw std::invalid_argument("list-edge-coloring: " + std::to_string(lists.size()) + " lists for " +
                                std::to_string(h.num_edges()) + " edges");
  }
  const auto deg = edge_degrees(h);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (lists[e].size() < deg[e] + 1) {
      throw std::invalid_argument("list-edge-coloring: edge " + std::to_string(e) + " has a list of size " +
                                  std::to_string(lists[e].size()) + ", needs at least " + std::to_string(deg[e] + 1));
    }
    std::set<std::int64_t> seen;
    for (auto c : lists[e]) {
      if (c < 0) throw std::invalid_argument("list-edge-coloring: edge " + std::to_string(e) + " has negative color");
      if (!seen.insert(c).second) {
        throw std::invalid_argument("list-edge-coloring: edge " + std::to_string(e) + " lists color " +
                                    std::to_string(c) + " twice");
      }
    }
  }
  std::vector<std::pair<VertexId, std::int64_t>> copies;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for (VertexId v : h.edge(e)) {
      for (auto c : lists[e]) copies.emplace_back(v, c);
    }
  }
  std::sort(copies.begin(), copies.end());
  copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
  auto copy_id = [&](VertexId v, std::int64_t c) {
    return static_cast<VertexId>(std::lower_bound(copies.begin(), copies.end(), std::make_pair(v, c)) - copies.begin());
  };

  ColoringReduction red;
  red.base_edges = h.num_edges();
  red.copy_vertices = copies.size();
  std::vector<std::vector<VertexId>> hedges;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto w = static_cast<VertexId>(copies.size() + e);
    for (auto c : lists[e]) {
      std::vector<VertexId> vs;
      for (VertexId v : h.edge(e)) vs.push_back(copy_id(v, c));
      vs.push_back(w);
      hedges.push_back(std::move(vs));
      red.decode.push_back({e, c});
    }
  }
  red.hypergraph = Hypergraph::build(copies.size() + h.num_edges(), std::move(hedges));
  return red;
}

ColoringReduction reduce_list_edge_coloring(const Graph& g, const EdgeLists& lists) {
  return reduce_hypergraph_list_edge_coloring(g.as_hypergraph(), lists);
}

std::vector<std::int64_t> decode_coloring(const ColoringReduction& red, const Matching& m) {
  std::vector<std::int64_t> colors(red.base_edges, 0);
  std::vector<std::size_t> hits(red.base_edges, 0);
  for (EdgeId he : m.edges) {
    const auto& copy = red.decode.at(he);
    colors[copy.base] = copy.color;
    ++hits[copy.base];
  }
  for (EdgeId e = 0; e < red.base_edges; ++e) {
    if (hits[e] != 1) {
      throw std::logic_error("decode: edge " + std::to_string(e) + " has " + std::to_string(hits[e]) +
                             " matched copies, expected exactly one");
    }
  }
  return colors;
}

EdgeColoring edge_color(const Graph& g, RoundLedger* ledger) {
  if (g.num_edges() == 0) return {};
  const auto red = reduce_edge_coloring(g);
  const auto mm = maximal_matching(red.hypergraph, std::nullopt, ledger);
  return {decode_coloring(red, mm.matching)};
}

EdgeColoring hypergraph_list_edge_color(const Hypergraph& h, const EdgeLists& lists, RoundLedger* ledger) {
  const auto red = reduce_hypergraph_list_edge_coloring(h, lists);
  if (h.num_edges() == 0) return {};
  const auto mm = maximal_matching(red.hypergraph, std::nullopt, ledger);
  return {decode_coloring(red, mm.matching)};
}

EdgeColoring list_edge_color(const Graph& g, const EdgeLists& lists, RoundLedger* ledger) {
  return hypergraph_list_edge_color(g.as_hypergraph(), lists, ledger);
}

EdgeColoringVerdict validate_edge_coloring(const Hypergraph& h, const std::vector<std::int64_t>& colors,
                                           const EdgeLists* lists) {
  EdgeColoringVerdict verdict;
  if (colors.size() != h.num_edges()) {
    verdict.proper = false;
    verdict.witness = std::to_string(colors.size()) + " colors for " + std::to_string(h.num_edges()) + " edges";
    return verdict;
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    verdict.max_color = std::max(verdict.max_color, colors[e]);
    if (lists != nullptr && verdict.in_lists) {
      const auto& l = (*lists)[e];
      if (std::find(l.begin(), l.end(), colors[e]) == l.end()) {
        verdict.in_lists = false;
        if (verdict.witness.empty()) {
          verdict.witness = "edge " + std::to_string(e) + " color " + std::to_string(colors[e]) + " not in its list";
        }
      }
    }
    if (verdict.proper) {
      for (EdgeId f : h.adjacent_edges(e)) {
        if (f > e && colors[f] == colors[e]) {
          verdict.proper = false;
          if (verdict.witness.empty()) {
            verdict.witness = "adjacent edges " + std::to_string(e) + " and " + std::to_string(f) + " share color " +
                              std::to_string(colors[e]);
          }
          break;
        }
      }
    }
  }
  return verdict;
}

EdgeColoringVerdict validate_edge_coloring(const Graph& g, const std::vector<std::int64_t>& colors,
                                           const EdgeLists* lists) {
  return validate_edge_coloring(g.as_hypergraph(), colors, lists);
}

EdgeColoring randomized_edge_color(const Graph& g, std::uint64_t seed, RoundLedger* ledger, RandomizedStats* stats) {
  RandomizedStats local;
  EdgeColoring out;
  const std::size_t m = g.num_edges();
  out.colors.assign(m, 0);
  if (m == 0) {
    if (stats) *stats = local;
    return out;
  }
  const std::size_t delta = g.max_degree();
  const auto palette_size = static_cast<std::int64_t>(2 * delta - 1);
  std::vector<std::vector<std::int64_t>> palette(m);
  for (auto& p : palette) {
    for (std::int64_t c = 1; c <= palette_size; ++c) p.push_back(c);
  }
  const Hypergraph h = g.as_hypergraph();
  std::vector<std::vector<EdgeId>> adjacent(m);
  for (EdgeId e = 0; e < m; ++e) adjacent[e] = h.adjacent_edges(e);

  std::mt19937_64 rng(seed);
  const double lg = std::log2(static_cast<double>(delta));
  local.trial_rounds = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(4.0 * lg)));
  std::vector<std::int64_t> pick(m, 0);
  for (std::size_t round = 0; round < local.trial_rounds; ++round) {
    for (EdgeId e = 0; e < m; ++e) {
      if (out.colors[e] == 0) pick[e] = palette[e][rng() % palette[e].size()];
    }
    std::vector<EdgeId> won;
    for (EdgeId e = 0; e < m; ++e) {
      if (out.colors[e] != 0) continue;
      const bool clash = std::any_of(adjacent[e].begin(), adjacent[e].end(),
                                     [&](EdgeId f) { return out.colors[f] == 0 && pick[f] == pick[e]; });
      if (!clash) won.push_back(e);
    }
    for (EdgeId e : won) out.colors[e] = pick[e];
    for (EdgeId e : won) {
      for (EdgeId f : adjacent[e]) {
        if (out.colors[f] == 0) std::erase(palette[f], pick[e]);
      }
    }
  }
  charge(ledger, "rand_trial", local.trial_rounds, "one round per trial round, max(1, ceil(4 log2 D))");

  // Components of the uncolored edges, finished with residual palettes.
  std::vector<EdgeId> component(m, static_cast<EdgeId>(-1));
  for (EdgeId s = 0; s < m; ++s) {
    if (out.colors[s] != 0 || component[s] != static_cast<EdgeId>(-1)) continue;
    std::vector<EdgeId> members{s};
    component[s] = s;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (EdgeId f : adjacent[members[i]]) {
        if (out.colors[f] == 0 && component[f] == static_cast<EdgeId>(-1)) {
          component[f] = s;
          members.push_back(f);
        }
      }
    }
    std::sort(members.begin(), members.end());
    local.uncolored_after_trials += members.size();
    ++local.leftover_components;
    local.largest_component = std::max(local.largest_component, members.size());
    std::vector<std::pair<VertexId, VertexId>> sub_edges;
    EdgeLists sub_lists;
    for (EdgeId e : members) {
      sub_edges.push_back(g.edge(e));
      sub_lists.push_back(palette[e]);
    }
    const Graph sub = Graph::build(g.num_vertices(), sub_edges);
    const auto colored = list_edge_color(sub, sub_lists, ledger);
    for (std::size_t i = 0; i < members.size(); ++i) out.colors[members[i]] = colored.colors[i];
  }
  if (stats) *stats = local;
  return out;
}

HPartition h_partition(const Graph& g, std::int64_t a, Rational eps, RoundLedger* ledger) {
  if (a < 0) throw std::invalid_argument("h_partition: arboricity bound must be nonnegative");
  HPartition hp;
  hp.threshold = {(2 * eps.den + eps.num) * a, eps.den};
  const std::size_t n = g.num_vertices();
  hp.layer.assign(n, 0);
  std::vector<std::size_t> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::size_t assigned = 0;
  while (assigned < n) {
    ++hp.layers;
    std::vector<VertexId> peel;
    for (VertexId v = 0; v < n; ++v) {
      if (hp.layer[v] == 0 &&
          static_cast<std::int64_t>(degree[v]) * hp.threshold.den <= hp.threshold.num) {
        peel.push_back(v);
      }
    }
    if (peel.empty()) {
      throw PeelingStalled("h_partition: no vertex of degree <= " + hp.threshold.str() + " among " +
                           std::to_string(n - assigned) + " remaining; arboricity exceeds " + std::to_string(a));
    }
    for (VertexId v : peel) hp.layer[v] = hp.layers;
    for (VertexId v : peel) {
      for (VertexId u : g.neighbors(v)) {
        if (hp.layer[u] == 0) --degree[u];
      }
    }
    assigned += peel.size();
  }
  charge(ledger, "h_partition", hp.layers, "one round per peeled layer");
  return hp;
}

bool validate_h_partition(const Graph& g, const HPartition& hp) {
  if (hp.layer.size() != g.num_vertices()) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (hp.layer[v] < 1 || hp.layer[v] > hp.layers) return false;
    std::int64_t later = 0;
    for (VertexId u : g.neighbors(v)) later += hp.layer[u] >= hp.layer[v] ? 1 : 0;
    if (later * hp.threshold.den > hp.threshold.num) return false;
  }
  return true;
}

std::int64_t arboricity_palette(const Graph& g, std::int64_t a, Rational eps) {
  const Rational t{(2 * eps.den + eps.num) * a, eps.den};
  return static_cast<std::int64_t>(g.max_degree()) + (t.num + t.den - 1) / t.den - 1;
}

EdgeColoring arboricity_edge_color(const Graph& g, std::int64_t a, Rational eps, RoundLedger* ledger) {
  const HPartition hp = h_partition(g, a, eps, ledger);
  const std::int64_t palette = arboricity_palette(g, a, eps);
  EdgeColoring out;
  out.colors.assign(g.num_edges(), 0);
  for (std::size_t i = hp.layers; i >= 1; --i) {
    std::vector<EdgeId> fresh;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto [u, v] = g.edge(e);
      if (std::min(hp.layer[u], hp.layer[v]) == i) fresh.push_back(e);
    }
    if (fresh.empty()) continue;
    std::vector<std::pair<VertexId, VertexId>> sub_edges;
    EdgeLists lists;
    for (EdgeId e : fresh) {
      auto [u, v] = g.edge(e);
      sub_edges.push_back({u, v});
      std::set<std::int64_t> used;
      for (VertexId x : {u, v}) {
        for (EdgeId f : g.incident_edges(x)) {
          if (out.colors[f] != 0) used.insert(out.colors[f]);
        }
      }
      std::vector<std::int64_t> list;
      for (std::int64_t c = 1; c <= palette; ++c) {
        if (!used.count(c)) list.push_back(c);
      }
      lists.push_back(std::move(list));
    }
    const Graph sub = Graph::build(g.num_vertices(), sub_edges);
    const auto colored = list_edge_color(sub, lists, ledger);
    for (std::size_t j = 0; j < fresh.size(); ++j) out.colors[fresh[j]] = colored.colors[j];
  }
  return out;
}

}  // namespace hypermatch

#include "hypermatch/applications.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "hypermatch/matching_rounding.hpp"

namespace hypermatch {

namespace {

struct PathSearch {
  const Graph& g;
  const std::vector<VertexId>& mate;
  const std::vector<char>& blocked;
  std::size_t length;
  std::size_t cap;
  std::vector<char> on_path;
  NodePath path;
  std::vector<NodePath> out;

  bool is_free(VertexId v) const { return mate[v] == v; }

  void extend() {
    const std::size_t steps = path.size() - 1;
    const VertexId last = path.back();
    if (steps == length) {
      if (is_free(last) && path.front() < last) {
        if (out.size() >= cap) {
          throw EnumerationCapExceeded("augmenting path enumeration exceeded " + std::to_string(cap) + " paths");
        }
        out.push_back(path);
      }
      return;
    }
    if (steps % 2 == 1) {
      // Matched edge next.
      if (is_free(last)) return;
      const VertexId u = mate[last];
      if (on_path[u] || blocked[u]) return;
      push(u);
      return;
    }
    for (VertexId u : g.neighbors(last)) {
      if (on_path[u] || blocked[u] || mate[last] == u) continue;
      // Interior nodes must be matched; only the final node may be free.
      if (is_free(u) != (steps + 1 == length)) continue;
      push(u);
    }
  }

  void push(VertexId u) {
    on_path[u] = 1;
    path.push_back(u);
    extend();
    path.pop_back();
    on_path[u] = 0;
  }
};

}  // namespace

std::vector<NodePath> augmenting_paths(const Graph& g, const std::vector<VertexId>& mate, std::size_t length,
                                       const std::vector<char>& blocked, const PathLimits& limits) {
  if (length % 2 == 0) throw std::invalid_argument("augmenting_paths: length must be odd");
  PathSearch search{g, mate, blocked, length, limits.max_paths, std::vector<char>(g.num_vertices(), 0), {}, {}};
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (mate[v] != v || blocked[v]) continue;
    search.path.assign(1, v);
    search.on_path[v] = 1;
    search.extend();
    search.on_path[v] = 0;
  }
  return std::move(search.out);
}

bool is_graph_matching(const Graph& g, const std::vector<EdgeId>& edges, std::string* witness) {
  std::vector<char> used(g.num_vertices(), 0);
  std::vector<char> seen(g.num_edges(), 0);
  for (EdgeId e : edges) {
    if (e >= g.num_edges() || seen[e]) {
      if (witness) *witness = "edge id " + std::to_string(e) + " out of range or repeated";
      return false;
    }
    seen[e] = 1;
    const auto [u, v] = g.edge(e);
    if (used[u] || used[v]) {
      if (witness) *witness = "edge " + std::to_string(e) + " shares an endpoint with another matched edge";
      return false;
    }
    used[u] = used[v] = 1;
  }
  return true;
}

GraphMatchingResult approx_max_graph_matching(const Graph& g, Rational eps, MatchingMode mode, RoundLedger* ledger,
                                              const PathLimits& limits) {
  if (eps.num > eps.den) throw std::invalid_argument("approx_max_graph_matching: eps must be in (0, 1]");
  const std::size_t n = g.num_vertices();
  const std::size_t k = static_cast<std::size_t>(eps.ceil_inverse());
  std::vector<VertexId> mate(n);
  std::iota(mate.begin(), mate.end(), VertexId{0});
  std::vector<char> dropped(n, 0);
  std::optional<double> slack;
  if (mode == MatchingMode::almost_maximal && g.max_degree() > 0) {
    slack = eps.value() * std::pow(static_cast<double>(g.max_degree()), -static_cast<double>(k)) / 4.0;
  }

  GraphMatchingResult result;
  std::size_t size = 0;
  for (std::size_t len = 1; len <= 2 * k - 1; len += 2) {
    GraphMatchingPhase phase;
    phase.length = len;
    const auto paths = augmenting_paths(g, mate, len, dropped, limits);
    charge(ledger, "augmenting_paths", len, "gather the l-hop neighborhood to list augmenting paths of length l");
    phase.paths_found = paths.size();
    if (!paths.empty()) {
      // Hypergraph vertex v for a free node v, n + e for matching edge e.
      std::vector<std::vector<VertexId>> hedges;
      hedges.reserve(paths.size());
      for (const auto& p : paths) {
        std::vector<VertexId> he{p.front(), p.back()};
        for (std::size_t i = 1; i + 1 < p.size(); i += 2) he.push_back(static_cast<VertexId>(n + *g.edge_id(p[i], p[i + 1])));
        hedges.push_back(std::move(he));
      }
      const Hypergraph h = Hypergraph::build(n + g.num_edges(), std::move(hedges));
      const auto mm = maximal_matching(h, slack, ledger);
      for (EdgeId pe : mm.matching.edges) {
        const auto& p = paths[pe];
        for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
          mate[p[i]] = p[i + 1];
          mate[p[i + 1]] = p[i];
        }
      }
      phase.augmented = mm.matching.size();
      size += mm.matching.size();
      for (EdgeId pe : mm.unblocked) {
        for (VertexId v : paths[pe]) {
          if (!dropped[v]) {
            dropped[v] = 1;
            ++phase.dropped_nodes;
          }
        }
      }
    }
    phase.matching_size = size;
    result.phases.push_back(phase);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    if (mate[u] == v) result.edges.push_back(e);
  }
  return result;
}

Orientation orientation_from_tails(const Graph& g, std::vector<VertexId> tail) {
  Orientation o;
  o.out_degree.assign(g.num_vertices(), 0);
  for (VertexId t : tail) {
    if (t < g.num_vertices()) ++o.out_degree[t];
  }
  o.tail = std::move(tail);
  return o;
}

std::vector<std::pair<VertexId, VertexId>> orientation_pairs(const Graph& g, const Orientation& o) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    out.emplace_back(o.tail[e], o.tail[e] == u ? v : u);
  }
  return out;
}

Orientation orientation_from_pairs(const Graph& g, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  std::vector<VertexId> tail(g.num_edges(), 0);
  std::vector<char> seen(g.num_edges(), 0);
  for (const auto& [u, v] : pairs) {
    const auto e = (u < g.num_vertices() && v < g.num_vertices()) ? g.edge_id(u, v) : std::nullopt;
    if (!e) throw std::invalid_argument("orientation line " + std::to_string(u) + " " + std::to_string(v) + " is not an edge");
    if (seen[*e]) throw std::invalid_argument("edge " + std::to_string(*e) + " oriented twice");
    seen[*e] = 1;
    tail[*e] = u;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!seen[e]) throw std::invalid_argument("edge " + std::to_string(e) + " has no orientation");
  }
  return orientation_from_tails(g, std::move(tail));
}

std::size_t orientation_bound(std::size_t lambda, Rational eps) {
  const auto l = static_cast<std::int64_t>(lambda);
  return static_cast<std::size_t>((l * (eps.num + eps.den) + eps.den - 1) / eps.den);
}

std::size_t orientation_iterations(std::size_t n, Rational eps) {
  if (n <= 1) return 1;
  const double value = 4.0 * std::log2(static_cast<double>(n)) * static_cast<double>(eps.den) / static_cast<double>(eps.num);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(value - 1e-9)));
}

std::size_t orientation_excess(const Orientation& o, std::size_t bound) {
  std::size_t total = 0;
  for (std::size_t d : o.out_degree) total += d > bound ? d - bound : 0;
  return total;
}

namespace {

struct DirectedPaths {
  const Graph& g;
  const Orientation& o;
  const std::vector<char>& is_target;
  std::size_t length;
  std::size_t cap;
  std::size_t weight_total = 0;  ///< hyperedges the paths will expand to
  const std::vector<std::size_t>& weight_of_end;
  std::size_t start_weight = 0;
  std::vector<char> on_path;
  std::vector<EdgeId> edges;
  std::vector<VertexId> nodes;
  std::vector<std::pair<std::vector<EdgeId>, std::pair<VertexId, VertexId>>> out;

  void extend(VertexId v) {
    if (edges.size() == length) {
      if (is_target[v]) {
        weight_total += start_weight * weight_of_end[v];
        if (weight_total > cap) {
          throw EnumerationCapExceeded("orientation path enumeration exceeded " + std::to_string(cap) + " hyperedges");
        }
        out.push_back({edges, {nodes.front(), v}});
      }
      return;
    }
    const auto nb = g.neighbors(v);
    const auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const VertexId u = nb[i];
      if (o.tail[inc[i]] != v || on_path[u]) continue;
      on_path[u] = 1;
      edges.push_back(inc[i]);
      nodes.push_back(u);
      extend(u);
      nodes.pop_back();
      edges.pop_back();
      on_path[u] = 0;
    }
  }
};

}  // namespace

OrientationResult low_outdegree_orientation(const Graph& g, std::size_t lambda, Rational eps, RoundLedger* ledger,
                                            const PathLimits& limits) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  OrientationResult result;
  result.bound = orientation_bound(lambda, eps);
  result.max_iterations = orientation_iterations(n, eps);
  const std::size_t D = result.bound;

  std::vector<VertexId> tail(m);
  for (EdgeId e = 0; e < m; ++e) tail[e] = g.edge(e).first;
  result.orientation = orientation_from_tails(g, std::move(tail));
  Orientation& o = result.orientation;

  for (std::size_t i = 0; i < result.max_iterations; ++i) {
    OrientationIteration it;
    it.length = 3 + i;
    it.excess_before = orientation_excess(o, D);
    if (it.excess_before == 0) break;
    charge(ledger, "orientation_paths", it.length, "gather the (3+i)-hop neighborhood to list augmenting paths");

    std::vector<std::size_t> excess(n, 0), deficit(n, 0);
    std::vector<char> is_target(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      if (o.out_degree[v] > D) excess[v] = o.out_degree[v] - D;
      if (o.out_degree[v] < D) {
        deficit[v] = D - o.out_degree[v];
        is_target[v] = 1;
      }
    }
    DirectedPaths search{g, o, is_target, 1 + i, limits.max_paths, 0, deficit, 0, std::vector<char>(n, 0), {}, {}, {}};
    for (VertexId v = 0; v < n; ++v) {
      if (excess[v] == 0) continue;
      search.start_weight = excess[v];
      search.on_path[v] = 1;
      search.nodes.assign(1, v);
      search.extend(v);
      search.on_path[v] = 0;
    }

    if (!search.out.empty()) {
      // Hypergraph vertices: graph edges, then s-copies, then t-copies.
      std::vector<std::size_t> s_first(n + 1, m), t_first(n + 1, 0);
      for (VertexId v = 0; v < n; ++v) s_first[v + 1] = s_first[v] + excess[v];
      t_first[0] = s_first[n];
      for (VertexId v = 0; v < n; ++v) t_first[v + 1] = t_first[v] + deficit[v];
      std::vector<std::vector<VertexId>> hedges;
      std::vector<std::size_t> path_of;
      for (std::size_t p = 0; p < search.out.size(); ++p) {
        const auto& [edges, ends] = search.out[p];
        for (std::size_t a = 0; a < excess[ends.first]; ++a) {
          for (std::size_t b = 0; b < deficit[ends.second]; ++b) {
            std::vector<VertexId> he(edges.begin(), edges.end());
            he.push_back(static_cast<VertexId>(s_first[ends.first] + a));
            he.push_back(static_cast<VertexId>(t_first[ends.second] + b));
            hedges.push_back(std::move(he));
            path_of.push_back(p);
          }
        }
      }
      it.paths_found = hedges.size();
      const Hypergraph h = Hypergraph::build(t_first[n], std::move(hedges));
      const auto mm = maximal_matching(h, std::nullopt, ledger);
      for (EdgeId he : mm.matching.edges) {
        const auto& [edges, ends] = search.out[path_of[he]];
        for (EdgeId e : edges) {
          const auto [u, v] = g.edge(e);
          const VertexId old_tail = o.tail[e];
          const VertexId new_tail = old_tail == u ? v : u;
          o.tail[e] = new_tail;
          --o.out_degree[old_tail];
          ++o.out_degree[new_tail];
        }
      }
      it.reversed = mm.matching.size();
    }
    it.excess_after = orientation_excess(o, D);
    result.iterations.push_back(it);
  }
  const std::size_t left = orientation_excess(o, D);
  if (left > 0) {
    throw OrientationIncomplete("out-degree bound " + std::to_string(D) + " still exceeded by " + std::to_string(left) +
                                " after " + std::to_string(result.max_iterations) +
                                " iterations; lambda is below the arboricity");
  }
  return result;
}

OrientationVerdict validate_orientation(const Graph& g, const Orientation& o, std::size_t bound) {
  OrientationVerdict verdict;
  if (o.tail.size() != g.num_edges() || o.out_degree.size() != g.num_vertices()) {
    verdict.consistent = false;
    verdict.witness = "orientation size does not match the graph";
    return verdict;
  }
  std::vector<std::size_t> count(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    if (o.tail[e] != u && o.tail[e] != v) {
      verdict.consistent = false;
      verdict.witness = "edge " + std::to_string(e) + " has tail outside its endpoints";
      return verdict;
    }
    ++count[o.tail[e]];
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (count[v] != o.out_degree[v]) {
      verdict.consistent = false;
      verdict.witness = "node " + std::to_string(v) + " out-degree record disagrees with the directions";
      return verdict;
    }
    verdict.max_out_degree = std::max(verdict.max_out_degree, count[v]);
    if (count[v] > bound && verdict.within_bound) {
      verdict.within_bound = false;
      verdict.witness = "node " + std::to_string(v) + " has out-degree " + std::to_string(count[v]) + " > " +
                        std::to_string(bound);
    }
  }
  return verdict;
}

std::vector<std::int64_t> pseudo_forest_decomposition(const Graph& g, const Orientation& o) {
  std::vector<std::int64_t> cls(g.num_edges(), 0);
  std::vector<std::int64_t> next(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) cls[e] = ++next[o.tail[e]];
  return cls;
}

PseudoForestVerdict validate_pseudo_forests(const Graph& g, const std::vector<std::int64_t>& cls,
                                            std::size_t max_classes) {
  PseudoForestVerdict verdict;
  if (cls.size() != g.num_edges()) {
    verdict.ok = false;
    verdict.witness = "class count does not match edge count";
    return verdict;
  }
  std::int64_t top = 0;
  for (std::int64_t c : cls) {
    if (c < 1) {
      verdict.ok = false;
      verdict.witness = "class ids must be >= 1";
      return verdict;
    }
    top = std::max(top, c);
  }
  verdict.classes = static_cast<std::size_t>(top);
  if (max_classes > 0 && verdict.classes > max_classes) {
    verdict.ok = false;
    verdict.witness = std::to_string(verdict.classes) + " classes exceed the bound " + std::to_string(max_classes);
    return verdict;
  }
  const std::size_t n = g.num_vertices();
  for (std::int64_t c = 1; c <= top; ++c) {
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::vector<std::size_t> nodes(n, 1), edges(n, 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (cls[e] != c) continue;
      const auto [u, v] = g.edge(e);
      VertexId a = find(u), b = find(v);
      if (a != b) {
        parent[b] = a;
        nodes[a] += nodes[b];
        edges[a] += edges[b];
      }
      ++edges[a];
    }
    for (VertexId v = 0; v < n; ++v) {
      if (find(v) == v && edges[v] > nodes[v]) {
        verdict.ok = false;
        verdict.witness = "class " + std::to_string(c) + " has a component with more than one cycle";
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace hypermatch

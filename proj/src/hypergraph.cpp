#include "hypermatch/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypermatch {

Hypergraph Hypergraph::build(std::size_t n, std::vector<std::vector<VertexId>> edges) {
  Hypergraph h;
  h.n_ = n;
  h.incidence_.assign(n, {});
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto& vs = edges[e];
    if (vs.empty()) throw std::invalid_argument("hyperedge " + std::to_string(e) + " is empty");
    std::sort(vs.begin(), vs.end());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i] >= n) {
        throw std::invalid_argument("hyperedge " + std::to_string(e) + ": vertex " + std::to_string(vs[i]) +
                                    " out of range (n=" + std::to_string(n) + ")");
      }
      if (i > 0 && vs[i] == vs[i - 1]) {
        throw std::invalid_argument("hyperedge " + std::to_string(e) + ": vertex " + std::to_string(vs[i]) +
                                    " repeated");
      }
    }
    h.rank_ = std::max(h.rank_, vs.size());
    for (VertexId v : vs) h.incidence_[v].push_back(static_cast<EdgeId>(e));
  }
  for (const auto& inc : h.incidence_) h.max_degree_ = std::max(h.max_degree_, inc.size());
  h.edges_ = std::move(edges);
  return h;
}

Hypergraph Hypergraph::restrict_edges(std::span<const EdgeId> keep) const {
  std::vector<std::vector<VertexId>> kept;
  kept.reserve(keep.size());
  for (EdgeId e : keep) kept.push_back(edges_.at(e));
  return build(n_, std::move(kept));
}

std::vector<EdgeId> Hypergraph::adjacent_edges(EdgeId e) const {
  std::vector<EdgeId> out;
  for (VertexId v : edges_[e]) {
    for (EdgeId f : incidence_[v]) {
      if (f != e) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph Graph::build(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph g;
  g.adjacency_.assign(n, {});
  g.incident_.assign(n, {});
  g.edges_.reserve(edges.size());
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge " + std::to_string(e) + " has endpoint out of range (n=" +
                                  std::to_string(n) + ")");
    }
    if (u == v) throw std::invalid_argument("edge " + std::to_string(e) + " is a self-loop");
    if (u > v) std::swap(u, v);
    g.edges_.emplace_back(u, v);
    adj[u].emplace_back(v, static_cast<EdgeId>(e));
    adj[v].emplace_back(u, static_cast<EdgeId>(e));
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].first == list[i - 1].first) {
        throw std::invalid_argument("parallel edges " + std::to_string(list[i - 1].second) + " and " +
                                    std::to_string(list[i].second) + " between " + std::to_string(v) + " and " +
                                    std::to_string(list[i].first));
      }
    }
    for (auto [w, e] : list) {
      g.adjacency_[v].push_back(w);
      g.incident_[v].push_back(e);
    }
    g.max_degree_ = std::max(g.max_degree_, list.size());
  }
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const { return edge_id(u, v).has_value(); }

std::optional<EdgeId> Graph::edge_id(VertexId u, VertexId v) const {
  const auto& nb = adjacency_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_[u][static_cast<std::size_t>(it - nb.begin())];
}

Hypergraph Graph::as_hypergraph() const {
  std::vector<std::vector<VertexId>> hedges;
  hedges.reserve(edges_.size());
  for (auto [u, v] : edges_) hedges.push_back({u, v});
  return Hypergraph::build(num_vertices(), std::move(hedges));
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  constexpr auto kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> local(num_vertices(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<VertexId>(i);
  std::vector<std::pair<VertexId, VertexId>> sub;
  for (auto [u, v] : edges_) {
    if (local[u] != kAbsent && local[v] != kAbsent) sub.emplace_back(local[u], local[v]);
  }
  return build(keep.size(), sub);
}

Dyadic FractionalAssignment::total() const {
  Dyadic sum;
  for (const auto& v : values) sum += v;
  return sum;
}

std::size_t FractionalAssignment::support_size() const {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](const Dyadic& v) {
    return !v.is_zero();
  }));
}

std::optional<Dyadic> FractionalAssignment::min_positive() const {
  std::optional<Dyadic> best;
  for (const auto& v : values) {
    if (v.is_zero()) continue;
    if (!best || v < *best) best = v;
  }
  return best;
}

bool FractionalAssignment::respects_floor() const {
  return std::all_of(values.begin(), values.end(), [&](const Dyadic& v) { return v.is_zero() || v >= floor; });
}

Graph line_graph(const Hypergraph& h) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for (EdgeId f : h.adjacent_edges(e)) {
      if (f > e) edges.emplace_back(e, f);
    }
  }
  return Graph::build(h.num_edges(), edges);
}

std::vector<Dyadic> vertex_loads(const Hypergraph& h, std::span<const Dyadic> values) {
  if (values.size() != h.num_edges()) throw std::invalid_argument("assignment size does not match edge count");
  std::vector<Dyadic> load(h.num_vertices());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (values[e].is_zero()) continue;
    for (VertexId v : h.edge(e)) load[v] += values[e];
  }
  return load;
}

MatchingVerdict validate_matching(const Hypergraph& h, const Matching& m, bool require_maximal) {
  MatchingVerdict verdict;
  constexpr auto kFree = static_cast<EdgeId>(-1);
  std::vector<EdgeId> owner(h.num_vertices(), kFree);
  std::vector<char> seen(h.num_edges(), 0);
  for (EdgeId e : m.edges) {
    if (e >= h.num_edges()) {
      verdict.valid = false;
      verdict.witness = "edge id " + std::to_string(e) + " out of range";
      return verdict;
    }
    if (seen[e]) {
      verdict.valid = false;
      verdict.witness = "edge " + std::to_string(e) + " listed twice";
      return verdict;
    }
    seen[e] = 1;
    for (VertexId v : h.edge(e)) {
      if (owner[v] != kFree) {
        verdict.valid = false;
        verdict.witness = "edges " + std::to_string(owner[v]) + " and " + std::to_string(e) + " share vertex " +
                          std::to_string(v);
        return verdict;
      }
      owner[v] = e;
    }
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto vs = h.edge(e);
    if (std::none_of(vs.begin(), vs.end(), [&](VertexId v) { return owner[v] != kFree; })) {
      verdict.maximal = false;
      if (require_maximal) verdict.witness = "edge " + std::to_string(e) + " is disjoint from the matching";
      break;
    }
  }
  return verdict;
}

FractionalVerdict validate_fractional_matching(const Hypergraph& h, const FractionalAssignment& x) {
  FractionalVerdict verdict;
  if (x.values.size() != h.num_edges()) {
    verdict.valid = false;
    verdict.witness = "assignment has " + std::to_string(x.values.size()) + " values for " +
                      std::to_string(h.num_edges()) + " edges";
    return verdict;
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const Dyadic& v = x.values[e];
    if (v < kZero) {
      verdict.valid = false;
      if (verdict.witness.empty()) verdict.witness = "edge " + std::to_string(e) + " has negative value " + v.str();
    } else if (!v.is_zero() && v < x.floor) {
      verdict.floor_ok = false;
      if (verdict.witness.empty()) {
        verdict.witness = "edge " + std::to_string(e) + " value " + v.str() + " below floor " + x.floor.str();
      }
    }
  }
  const auto loads = vertex_loads(h, x.values);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (loads[v] > verdict.max_load) verdict.max_load = loads[v];
    if (loads[v] >= kHalf) verdict.half_tight.push_back(v);
    if (loads[v] > kOne) {
      verdict.valid = false;
      if (verdict.witness.empty()) verdict.witness = "vertex " + std::to_string(v) + " has load " + loads[v].str();
    }
  }
  return verdict;
}

}  // namespace hypermatch

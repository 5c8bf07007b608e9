#include "hypermatch/locality.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hypermatch/coloring.hpp"
#include "hypermatch/matching_rounding.hpp"

namespace hypermatch {

std::string_view primitive_name(LocalPrimitive p) {
  switch (p) {
    case LocalPrimitive::greedy_doubling_step: return "greedy_doubling_step";
    case LocalPrimitive::greedy_matching: return "greedy_matching";
    case LocalPrimitive::linial: return "linial";
    case LocalPrimitive::defective_coloring: return "defective_coloring";
  }
  return "unknown";
}

bool is_hypergraph_primitive(LocalPrimitive p) {
  return p == LocalPrimitive::greedy_doubling_step || p == LocalPrimitive::greedy_matching;
}

std::size_t declared_radius(LocalPrimitive p, const LocalityParams& params) {
  const std::uint64_t delta = params.degree_bound;
  switch (p) {
    case LocalPrimitive::greedy_doubling_step: return 1;
    case LocalPrimitive::greedy_matching: return static_cast<std::size_t>(floor_log2(ceil_pow2(delta)));
    case LocalPrimitive::linial: return delta == 0 ? 0 : linial_schedule(params.palette, delta).size();
    case LocalPrimitive::defective_coloring: {
      if (params.defect >= delta) return 0;
      const auto lin = linial_schedule(params.palette, delta);
      return lin.size() + defective_schedule(schedule_palette(params.palette, lin), delta, params.defect).size();
    }
  }
  return 0;
}

Hypergraph apply_edit(const Hypergraph& h, const HypergraphEdit& edit) {
  std::vector<char> drop(h.num_edges(), 0);
  for (EdgeId e : edit.remove) {
    if (e >= h.num_edges()) throw std::invalid_argument("edit removes unknown hyperedge " + std::to_string(e));
    drop[e] = 1;
  }
  std::vector<std::vector<VertexId>> edges;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (!drop[e]) edges.emplace_back(h.edge(e).begin(), h.edge(e).end());
  }
  edges.insert(edges.end(), edit.add.begin(), edit.add.end());
  return Hypergraph::build(h.num_vertices(), std::move(edges));
}

Graph apply_edit(const Graph& g, const GraphEdit& edit) {
  std::vector<char> drop(g.num_edges(), 0);
  for (const auto& [u, v] : edit.remove) {
    const auto e = g.edge_id(u, v);
    if (!e) throw std::invalid_argument("edit removes missing edge " + std::to_string(u) + "-" + std::to_string(v));
    drop[*e] = 1;
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!drop[e]) edges.push_back(g.edge(e));
  }
  edges.insert(edges.end(), edit.add.begin(), edit.add.end());
  return Graph::build(g.num_vertices(), edges);
}

namespace {

template <typename Neighbors>
std::vector<VertexId> bfs_ball(std::size_t n, VertexId v, std::size_t radius, Neighbors&& neighbors) {
  std::vector<std::size_t> dist(n, SIZE_MAX);
  std::deque<VertexId> queue{v};
  dist[v] = 0;
  std::vector<VertexId> out;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    out.push_back(u);
    if (dist[u] == radius) continue;
    neighbors(u, [&](VertexId w) {
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_vertex(std::size_t n, VertexId v) {
  if (v >= n) throw std::invalid_argument("audit vertex " + std::to_string(v) + " out of range");
}

void check_radius(LocalPrimitive p, std::size_t radius, std::size_t declared) {
  if (radius < declared) {
    throw std::invalid_argument(std::string(primitive_name(p)) + " declares radius " + std::to_string(declared) +
                                ", audit radius " + std::to_string(radius) + " is smaller");
  }
}

template <typename Range>
void check_outside(const std::vector<char>& in_ball, const Range& vertices, const std::string& what) {
  for (VertexId v : vertices) {
    if (in_ball[v]) throw std::invalid_argument("perturbation " + what + " touches the ball at vertex " + std::to_string(v));
  }
}

// Sorted (edge, value) records incident to v, so edge ids may differ.
std::string render_incident(const Hypergraph& h, const FractionalAssignment& x, VertexId v) {
  std::vector<std::string> parts;
  for (EdgeId e : h.incident(v)) {
    std::string s = "{";
    for (VertexId u : h.edge(e)) s += std::to_string(u) + ",";
    s.back() = '}';
    parts.push_back(s + "=" + x.values[e].str());
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

FractionalAssignment run_hyper(LocalPrimitive p, const Hypergraph& h, const LocalityParams& params) {
  if (p == LocalPrimitive::greedy_matching) {
    if (h.num_edges() == 0) return FractionalAssignment::zeros(0, kOne);
    return greedy_fractional_matching(h, nullptr, nullptr, params.degree_bound);
  }
  const std::uint64_t D = ceil_pow2(params.degree_bound);
  const Dyadic start = Dyadic::inverse_pow2(floor_log2(D));
  return greedy_doubling_step(h, FractionalAssignment{std::vector<Dyadic>(h.num_edges(), start), start});
}

Color run_graph(LocalPrimitive p, const Graph& g, VertexId v, const LocalityParams& params) {
  VertexColoring ids = id_coloring(g.num_vertices());
  ids.palette_size = params.palette;
  if (p == LocalPrimitive::linial) return linial_coloring(g, ids, nullptr, params.degree_bound).colors[v];
  return defective_coloring(g, ids, params.defect, nullptr, params.degree_bound).colors[v];
}

}  // namespace

std::vector<VertexId> ball(const Hypergraph& h, VertexId v, std::size_t radius) {
  check_vertex(h.num_vertices(), v);
  return bfs_ball(h.num_vertices(), v, radius, [&](VertexId u, auto&& visit) {
    for (EdgeId e : h.incident(u)) {
      for (VertexId w : h.edge(e)) visit(w);
    }
  });
}

std::vector<VertexId> ball(const Graph& g, VertexId v, std::size_t radius) {
  check_vertex(g.num_vertices(), v);
  return bfs_ball(g.num_vertices(), v, radius, [&](VertexId u, auto&& visit) {
    for (VertexId w : g.neighbors(u)) visit(w);
  });
}

LocalityVerdict audit_locality(LocalPrimitive p, const Hypergraph& h, VertexId vertex, std::size_t radius,
                               const HypergraphEdit& edit, const LocalityParams& params) {
  if (!is_hypergraph_primitive(p)) {
    throw std::invalid_argument(std::string(primitive_name(p)) + " runs on graphs, not hypergraphs");
  }
  check_vertex(h.num_vertices(), vertex);
  LocalityVerdict verdict;
  verdict.declared = declared_radius(p, params);
  check_radius(p, radius, verdict.declared);
  std::vector<char> in_ball(h.num_vertices(), 0);
  for (VertexId u : ball(h, vertex, radius)) in_ball[u] = 1;
  for (EdgeId e : edit.remove) {
    if (e >= h.num_edges()) throw std::invalid_argument("edit removes unknown hyperedge " + std::to_string(e));
    check_outside(in_ball, h.edge(e), "removal of hyperedge " + std::to_string(e));
  }
  for (const auto& added : edit.add) check_outside(in_ball, added, "added hyperedge");
  const Hypergraph perturbed = apply_edit(h, edit);
  if (params.degree_bound < h.max_degree() || params.degree_bound < perturbed.max_degree()) {
    throw std::invalid_argument("degree bound does not cover both instances");
  }
  verdict.original = render_incident(h, run_hyper(p, h, params), vertex);
  verdict.perturbed = render_incident(perturbed, run_hyper(p, perturbed, params), vertex);
  verdict.equal = verdict.original == verdict.perturbed;
  return verdict;
}

LocalityVerdict audit_locality(LocalPrimitive p, const Graph& g, VertexId vertex, std::size_t radius,
                               const GraphEdit& edit, const LocalityParams& params) {
  if (is_hypergraph_primitive(p)) {
    throw std::invalid_argument(std::string(primitive_name(p)) + " runs on hypergraphs, not graphs");
  }
  check_vertex(g.num_vertices(), vertex);
  LocalityVerdict verdict;
  verdict.declared = declared_radius(p, params);
  check_radius(p, radius, verdict.declared);
  std::vector<char> in_ball(g.num_vertices(), 0);
  for (VertexId u : ball(g, vertex, radius)) in_ball[u] = 1;
  for (const auto& [u, v] : edit.remove) check_outside(in_ball, std::vector<VertexId>{u, v}, "edge removal");
  for (const auto& [u, v] : edit.add) check_outside(in_ball, std::vector<VertexId>{u, v}, "edge addition");
  const Graph perturbed = apply_edit(g, edit);
  if (params.degree_bound < g.max_degree() || params.degree_bound < perturbed.max_degree()) {
    throw std::invalid_argument("degree bound does not cover both instances");
  }
  if (params.palette < g.num_vertices()) throw std::invalid_argument("id palette smaller than the node count");
  verdict.original = std::to_string(run_graph(p, g, vertex, params));
  verdict.perturbed = std::to_string(run_graph(p, perturbed, vertex, params));
  verdict.equal = verdict.original == verdict.perturbed;
  return verdict;
}

}  // namespace hypermatch

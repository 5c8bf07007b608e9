#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

/// Primitives with a declared locality radius T.
///   greedy_doubling_step  T = 1 (hypergraph, from the uniform 1/D start)
///   greedy_matching       T = log2 D (hypergraph)
///   linial                T = number of reduction steps (graph, id colors)
///   defective_coloring    T = Linial steps + defect-spending steps (graph)
enum class LocalPrimitive { greedy_doubling_step, greedy_matching, linial, defective_coloring };

std::string_view primitive_name(LocalPrimitive p);
bool is_hypergraph_primitive(LocalPrimitive p);

/// Global inputs every node knows up front. They stay fixed across the
/// original and perturbed runs so only the local structure differs.
struct LocalityParams {
  std::uint64_t degree_bound = 1;
  std::uint64_t palette = 1;  ///< initial id palette for the colorings
  std::uint64_t defect = 0;   ///< p for defective_coloring
};

std::size_t declared_radius(LocalPrimitive p, const LocalityParams& params);

/// Edge edits. Removed ids refer to the original instance; added edges are
/// appended after the kept ones.
struct HypergraphEdit {
  std::vector<EdgeId> remove;
  std::vector<std::vector<VertexId>> add;
};
struct GraphEdit {
  std::vector<std::pair<VertexId, VertexId>> remove;
  std::vector<std::pair<VertexId, VertexId>> add;
};

Hypergraph apply_edit(const Hypergraph& h, const HypergraphEdit& edit);
Graph apply_edit(const Graph& g, const GraphEdit& edit);

/// Vertices within `radius` hops (hyperedge hops for hypergraphs), sorted.
std::vector<VertexId> ball(const Hypergraph& h, VertexId v, std::size_t radius);
std::vector<VertexId> ball(const Graph& g, VertexId v, std::size_t radius);

struct LocalityVerdict {
  bool equal = true;
  std::size_t declared = 0;
  std::string original;   ///< output at the vertex, rendered
  std::string perturbed;
};

/// Runs the primitive on the instance and on the edited instance and compares
/// the output at `vertex`: its incident edge values for the hypergraph
/// primitives, its color for the colorings. Throws std::invalid_argument if
/// radius < T, the primitive kind does not match the instance, an edit touches
/// the radius-ball of `vertex`, or the degree bound does not cover both
/// instances.
LocalityVerdict audit_locality(LocalPrimitive p, const Hypergraph& h, VertexId vertex, std::size_t radius,
                               const HypergraphEdit& edit, const LocalityParams& params);
LocalityVerdict audit_locality(LocalPrimitive p, const Graph& g, VertexId vertex, std::size_t radius,
                               const GraphEdit& edit, const LocalityParams& params);

}  // namespace hypermatch

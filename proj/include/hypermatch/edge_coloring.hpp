#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/rational.hpp"
#include "hypermatch/round_ledger.hpp"
#include "hypermatch/text_format.hpp"

namespace hypermatch {

/// colors[e] for each edge; plain colorings use 1..2D-1.
struct EdgeColoring {
  std::vector<std::int64_t> colors;
};

/// One hyperedge of a reduction: the copy of `base` for `color`.
struct ReductionCopy {
  EdgeId base = 0;
  std::int64_t color = 0;
};

struct ColoringReduction {
  Hypergraph hypergraph;
  std::vector<ReductionCopy> decode;  ///< indexed by hyperedge id
  std::size_t base_edges = 0;
  std::size_t copy_vertices = 0;  ///< vertices other than the per-edge w_e
};

/// Number of other edges sharing a vertex with each edge (d_e).
std::vector<std::size_t> edge_degrees(const Hypergraph& h);
std::vector<std::size_t> edge_degrees(const Graph& g);

/// Lists {1, ..., d_e + 1}.
EdgeLists default_lists(const Graph& g);

/// 2D-1 copies of every vertex and edge plus one w_e per edge. Vertex copy
/// (v, i) is (i-1)*n + v, w_e is (2D-1)*n + e, and the copy of edge e for
/// color i is hyperedge e*(2D-1) + i-1. Requires max degree >= 1.
ColoringReduction reduce_edge_coloring(const Graph& g);

/// One hyperedge per (edge, list color): the color's copies of the edge's
/// vertices plus w_e. Copies are numbered by sorted (vertex, color) pairs, w_e
/// follows them. Throws std::invalid_argument if |L_e| < d_e + 1, a color is
/// negative, or a list repeats a color.
ColoringReduction reduce_hypergraph_list_edge_coloring(const Hypergraph& h, const EdgeLists& lists);
ColoringReduction reduce_list_edge_coloring(const Graph& g, const EdgeLists& lists);

/// Color of each base edge from a matching of the reduction. Throws
/// std::logic_error unless every base edge has exactly one matched copy.
std::vector<std::int64_t> decode_coloring(const ColoringReduction& red, const Matching& m);

EdgeColoring edge_color(const Graph& g, RoundLedger* ledger = nullptr);
EdgeColoring list_edge_color(const Graph& g, const EdgeLists& lists, RoundLedger* ledger = nullptr);
EdgeColoring hypergraph_list_edge_color(const Hypergraph& h, const EdgeLists& lists, RoundLedger* ledger = nullptr);

struct EdgeColoringVerdict {
  bool proper = true;
  bool in_lists = true;
  std::int64_t max_color = 0;
  std::string witness;

  bool ok() const { return proper && in_lists; }
};

/// Adjacency scan, plus list membership when `lists` is given.
EdgeColoringVerdict validate_edge_coloring(const Hypergraph& h, const std::vector<std::int64_t>& colors,
                                           const EdgeLists* lists = nullptr);
EdgeColoringVerdict validate_edge_coloring(const Graph& g, const std::vector<std::int64_t>& colors,
                                           const EdgeLists* lists = nullptr);

struct RandomizedStats {
  std::size_t trial_rounds = 0;
  std::size_t uncolored_after_trials = 0;
  std::size_t leftover_components = 0;
  std::size_t largest_component = 0;
};

/// Trial rounds: every uncolored edge draws from its remaining palette and
/// keeps the color if no adjacent edge drew it too. After
/// max(1, ceil(4 log2 D)) rounds the remaining components are list-colored
/// with their residual palettes.
EdgeColoring randomized_edge_color(const Graph& g, std::uint64_t seed, RoundLedger* ledger = nullptr,
                                   RandomizedStats* stats = nullptr);

/// Peeling failed: some remaining vertex set has every degree above the
/// threshold, so `a` is below the arboricity.
class PeelingStalled : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HPartition {
  std::vector<std::size_t> layer;  ///< 1-based layer of each vertex
  std::size_t layers = 0;
  Rational threshold;  ///< (2 + eps) a
};

HPartition h_partition(const Graph& g, std::int64_t a, Rational eps, RoundLedger* ledger = nullptr);

/// Every vertex of layer i has at most threshold neighbors in layers >= i.
bool validate_h_partition(const Graph& g, const HPartition& hp);

/// Palette size D + ceil((2+eps) a) - 1.
std::int64_t arboricity_palette(const Graph& g, std::int64_t a, Rational eps);

EdgeColoring arboricity_edge_color(const Graph& g, std::int64_t a, Rational eps, RoundLedger* ledger = nullptr);

}  // namespace hypermatch

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/rational.hpp"
#include "hypermatch/round_ledger.hpp"

namespace hypermatch {

/// Path enumeration produced more candidates than the configured cap.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `exact` takes a maximal matching of every path hypergraph. `almost_maximal`
/// stops the matching loop early with slack eps * D^-ceil(1/eps) / 4 and drops
/// the nodes of paths left unblocked from later phases.
enum class MatchingMode { exact, almost_maximal };

struct GraphMatchingPhase {
  std::size_t length = 0;  ///< augmenting path length (edges)
  std::size_t paths_found = 0;
  std::size_t augmented = 0;
  std::size_t matching_size = 0;  ///< after the phase
  std::size_t dropped_nodes = 0;
};

struct GraphMatchingResult {
  std::vector<EdgeId> edges;  ///< graph edge ids, sorted
  std::vector<GraphMatchingPhase> phases;
};

struct PathLimits {
  std::size_t max_paths = 500000;
};

/// A simple alternating path v0..vl with both ends free and v0 < vl.
using NodePath = std::vector<VertexId>;

/// All augmenting paths with exactly `length` edges for matching `mate`
/// (mate[v] == v when v is free), avoiding nodes flagged in `blocked`.
std::vector<NodePath> augmenting_paths(const Graph& g, const std::vector<VertexId>& mate, std::size_t length,
                                       const std::vector<char>& blocked, const PathLimits& limits = {});

/// Phases l = 1, 3, ..., 2 ceil(1/eps) - 1. Each phase builds a hypergraph with
/// one vertex per free node and one per matching edge, one hyperedge per
/// augmenting path of length l, and augments along a maximal matching of it.
GraphMatchingResult approx_max_graph_matching(const Graph& g, Rational eps, MatchingMode mode = MatchingMode::exact,
                                              RoundLedger* ledger = nullptr, const PathLimits& limits = {});

bool is_graph_matching(const Graph& g, const std::vector<EdgeId>& edges, std::string* witness = nullptr);

/// tail[e] is the node edge e points away from.
struct Orientation {
  std::vector<VertexId> tail;
  std::vector<std::size_t> out_degree;
};

Orientation orientation_from_tails(const Graph& g, std::vector<VertexId> tail);

/// `u v` lines, one per edge in edge-id order, u the tail.
std::vector<std::pair<VertexId, VertexId>> orientation_pairs(const Graph& g, const Orientation& o);
/// Throws std::invalid_argument unless every line is an edge of g and every
/// edge appears exactly once.
Orientation orientation_from_pairs(const Graph& g, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

/// Excess remained after the last iteration: lambda is below the arboricity.
class OrientationIncomplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OrientationIteration {
  std::size_t length = 0;  ///< path length including the s and t edges
  std::size_t paths_found = 0;
  std::size_t reversed = 0;
  std::size_t excess_before = 0;
  std::size_t excess_after = 0;
};

struct OrientationResult {
  Orientation orientation;
  std::size_t bound = 0;  ///< D = ceil((1 + eps) lambda)
  std::size_t max_iterations = 0;
  std::vector<OrientationIteration> iterations;
};

/// ceil((1 + eps) * lambda)
std::size_t orientation_bound(std::size_t lambda, Rational eps);
/// ceil(4 log2 n / eps), at least 1.
std::size_t orientation_iterations(std::size_t n, Rational eps);

/// Starts from u -> v for u < v and reverses maximal sets of edge-disjoint
/// augmenting paths of length 3 + i for i = 0, 1, ...
OrientationResult low_outdegree_orientation(const Graph& g, std::size_t lambda, Rational eps,
                                            RoundLedger* ledger = nullptr, const PathLimits& limits = {});

/// Sum over nodes of max(0, out_degree - bound).
std::size_t orientation_excess(const Orientation& o, std::size_t bound);

struct OrientationVerdict {
  bool consistent = true;  ///< tails are endpoints and out-degrees match
  bool within_bound = true;
  std::size_t max_out_degree = 0;
  std::string witness;
  bool ok() const { return consistent && within_bound; }
};

OrientationVerdict validate_orientation(const Graph& g, const Orientation& o, std::size_t bound);

/// cls[e] in 1..bound: edge e is the k-th outgoing edge (by id) of its tail.
std::vector<std::int64_t> pseudo_forest_decomposition(const Graph& g, const Orientation& o);

struct PseudoForestVerdict {
  bool ok = true;
  std::size_t classes = 0;
  std::string witness;
};

/// Every class has at most one cycle per connected component, and at most
/// `max_classes` classes are used (0 skips that check).
PseudoForestVerdict validate_pseudo_forests(const Graph& g, const std::vector<std::int64_t>& cls,
                                            std::size_t max_classes = 0);

}  // namespace hypermatch

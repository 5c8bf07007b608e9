#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypermatch/dyadic.hpp"

namespace hypermatch {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Immutable hypergraph over vertices 0..n-1. Hyperedges are stored as sorted
/// vertex sets; parallel hyperedges keep distinct ids.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws std::invalid_argument on an empty hyperedge, an out-of-range id,
  /// or a vertex repeated inside one hyperedge.
  static Hypergraph build(std::size_t n, std::vector<std::vector<VertexId>> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::span<const VertexId> edge(EdgeId e) const { return edges_[e]; }
  std::span<const EdgeId> incident(VertexId v) const { return incidence_[v]; }
  std::size_t degree(VertexId v) const { return incidence_[v].size(); }
  const std::vector<std::vector<VertexId>>& edges() const noexcept { return edges_; }

  /// Same vertex set, keeping only the listed hyperedges (new id i = keep[i]).
  Hypergraph restrict_edges(std::span<const EdgeId> keep) const;

  /// Hyperedges sharing at least one vertex with e, excluding e; sorted.
  std::vector<EdgeId> adjacent_edges(EdgeId e) const;

 private:
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Simple undirected graph. Edge ids follow input order; each edge is stored
/// with its smaller endpoint first.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, parallel edges or
  /// out-of-range endpoints.
  static Graph build(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);
  static Graph build(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    return build(n, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
  }

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  /// Edge ids incident to v, aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const { return incident_[v]; }
  std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }

  bool adjacent(VertexId u, VertexId v) const;
  std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;

  Hypergraph as_hypergraph() const;

  /// Subgraph induced by `keep` (sorted or not); vertex i of the result is
  /// keep[i]. Edge order follows the parent's edge ids.
  Graph induced(std::span<const VertexId> keep) const;

 private:
  std::size_t max_degree_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Hyperedge ids, kept sorted.
struct Matching {
  std::vector<EdgeId> edges;

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }
};

/// Exact values on hyperedges (matchings) or on nodes (packings).
/// `floor` is the fractionality: every nonzero value must be >= floor.
struct FractionalAssignment {
  std::vector<Dyadic> values;
  Dyadic floor = kOne;

  static FractionalAssignment zeros(std::size_t size, Dyadic floor) {
    return {std::vector<Dyadic>(size), floor};
  }

  Dyadic total() const;
  std::size_t support_size() const;
  /// Smallest nonzero value; nullopt for an all-zero assignment.
  std::optional<Dyadic> min_positive() const;
  bool respects_floor() const;
};

Graph line_graph(const Hypergraph& h);

/// Per-vertex sum of incident hyperedge values.
std::vector<Dyadic> vertex_loads(const Hypergraph& h, std::span<const Dyadic> values);

struct MatchingVerdict {
  bool valid = true;
  bool maximal = true;
  /// Human-readable description of the first violation found.
  std::string witness;

  bool ok(bool require_maximal) const { return valid && (!require_maximal || maximal); }
};

/// Disjointness check, plus maximality when requested. The verdict always
/// reports maximality of a valid matching, even when not required.
MatchingVerdict validate_matching(const Hypergraph& h, const Matching& m, bool require_maximal);

struct FractionalVerdict {
  bool valid = true;       ///< every vertex load <= 1 and values nonnegative
  bool floor_ok = true;    ///< every nonzero value >= floor
  std::vector<VertexId> half_tight;
  Dyadic max_load;
  std::string witness;

  bool ok() const { return valid && floor_ok; }
};

FractionalVerdict validate_fractional_matching(const Hypergraph& h, const FractionalAssignment& x);

}  // namespace hypermatch

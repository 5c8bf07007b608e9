#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypermatch/coloring.hpp"
#include "hypermatch/hypergraph.hpp"
#include "hypermatch/round_ledger.hpp"
#include "hypermatch/text_format.hpp"

namespace hypermatch {

/// Node values with an explicit witness order over the positive nodes.
/// Zero-valued nodes are implicitly ordered before all of them.
struct GreedyPacking {
  FractionalAssignment values;
  std::vector<VertexId> order;
};

struct PackingVerdict {
  bool valid = true;
  std::string witness;
  Dyadic max_local_sum;  ///< max over v of the sum over N+(v)

  bool ok() const { return valid; }
};

/// Sum of x over the closed neighborhood of every node.
std::vector<Dyadic> local_sums(const Graph& g, const std::vector<Dyadic>& x);

/// Checks x_v + sum of earlier neighbors <= 1 for every node, and that the
/// order lists each positive node exactly once.
PackingVerdict verify_greedy_packing(const Graph& g, const GreedyPacking& p);

/// Observer for every intermediate packing together with the graph it lives
/// on (drivers run on induced subgraphs).
struct PackingTrace {
  std::function<void(std::string_view stage, const Graph&, const GreedyPacking&)> on_step;
  void step(std::string_view stage, const Graph& g, const GreedyPacking& p) const {
    if (on_step) on_step(stage, g, p);
  }
};

/// 1/D on every node, D the least power of two >= max degree + 1, then
/// doubling of nodes whose local sum is below 1/2. Charges log2 D rounds.
GreedyPacking initial_packing(const Graph& g, RoundLedger* ledger = nullptr, PackingTrace* trace = nullptr);

/// (1/d)-fractional greedy packing to an (L/d)-fractional one on the same
/// support; every supported node ends with local sum >= 1/2. `vcol` must be a
/// proper coloring of g. `r` bounds the neighborhood independence.
GreedyPacking basic_round_packing(const Graph& g, const GreedyPacking& x, std::uint64_t L, std::uint64_t d,
                                  const VertexColoring& vcol, std::size_t r, RoundLedger* ledger = nullptr,
                                  PackingTrace* trace = nullptr);

/// Recursive rounding with 16r phases; requires L < d/2. Falls back to basic
/// rounding when L <= 4.
GreedyPacking recursive_round_packing(const Graph& g, const GreedyPacking& x, std::uint64_t L, std::uint64_t d,
                                      const VertexColoring& vcol, std::size_t r, RoundLedger* ledger = nullptr,
                                      PackingTrace* trace = nullptr);

/// Independent set of size >= |S*| / (32 r^3). `vcol` computed when null.
std::vector<VertexId> approx_mis(const Graph& g, std::size_t r, RoundLedger* ledger = nullptr,
                                 const VertexColoring* vcol = nullptr, PackingTrace* trace = nullptr);

struct MisResult {
  std::vector<VertexId> nodes;
  std::size_t iterations = 0;
};

MisResult maximal_independent_set(const Graph& g, std::size_t r, RoundLedger* ledger = nullptr,
                                  PackingTrace* trace = nullptr);

struct IndependentSetVerdict {
  bool independent = true;
  bool maximal = true;
  std::string witness;
};

IndependentSetVerdict validate_independent_set(const Graph& g, const std::vector<VertexId>& nodes);

using VertexLists = std::vector<std::vector<std::int64_t>>;

/// Proper coloring from per-node lists (|L_v| >= deg(v) + 1), or from
/// {1..D+1} when `lists` is null, via MIS on the node-color product graph
/// with neighborhood independence bound r + 1.
std::vector<std::int64_t> vertex_color(const Graph& g, std::size_t r, const VertexLists* lists = nullptr,
                                       RoundLedger* ledger = nullptr);

struct VertexColoringVerdict {
  bool proper = true;
  bool in_lists = true;
  std::int64_t max_color = 0;
  std::string witness;
  bool ok() const { return proper && in_lists; }
};

VertexColoringVerdict validate_vertex_coloring(const Graph& g, const std::vector<std::int64_t>& colors,
                                               const VertexLists* lists = nullptr);

}  // namespace hypermatch

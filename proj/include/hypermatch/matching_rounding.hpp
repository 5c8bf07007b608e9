#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "hypermatch/coloring.hpp"
#include "hypermatch/hypergraph.hpp"
#include "hypermatch/round_ledger.hpp"

namespace hypermatch {

/// Rounding by a factor L on a (1/d)-fractional input. Both are powers of two
/// with L <= d. iteration_cap defaults to 16r for recursive rounding.
struct RoundingParams {
  std::uint64_t L = 1;
  std::uint64_t d = 1;
  std::optional<std::size_t> iteration_cap;
};

/// Per-iteration record of recursive rounding.
struct RecursiveIteration {
  int depth = 0;
  std::uint64_t L = 0;
  Dyadic x_total;
  Dyadic y_before;
  Dyadic added;  ///< total of z''/2
};

/// Optional instrumentation. `on_step` sees every intermediate assignment
/// (after each color class, doubling step and y update) together with a stage
/// name; all assignments are indexed by the edges of the top-level hypergraph.
struct RoundingTrace {
  std::function<void(std::string_view stage, const FractionalAssignment&)> on_step;
  std::vector<RecursiveIteration> iterations;
  std::size_t basic_calls = 0;

  void step(std::string_view stage, const FractionalAssignment& a) const {
    if (on_step) on_step(stage, a);
  }
};

/// (1/D)-fractional matching, D the least power of two >= max degree, in which
/// every edge has a half-tight endpoint. Charges log2 D rounds. A
/// `degree_bound` >= max degree replaces the max degree in the choice of D.
FractionalAssignment greedy_fractional_matching(const Hypergraph& h, RoundLedger* ledger = nullptr,
                                                RoundingTrace* trace = nullptr,
                                                std::optional<std::uint64_t> degree_bound = std::nullopt);

/// One doubling iteration of the greedy algorithm (locality radius 1).
FractionalAssignment greedy_doubling_step(const Hypergraph& h, const FractionalAssignment& x);

/// Turns a (1/d)-fractional matching into an (L/d)-fractional one on the same
/// support in which every support edge has a half-tight endpoint.
/// `ecol` must be a proper coloring of line_graph(h).
/// Throws std::invalid_argument on a precondition violation.
FractionalAssignment basic_round(const Hypergraph& h, const FractionalAssignment& x, const RoundingParams& params,
                                 const VertexColoring& ecol, RoundLedger* ledger = nullptr,
                                 RoundingTrace* trace = nullptr);

/// Recursive L-factor rounding; requires L * log2(L)^2 <= d. Falls back to
/// basic_round for L <= 4. `ecol` as for basic_round.
FractionalAssignment recursive_round(const Hypergraph& h, const FractionalAssignment& x, const RoundingParams& params,
                                     const VertexColoring& ecol, RoundLedger* ledger = nullptr,
                                     RoundingTrace* trace = nullptr);

/// Dispatcher used inside the recursion and by the wrap-up: recursive rounding
/// when L > 4 and L log^2 L <= d, basic rounding otherwise.
FractionalAssignment round_by(const Hypergraph& h, const FractionalAssignment& x, const RoundingParams& params,
                             const VertexColoring& ecol, RoundLedger* ledger = nullptr, RoundingTrace* trace = nullptr);

/// The two rounding factors used after the greedy step, for max degree delta:
/// first = recursive factor (1 when skipped), second = basic factor.
std::pair<std::uint64_t, std::uint64_t> wrapup_factors(std::uint64_t D);

/// Integral matching of size >= OPT / (32 r^3). `ecol` is computed when null.
Matching approx_max_matching(const Hypergraph& h, RoundLedger* ledger = nullptr, const VertexColoring* ecol = nullptr,
                             RoundingTrace* trace = nullptr);

struct MaximalMatchingResult {
  Matching matching;
  /// Edges still disjoint from the matching (empty unless slack was given).
  std::vector<EdgeId> unblocked;
  std::size_t iterations = 0;
};

/// Repeated approx_max_matching on the remaining hypergraph. With `slack`
/// (0 < slack < 1) the loop stops after ceil(32 r^3 ln(1/slack)) iterations.
MaximalMatchingResult maximal_matching(const Hypergraph& h, std::optional<double> slack = std::nullopt,
                                       RoundLedger* ledger = nullptr);

}  // namespace hypermatch

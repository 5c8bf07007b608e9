#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

/// Exhaustive-search limits. Oracles refuse larger inputs.
struct OracleBudget {
  std::size_t matching_edges = 24;
  std::size_t mis_nodes = 26;
  std::size_t arboricity_nodes = 14;
  std::size_t enumeration_edges = 12;
  std::size_t neighborhood_size = 64;
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatchingOracleResult {
  std::size_t size = 0;
  Matching witness;
};

struct IndependentSetOracleResult {
  std::size_t size = 0;
  std::vector<VertexId> witness;
};

/// Maximum matching by branch and bound over edge inclusion.
MatchingOracleResult max_matching_oracle(const Hypergraph& h, const OracleBudget& budget = {});

/// Maximum independent set by branching on a max-degree vertex.
IndependentSetOracleResult max_independent_set_oracle(const Graph& g, const OracleBudget& budget = {});

/// Nash-Williams: max over |S| >= 2 of ceil(|E(S)| / (|S| - 1)); 0 without edges.
std::size_t arboricity_oracle(const Graph& g, const OracleBudget& budget = {});

/// Max over v of the independence number of G[N(v)].
std::size_t neighborhood_independence_oracle(const Graph& g, const OracleBudget& budget = {});

/// Every maximal matching, each with sorted edge ids, in increasing subset order.
std::vector<Matching> enumerate_maximal_matchings(const Hypergraph& h, const OracleBudget& budget = {});

}  // namespace hypermatch

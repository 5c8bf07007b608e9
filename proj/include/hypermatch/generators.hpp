#pragma once

#include <cstdint>
#include <random>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

/// Generators draw through `rng() % k` and `rng() >> 11`, so a seed fixes the
/// output on every platform. Infeasible parameters throw std::invalid_argument.

/// m hyperedges, sizes uniform in [min(2, r), r], members uniform without
/// repetition.
Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t r, std::mt19937_64& rng);
/// G(n, p).
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);
/// Circulant d-regular graph randomized by degree-preserving edge swaps.
Graph random_regular(std::size_t n, std::size_t d, std::mt19937_64& rng);
/// Center 0 joined to 1..n-1.
Graph star_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);

/// Uniform index below k (k >= 1).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k);
/// Uniform in [0, 1).
double uniform_unit(std::mt19937_64& rng);

}  // namespace hypermatch

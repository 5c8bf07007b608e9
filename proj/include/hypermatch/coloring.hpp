#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/round_ledger.hpp"

namespace hypermatch {

using Color = std::uint64_t;

/// Colors are 0..palette_size-1. `defect` is the guaranteed bound on
/// same-colored neighbors (0 for a proper coloring).
struct VertexColoring {
  std::vector<Color> colors;
  std::uint64_t palette_size = 0;
  std::uint64_t defect = 0;
};

/// Palette bounds: Linial output <= kLinialConstant * D^2 colors, defective
/// output <= kDefectiveConstant * (D / max(p,1))^2 colors, for max degree D >= 1.
inline constexpr std::uint64_t kLinialConstant = 16;
inline constexpr std::uint64_t kDefectiveConstant = 32;

/// Unique-id coloring: vertex v gets color v.
VertexColoring id_coloring(std::size_t n);

/// Largest number of same-colored neighbors over all vertices.
std::size_t max_defect(const Graph& g, const std::vector<Color>& colors);
bool is_proper(const Graph& g, const std::vector<Color>& colors);

/// One color-reduction step, parameterized by a prime q and polynomial degree
/// k with q^{k+1} >= current palette. A color's base-q digits are the
/// coefficients of a polynomial over GF(q); each vertex picks the smallest
/// evaluation point with the fewest agreements with differently-colored
/// neighbors and takes color a*q + p(a). New palette q^2; the defect grows by
/// at most floor(k * degree_bound / q).
struct ReductionStep {
  std::uint64_t q = 0;
  unsigned k = 0;
};

/// Local rule of a single reduction step at one vertex.
Color reduce_color(Color own, const std::vector<Color>& neighbor_colors, const ReductionStep& step);

/// Linial color reduction. Locality: one round per step; the step sequence
/// depends only on (initial.palette_size, degree bound). `degree_bound`
/// defaults to the graph's maximum degree.
/// Throws std::invalid_argument if `initial` is improper or out of palette.
VertexColoring linial_coloring(const Graph& g, const VertexColoring& initial, RoundLedger* ledger = nullptr,
                               std::optional<std::size_t> degree_bound = std::nullopt);

/// Linial on the line graph of h starting from edge ids.
VertexColoring edge_coloring_init(const Hypergraph& h, RoundLedger* ledger = nullptr);

/// p-defective coloring from a proper one. Runs Linial first, then a planned
/// sequence of defect-spending reduction steps whose accumulated defect
/// increments stay within p. p == 0 gives a proper coloring; p >= degree bound
/// gives a single color in zero rounds.
VertexColoring defective_coloring(const Graph& g, const VertexColoring& given, std::uint64_t p,
                                  RoundLedger* ledger = nullptr,
                                  std::optional<std::size_t> degree_bound = std::nullopt);

/// Step sequences chosen by the two algorithms, exposed for tests and the
/// locality audit.
std::vector<ReductionStep> linial_schedule(std::uint64_t palette, std::size_t degree_bound);
std::vector<ReductionStep> defective_schedule(std::uint64_t proper_palette, std::size_t degree_bound,
                                              std::uint64_t p);
/// Palette reached after applying the schedule to `palette` colors.
std::uint64_t schedule_palette(std::uint64_t palette, const std::vector<ReductionStep>& steps);

std::uint64_t next_prime(std::uint64_t value);

}  // namespace hypermatch

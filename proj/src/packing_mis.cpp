#include "hypermatch/packing_mis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hypermatch/matching_rounding.hpp"

namespace hypermatch {

namespace {

void check_pow2(std::uint64_t value, const char* name) {
  if (!is_pow2(value)) throw std::invalid_argument(std::string(name) + " must be a power of two");
}

void check_packing_input(const Graph& g, const GreedyPacking& x, std::uint64_t L, std::uint64_t d, const char* who) {
  check_pow2(L, "L");
  check_pow2(d, "d");
  if (L > d) throw std::invalid_argument(std::string(who) + ": requires L <= d");
  if (x.values.values.size() != g.num_vertices()) {
    throw std::invalid_argument(std::string(who) + ": packing size does not match node count");
  }
  const Dyadic floor = Dyadic::inverse_pow2(floor_log2(d));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const Dyadic& value = x.values.values[v];
    if (value < kZero || (!value.is_zero() && value < floor)) {
      throw std::invalid_argument(std::string(who) + ": node " + std::to_string(v) + " value " + value.str() +
                                  " is not (1/" + std::to_string(d) + ")-fractional");
    }
  }
}

// Moves `nodes` (sorted) to the end of the order, keeping everything else.
void move_to_end(std::vector<VertexId>& order, const std::vector<VertexId>& nodes, std::size_t n) {
  std::vector<char> moving(n, 0);
  for (VertexId v : nodes) moving[v] = 1;
  std::erase_if(order, [&](VertexId v) { return moving[v] != 0; });
  order.insert(order.end(), nodes.begin(), nodes.end());
}

std::uint64_t log2_u(std::uint64_t v) { return static_cast<std::uint64_t>(floor_log2(v)); }

GreedyPacking dispatch(const Graph& g, const GreedyPacking& x, std::uint64_t L, std::uint64_t d,
                       const VertexColoring& vcol, std::size_t r, RoundLedger* ledger, PackingTrace* trace);

GreedyPacking recursive_impl(const Graph& g, const GreedyPacking& x, std::uint64_t L, std::uint64_t d,
                             const VertexColoring& vcol, std::size_t r, RoundLedger* ledger, PackingTrace* trace) {
  check_packing_input(g, x, L, d, "recursive_round_packing");
  const std::size_t n = g.num_vertices();
  const std::size_t rr = std::max<std::size_t>(r, 1);
  const std::uint64_t inner = std::uint64_t{1} << ((log2_u(L) + 2) / 2);
  const Dyadic x_total = x.values.total();

  GreedyPacking y{FractionalAssignment::zeros(n, Dyadic(static_cast<std::int64_t>(L), floor_log2(d))), {}};
  Dyadic y_total;
  for (std::size_t phase = 0; phase < 16 * rr; ++phase) {
    if (y_total * static_cast<std::int64_t>(4 * rr) >= x_total) break;
    charge(ledger, "recursive_round_packing", 1, "one round per phase to recompute unsaturated nodes");
    const auto sums = local_sums(g, y.values.values);
    std::vector<char> open(n, 0);
    GreedyPacking z{FractionalAssignment::zeros(n, x.values.floor), {}};
    for (VertexId v = 0; v < n; ++v) {
      if (sums[v] < kHalf) {
        open[v] = 1;
        z.values.values[v] = x.values.values[v];
      }
    }
    for (VertexId v : x.order) {
      if (!z.values.values[v].is_zero()) z.order.push_back(v);
    }
    const auto z1 = dispatch(g, z, inner, d, vcol, r, ledger, trace);
    const auto z2 = dispatch(g, z1, inner, d / inner, vcol, r, ledger, trace);

    // Saturated part first, then open nodes the new packing leaves at zero,
    // then the new packing's own order.
    std::vector<VertexId> order;
    for (VertexId v : y.order) {
      if (!open[v]) order.push_back(v);
    }
    for (VertexId v : y.order) {
      if (open[v] && z2.values.values[v].is_zero()) order.push_back(v);
    }
    order.insert(order.end(), z2.order.begin(), z2.order.end());
    y.order = std::move(order);
    for (VertexId v = 0; v < n; ++v) {
      if (z2.values.values[v].is_zero()) continue;
      const Dyadic half = z2.values.values[v].halved();
      y.values.values[v] += half;
      y_total += half;
    }
    if (trace != nullptr) trace->step("recursive_round_packing/update", g, y);
  }
  return y;
}

GreedyPacking dispatch(const Graph& g, const GreedyPacking& x, std::uint64_t L, std::uint64_t d,
                       const VertexColoring& vcol, std::size_t r, RoundLedger* ledger, PackingTrace* trace) {
  if (L <= 4 || 2 * L >= d) return basic_round_packing(g, x, L, d, vcol, r, ledger, trace);
  return recursive_impl(g, x, L, d, vcol, r, ledger, trace);
}

}  // namespace

std::vector<Dyadic> local_sums(const Graph& g, const std::vector<Dyadic>& x) {
  std::vector<Dyadic> out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    Dyadic sum = x[v];
    for (VertexId u : g.neighbors(v)) sum += x[u];
    out[v] = sum;
  }
  return out;
}

PackingVerdict verify_greedy_packing(const Graph& g, const GreedyPacking& p) {
  PackingVerdict verdict;
  const std::size_t n = g.num_vertices();
  const auto& x = p.values.values;
  if (x.size() != n) {
    verdict.valid = false;
    verdict.witness = "packing has " + std::to_string(x.size()) + " values for " + std::to_string(n) + " nodes";
    return verdict;
  }
  constexpr std::size_t kUnplaced = SIZE_MAX;
  std::vector<std::size_t> position(n, kUnplaced);
  for (std::size_t i = 0; i < p.order.size(); ++i) {
    const VertexId v = p.order[i];
    if (v >= n || position[v] != kUnplaced) {
      verdict.valid = false;
      verdict.witness = "witness order repeats or misnames node " + std::to_string(v);
      return verdict;
    }
    position[v] = i;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (x[v] < kZero) {
      verdict.valid = false;
      verdict.witness = "node " + std::to_string(v) + " has negative value";
      return verdict;
    }
    if (x[v].is_positive() && position[v] == kUnplaced) {
      verdict.valid = false;
      verdict.witness = "positive node " + std::to_string(v) + " missing from witness order";
      return verdict;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!x[v].is_positive()) continue;
    Dyadic sum = x[v];
    for (VertexId u : g.neighbors(v)) {
      if (x[u].is_positive() && position[u] < position[v]) sum += x[u];
    }
    if (sum > kOne) {
      verdict.valid = false;
      verdict.witness = "node " + std::to_string(v) + " has value plus earlier neighbors " + sum.str();
      break;
    }
  }
  for (const auto& s : local_sums(g, x)) verdict.max_local_sum = std::max(verdict.max_local_sum, s);
  return verdict;
}

GreedyPacking initial_packing(const Graph& g, RoundLedger* ledger, PackingTrace* trace) {
  const std::size_t n = g.num_vertices();
  const std::uint64_t D = ceil_pow2(g.max_degree() + 1);
  const int rounds = floor_log2(D);
  const Dyadic start = Dyadic::inverse_pow2(rounds);
  GreedyPacking x{{std::vector<Dyadic>(n, start), start}, {}};
  for (VertexId v = 0; v < n; ++v) x.order.push_back(v);
  if (trace != nullptr) trace->step("initial_packing/init", g, x);
  for (int i = 0; i < rounds; ++i) {
    const auto sums = local_sums(g, x.values.values);
    std::vector<VertexId> doubled;
    for (VertexId v = 0; v < n; ++v) {
      if (sums[v] < kHalf) doubled.push_back(v);
    }
    for (VertexId v : doubled) x.values.values[v] = x.values.values[v].doubled();
    move_to_end(x.order, doubled, n);
    if (trace != nullptr) trace->step("initial_packing/doubling", g, x);
  }
  charge(ledger, "initial_packing", static_cast<std::uint64_t>(rounds), "log2 D doubling rounds");
  return x;
}

GreedyPacking basic_round_packing(const Graph& g, const GreedyPacking& x, std::uint64_t L, std::uint64_t d,
                                  const VertexColoring& vcol, std::size_t r, RoundLedger* ledger,
                                  PackingTrace* trace) {
  check_packing_input(g, x, L, d, "basic_round_packing");
  if (vcol.colors.size() != g.num_vertices()) {
    throw std::invalid_argument("basic_round_packing: vertex coloring size does not match node count");
  }
  const std::size_t n = g.num_vertices();
  const Dyadic unit(static_cast<std::int64_t>(L), floor_log2(d));
  GreedyPacking y{FractionalAssignment::zeros(n, unit), {}};

  std::vector<VertexId> support;
  for (VertexId v = 0; v < n; ++v) {
    if (!x.values.values[v].is_zero()) support.push_back(v);
  }
  if (support.empty()) return y;

  // Defect d/(2L) - 1: a raised node and its same-colored neighbors add at
  // most d/(2L) * L/d = 1/2 to any local sum.
  const Graph gx = g.induced(support);
  VertexColoring given;
  given.palette_size = vcol.palette_size;
  for (VertexId v : support) given.colors.push_back(vcol.colors[v]);
  const std::uint64_t p = d < 2 * L ? 0 : d / (2 * L) - 1;
  const std::size_t rr = std::max<std::size_t>(r, 1);
  std::size_t degree_bound = g.max_degree();
  if (d <= g.max_degree()) degree_bound = std::min<std::size_t>(degree_bound, rr * d - 1);
  if (gx.max_degree() > degree_bound) {
    throw std::invalid_argument("basic_round_packing: support degree " + std::to_string(gx.max_degree()) +
                                " exceeds r*d - 1; r is below the neighborhood independence");
  }
  const VertexColoring col = defective_coloring(gx, given, p, ledger, degree_bound);

  std::map<Color, std::vector<VertexId>> classes;
  for (std::size_t i = 0; i < support.size(); ++i) classes[col.colors[i]].push_back(support[i]);
  for (const auto& [color, members] : classes) {
    const auto sums = local_sums(g, y.values.values);
    std::vector<VertexId> raised;
    for (VertexId v : members) {
      if (sums[v] <= kHalf) raised.push_back(v);
    }
    for (VertexId v : raised) y.values.values[v] = unit;
    y.order.insert(y.order.end(), raised.begin(), raised.end());
    if (trace != nullptr) trace->step("basic_round_packing/color", g, y);
  }

  const int doublings = floor_log2(d / L);
  for (int i = 0; i < doublings; ++i) {
    const auto sums = local_sums(g, y.values.values);
    std::vector<VertexId> doubled;
    for (VertexId v : support) {
      if (y.values.values[v].is_positive() && sums[v] < kHalf) doubled.push_back(v);
    }
    if (doubled.empty()) break;
    for (VertexId v : doubled) y.values.values[v] = y.values.values[v].doubled();
    move_to_end(y.order, doubled, n);
    if (trace != nullptr) trace->step("basic_round_packing/doubling", g, y);
  }
  const auto sums = local_sums(g, y.values.values);
  for (VertexId v : support) {
    if (sums[v] < kHalf) {
      throw std::logic_error("basic_round_packing: node " + std::to_string(v) + " left with local sum below 1/2");
    }
  }
  charge(ledger, "basic_round_packing", col.palette_size + static_cast<std::uint64_t>(doublings),
         "one round per defective color class + log2(d/L) doublings");
  return y;
}

GreedyPacking recursive_round_packing(const Graph& g, const GreedyPacking& x, std::uint64_t L, std::uint64_t d,
                                      const VertexColoring& vcol, std::size_t r, RoundLedger* ledger,
                                      PackingTrace* trace) {
  check_packing_input(g, x, L, d, "recursive_round_packing");
  if (2 * L >= d) throw std::invalid_argument("recursive_round_packing: requires L < d/2");
  return dispatch(g, x, L, d, vcol, r, ledger, trace);
}

std::vector<VertexId> approx_mis(const Graph& g, std::size_t r, RoundLedger* ledger, const VertexColoring* vcol,
                                 PackingTrace* trace) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return {};
  VertexColoring own;
  if (vcol == nullptr) {
    own = linial_coloring(g, id_coloring(n), ledger);
    vcol = &own;
  }
  GreedyPacking x = initial_packing(g, ledger, trace);
  const std::uint64_t D = ceil_pow2(g.max_degree() + 1);
  const auto [first, second] = wrapup_factors(D);
  if (first > 1) {
    x = dispatch(g, x, first, D, *vcol, r, ledger, trace);
    x = basic_round_packing(g, x, second, second, *vcol, r, ledger, trace);
  } else {
    x = basic_round_packing(g, x, D, D, *vcol, r, ledger, trace);
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (x.values.values[v].is_zero()) continue;
    if (x.values.values[v] != kOne) throw std::logic_error("approx_mis: rounding left a fractional value");
    out.push_back(v);
  }
  return out;
}

MisResult maximal_independent_set(const Graph& g, std::size_t r, RoundLedger* ledger, PackingTrace* trace) {
  MisResult result;
  const std::size_t n = g.num_vertices();
  if (n == 0) return result;
  const VertexColoring vcol = linial_coloring(g, id_coloring(n), ledger);
  std::vector<char> removed(n, 0);
  std::vector<VertexId> remaining(n);
  for (VertexId v = 0; v < n; ++v) remaining[v] = v;
  while (!remaining.empty()) {
    const Graph sub = g.induced(remaining);
    VertexColoring sub_col;
    sub_col.palette_size = vcol.palette_size;
    for (VertexId v : remaining) sub_col.colors.push_back(vcol.colors[v]);
    const auto found = approx_mis(sub, r, ledger, &sub_col, trace);
    if (found.empty()) throw std::logic_error("maximal_independent_set: approximation returned nothing");
    for (VertexId local : found) {
      const VertexId v = remaining[local];
      result.nodes.push_back(v);
      removed[v] = 1;
      for (VertexId u : g.neighbors(v)) removed[u] = 1;
    }
    std::erase_if(remaining, [&](VertexId v) { return removed[v] != 0; });
    ++result.iterations;
    charge(ledger, "mis_driver", 1, "one round per repetition to remove S and its neighbors");
  }
  std::sort(result.nodes.begin(), result.nodes.end());
  return result;
}

IndependentSetVerdict validate_independent_set(const Graph& g, const std::vector<VertexId>& nodes) {
  IndependentSetVerdict verdict;
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : nodes) {
    if (v >= g.num_vertices() || in[v]) {
      verdict.independent = false;
      verdict.witness = "node " + std::to_string(v) + " out of range or repeated";
      return verdict;
    }
    in[v] = 1;
  }
  for (auto [u, v] : g.edges()) {
    if (in[u] && in[v]) {
      verdict.independent = false;
      verdict.witness = "adjacent nodes " + std::to_string(u) + " and " + std::to_string(v) + " both selected";
      return verdict;
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) continue;
    const auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](VertexId u) { return in[u] != 0; })) {
      verdict.maximal = false;
      verdict.witness = "node " + std::to_string(v) + " is neither selected nor adjacent to a selected node";
      break;
    }
  }
  return verdict;
}

std::vector<std::int64_t> vertex_color(const Graph& g, std::size_t r, const VertexLists* lists,
                                       RoundLedger* ledger) {
  const std::size_t n = g.num_vertices();
  VertexLists palette;
  if (lists != nullptr) {
    if (lists->size() != n) throw std::invalid_argument("vertex_color: list count does not match node count");
    palette = *lists;
    for (VertexId v = 0; v < n; ++v) {
      auto sorted = palette[v];
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("vertex_color: list of node " + std::to_string(v) + " repeats a color");
      }
      if (palette[v].size() < g.degree(v) + 1) {
        throw std::invalid_argument("vertex_color: node " + std::to_string(v) + " has a list of size " +
                                    std::to_string(palette[v].size()) + ", needs at least " +
                                    std::to_string(g.degree(v) + 1));
      }
    }
  } else {
    palette.assign(n, {});
    for (auto& l : palette) {
      for (std::size_t c = 1; c <= g.max_degree() + 1; ++c) l.push_back(static_cast<std::int64_t>(c));
    }
  }
  // Product graph: node (v, c) per list entry; cliques per v; (v,c)-(u,c) per edge.
  std::vector<std::size_t> first(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) first[v + 1] = first[v] + palette[v].size();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t i = first[v]; i < first[v + 1]; ++i) {
      for (std::size_t j = i + 1; j < first[v + 1]; ++j) edges.emplace_back(i, j);
    }
  }
  for (auto [u, v] : g.edges()) {
    std::map<std::int64_t, std::size_t> at_u;
    for (std::size_t i = 0; i < palette[u].size(); ++i) at_u[palette[u][i]] = first[u] + i;
    for (std::size_t j = 0; j < palette[v].size(); ++j) {
      auto it = at_u.find(palette[v][j]);
      if (it != at_u.end()) edges.emplace_back(it->second, first[v] + j);
    }
  }
  const Graph product = Graph::build(first[n], edges);
  const auto mis = maximal_independent_set(product, r + 1, ledger);
  std::vector<std::int64_t> colors(n, 0);
  std::vector<std::size_t> hits(n, 0);
  for (VertexId node : mis.nodes) {
    const auto v = static_cast<VertexId>(std::upper_bound(first.begin(), first.end(), node) - first.begin() - 1);
    colors[v] = palette[v][node - first[v]];
    ++hits[v];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (hits[v] != 1) {
      throw std::logic_error("vertex_color: node " + std::to_string(v) + " has " + std::to_string(hits[v]) +
                             " selected colors, expected exactly one");
    }
  }
  return colors;
}

VertexColoringVerdict validate_vertex_coloring(const Graph& g, const std::vector<std::int64_t>& colors,
                                               const VertexLists* lists) {
  VertexColoringVerdict verdict;
  if (colors.size() != g.num_vertices()) {
    verdict.proper = false;
    verdict.witness = std::to_string(colors.size()) + " colors for " + std::to_string(g.num_vertices()) + " nodes";
    return verdict;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    verdict.max_color = std::max(verdict.max_color, colors[v]);
    if (lists != nullptr && verdict.in_lists) {
      const auto& l = (*lists)[v];
      if (std::find(l.begin(), l.end(), colors[v]) == l.end()) {
        verdict.in_lists = false;
        if (verdict.witness.empty()) verdict.witness = "node " + std::to_string(v) + " color not in its list";
      }
    }
  }
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) {
      verdict.proper = false;
      if (verdict.witness.empty()) {
        verdict.witness = "adjacent nodes " + std::to_string(u) + " and " + std::to_string(v) + " share color " +
                          std::to_string(colors[u]);
      }
      break;
    }
  }
  return verdict;
}

}  // namespace hypermatch

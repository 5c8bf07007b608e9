#include "hypermatch/coloring.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace hypermatch {

namespace {

// q^m, saturating at UINT64_MAX.
std::uint64_t sat_pow(std::uint64_t q, unsigned m) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q != 0 && out > UINT64_MAX / q) return UINT64_MAX;
    out *= q;
  }
  return out;
}

// Smallest q >= 1 with q^m >= value.
std::uint64_t root_ceil(std::uint64_t value, unsigned m) {
  if (value <= 1) return 1;
  std::uint64_t lo = 1, hi = 2;
  while (sat_pow(hi, m) < value) hi *= 2;
  while (lo + 1 < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (sat_pow(mid, m) >= value) hi = mid;
    else lo = mid;
  }
  return hi;
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::uint64_t eval_poly(Color color, std::uint64_t q, unsigned k, std::uint64_t a) {
  // Base-q digits are the coefficients, least significant first.
  std::uint64_t acc = 0;
  std::uint64_t power = 1;
  for (unsigned i = 0; i <= k; ++i) {
    acc = (acc + (color % q) * power) % q;
    color /= q;
    power = power * a % q;
  }
  return acc;
}

void check_proper(const Graph& g, const VertexColoring& c, const char* who) {
  if (c.colors.size() != g.num_vertices()) {
    throw std::invalid_argument(std::string(who) + ": coloring size does not match vertex count");
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (c.colors[v] >= c.palette_size) {
      throw std::invalid_argument(std::string(who) + ": color of vertex " + std::to_string(v) + " outside palette");
    }
  }
  for (auto [u, v] : g.edges()) {
    if (c.colors[u] == c.colors[v]) {
      throw std::invalid_argument(std::string(who) + ": initial coloring is improper at edge {" +
                                  std::to_string(u) + "," + std::to_string(v) + "}");
    }
  }
}

std::vector<Color> apply_step(const Graph& g, const std::vector<Color>& colors, const ReductionStep& step) {
  std::vector<Color> next(colors.size());
  std::vector<Color> nb;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    nb.clear();
    for (VertexId u : g.neighbors(v)) nb.push_back(colors[u]);
    next[v] = reduce_color(colors[v], nb, step);
  }
  return next;
}

// Smallest k >= 1 with q^{k+1} >= palette.
unsigned min_degree_for(std::uint64_t q, std::uint64_t palette) {
  unsigned k = 1;
  while (sat_pow(q, k + 1) < palette) ++k;
  return k;
}

}  // namespace

std::uint64_t next_prime(std::uint64_t value) {
  while (!is_prime(value)) ++value;
  return value;
}

VertexColoring id_coloring(std::size_t n) {
  VertexColoring c;
  c.colors.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.colors[i] = i;
  c.palette_size = n;
  return c;
}

std::size_t max_defect(const Graph& g, const std::vector<Color>& colors) {
  std::size_t worst = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::size_t same = 0;
    for (VertexId u : g.neighbors(v)) same += colors[u] == colors[v] ? 1 : 0;
    worst = std::max(worst, same);
  }
  return worst;
}

bool is_proper(const Graph& g, const std::vector<Color>& colors) { return max_defect(g, colors) == 0; }

Color reduce_color(Color own, const std::vector<Color>& neighbor_colors, const ReductionStep& step) {
  const std::uint64_t q = step.q;
  std::uint64_t best_a = 0;
  std::size_t best_conflicts = SIZE_MAX;
  for (std::uint64_t a = 0; a < q && best_conflicts > 0; ++a) {
    const std::uint64_t mine = eval_poly(own, q, step.k, a);
    std::size_t conflicts = 0;
    for (Color c : neighbor_colors) {
      if (c != own && eval_poly(c, q, step.k, a) == mine) ++conflicts;
    }
    if (conflicts < best_conflicts) {
      best_conflicts = conflicts;
      best_a = a;
    }
  }
  return best_a * q + eval_poly(own, q, step.k, best_a);
}

std::vector<ReductionStep> linial_schedule(std::uint64_t palette, std::size_t degree_bound) {
  std::vector<ReductionStep> steps;
  if (degree_bound == 0) return steps;
  const std::uint64_t delta = degree_bound;
  while (true) {
    ReductionStep best;
    for (unsigned k = 1;; ++k) {
      const std::uint64_t q = next_prime(std::max({k * delta + 1, root_ceil(palette, k + 1), std::uint64_t{2}}));
      if (best.q == 0 || q < best.q) best = {q, k};
      if (k * delta + 1 > palette || k >= 64) break;
    }
    if (best.q * best.q >= palette) break;
    steps.push_back(best);
    palette = best.q * best.q;
  }
  return steps;
}

std::vector<ReductionStep> defective_schedule(std::uint64_t proper_palette, std::size_t degree_bound,
                                              std::uint64_t p) {
  if (p == 0 || degree_bound == 0) return {};
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = 2; q * q < proper_palette; ++q) {
    if (is_prime(q)) primes.push_back(q);
  }
  // Shortest paths over palettes: an edge C -> q^2 spends floor(k*D/q) defect.
  struct Parent {
    std::uint64_t from;
    ReductionStep step;
  };
  std::map<std::uint64_t, std::uint64_t> dist{{proper_palette, 0}};
  std::map<std::uint64_t, Parent> parent;
  using Item = std::pair<std::uint64_t, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0, proper_palette);
  while (!queue.empty()) {
    const auto [cost, palette] = queue.top();
    queue.pop();
    if (dist[palette] < cost) continue;
    for (std::uint64_t q : primes) {
      if (q * q >= palette) break;
      const unsigned k = min_degree_for(q, palette);
      const std::uint64_t next_cost = cost + (k * degree_bound) / q;
      if (next_cost > p) continue;
      const std::uint64_t target = q * q;
      auto it = dist.find(target);
      if (it == dist.end() || next_cost < it->second) {
        dist[target] = next_cost;
        parent[target] = {palette, {q, k}};
        queue.emplace(next_cost, target);
      }
    }
  }
  const std::uint64_t goal = dist.begin()->first;  // smallest reachable palette
  std::vector<ReductionStep> steps;
  for (std::uint64_t at = goal; at != proper_palette; at = parent[at].from) steps.push_back(parent[at].step);
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::uint64_t schedule_palette(std::uint64_t palette, const std::vector<ReductionStep>& steps) {
  return steps.empty() ? palette : steps.back().q * steps.back().q;
}

VertexColoring linial_coloring(const Graph& g, const VertexColoring& initial, RoundLedger* ledger,
                               std::optional<std::size_t> degree_bound) {
  check_proper(g, initial, "linial_coloring");
  const std::size_t delta = degree_bound.value_or(g.max_degree());
  if (delta < g.max_degree()) throw std::invalid_argument("linial_coloring: degree bound below max degree");
  VertexColoring out;
  if (delta == 0) {
    out.colors.assign(g.num_vertices(), 0);
    out.palette_size = 1;
    return out;
  }
  const auto steps = linial_schedule(initial.palette_size, delta);
  out.colors = initial.colors;
  for (const auto& step : steps) out.colors = apply_step(g, out.colors, step);
  out.palette_size = schedule_palette(initial.palette_size, steps);
  charge(ledger, "linial", steps.size(), "one round per color-reduction step, O(log* C0) steps");
  return out;
}

VertexColoring edge_coloring_init(const Hypergraph& h, RoundLedger* ledger) {
  const Graph f = line_graph(h);
  return linial_coloring(f, id_coloring(h.num_edges()), ledger);
}

VertexColoring defective_coloring(const Graph& g, const VertexColoring& given, std::uint64_t p, RoundLedger* ledger,
                                  std::optional<std::size_t> degree_bound) {
  check_proper(g, given, "defective_coloring");
  const std::size_t delta = degree_bound.value_or(g.max_degree());
  if (delta < g.max_degree()) throw std::invalid_argument("defective_coloring: degree bound below max degree");
  if (p >= delta) {
    VertexColoring out;
    out.colors.assign(g.num_vertices(), 0);
    out.palette_size = 1;
    out.defect = delta;
    return out;
  }
  VertexColoring out = linial_coloring(g, given, ledger, delta);
  const auto steps = defective_schedule(out.palette_size, delta, p);
  for (const auto& step : steps) {
    out.colors = apply_step(g, out.colors, step);
    out.defect += (step.k * delta) / step.q;
  }
  out.palette_size = schedule_palette(out.palette_size, steps);
  charge(ledger, "defective_coloring", steps.size(), "one round per defect-spending reduction step");
  return out;
}

}  // namespace hypermatch

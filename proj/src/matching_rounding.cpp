#include "hypermatch/matching_rounding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace hypermatch {

namespace {

std::vector<Dyadic> loads_of(const Hypergraph& h, const std::vector<Dyadic>& values) {
  return vertex_loads(h, values);
}

bool has_half_tight_endpoint(const Hypergraph& h, EdgeId e, const std::vector<Dyadic>& loads) {
  const auto vs = h.edge(e);
  return std::any_of(vs.begin(), vs.end(), [&](VertexId v) { return loads[v] >= kHalf; });
}

void check_pow2(std::uint64_t value, const char* name) {
  if (!is_pow2(value)) throw std::invalid_argument(std::string(name) + " must be a power of two");
}

// Throws unless x is a valid (1/d)-fractional matching of h.
void check_input(const Hypergraph& h, const FractionalAssignment& x, std::uint64_t d, const char* who) {
  if (x.values.size() != h.num_edges()) {
    throw std::invalid_argument(std::string(who) + ": assignment size does not match edge count");
  }
  const Dyadic floor = Dyadic::inverse_pow2(floor_log2(d));
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (x.values[e] < kZero) throw std::invalid_argument(std::string(who) + ": negative value on edge " + std::to_string(e));
    if (!x.values[e].is_zero() && x.values[e] < floor) {
      throw std::invalid_argument(std::string(who) + ": edge " + std::to_string(e) + " value " + x.values[e].str() +
                                  " below 1/" + std::to_string(d));
    }
  }
  const auto loads = loads_of(h, x.values);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (loads[v] > kOne) {
      throw std::invalid_argument(std::string(who) + ": input is not a fractional matching (vertex " +
                                  std::to_string(v) + " has load " + loads[v].str() + ")");
    }
  }
}

void check_params(const RoundingParams& params, const char* who) {
  check_pow2(params.L, "L");
  check_pow2(params.d, "d");
  if (params.L > params.d) throw std::invalid_argument(std::string(who) + ": requires L <= d");
}

std::uint64_t log2_u(std::uint64_t v) { return static_cast<std::uint64_t>(floor_log2(v)); }

bool recursion_allowed(std::uint64_t L, std::uint64_t d) {
  const std::uint64_t lg = log2_u(L);
  return L > 4 && L * lg * lg <= d;
}

FractionalAssignment recursive_impl(const Hypergraph& h, const FractionalAssignment& x, const RoundingParams& params,
                                    const VertexColoring& ecol, RoundLedger* ledger, RoundingTrace* trace, int depth);

FractionalAssignment dispatch(const Hypergraph& h, const FractionalAssignment& x, const RoundingParams& params,
                              const VertexColoring& ecol, RoundLedger* ledger, RoundingTrace* trace, int depth) {
  if (recursion_allowed(params.L, params.d)) return recursive_impl(h, x, params, ecol, ledger, trace, depth);
  return basic_round(h, x, params, ecol, ledger, trace);
}

FractionalAssignment recursive_impl(const Hypergraph& h, const FractionalAssignment& x, const RoundingParams& params,
                                    const VertexColoring& ecol, RoundLedger* ledger, RoundingTrace* trace, int depth) {
  check_params(params, "recursive_round");
  check_input(h, x, params.d, "recursive_round");
  const std::uint64_t L = params.L;
  const std::uint64_t d = params.d;
  const std::size_t r = std::max<std::size_t>(h.rank(), 1);
  const std::size_t cap = params.iteration_cap.value_or(16 * r);
  // sqrt(2L) snapped up to a power of two.
  const std::uint64_t inner = std::uint64_t{1} << ((log2_u(L) + 2) / 2);

  const Dyadic x_total = x.total();
  FractionalAssignment y = FractionalAssignment::zeros(h.num_edges(), Dyadic(static_cast<std::int64_t>(L), floor_log2(d)));
  Dyadic y_total;
  for (std::size_t it = 0; it < cap; ++it) {
    if (y_total * static_cast<std::int64_t>(4 * r) >= x_total) break;
    charge(ledger, "recursive_round", 1, "one round per iteration to drop edges at y-half-tight vertices");

    const auto loads = loads_of(h, y.values);
    FractionalAssignment z = x;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      if (!z.values[e].is_zero() && has_half_tight_endpoint(h, e, loads)) z.values[e] = kZero;
    }
    const auto z1 = dispatch(h, z, {inner, d, std::nullopt}, ecol, ledger, trace, depth + 1);
    const auto z2 = dispatch(h, z1, {inner, d / inner, std::nullopt}, ecol, ledger, trace, depth + 1);

    Dyadic added;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      if (z2.values[e].is_zero()) continue;
      const Dyadic half = z2.values[e].halved();
      y.values[e] += half;
      added += half;
    }
    if (trace != nullptr) {
      trace->iterations.push_back({depth, L, x_total, y_total, added});
      trace->step("recursive_round/update", y);
    }
    y_total += added;
  }
  return y;
}

}  // namespace

FractionalAssignment greedy_doubling_step(const Hypergraph& h, const FractionalAssignment& x) {
  const auto loads = loads_of(h, x.values);
  FractionalAssignment out = x;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (!has_half_tight_endpoint(h, e, loads)) out.values[e] = out.values[e].doubled();
  }
  return out;
}

FractionalAssignment greedy_fractional_matching(const Hypergraph& h, RoundLedger* ledger, RoundingTrace* trace,
                                                std::optional<std::uint64_t> degree_bound) {
  if (h.num_edges() == 0) return FractionalAssignment::zeros(0, kOne);
  if (degree_bound && *degree_bound < h.max_degree()) {
    throw std::invalid_argument("greedy_fractional_matching: degree bound below the max degree");
  }
  const std::uint64_t D = ceil_pow2(degree_bound.value_or(h.max_degree()));
  const int iterations = floor_log2(D);
  const Dyadic start = Dyadic::inverse_pow2(iterations);
  FractionalAssignment x{std::vector<Dyadic>(h.num_edges(), start), start};
  if (trace != nullptr) trace->step("greedy/init", x);
  for (int i = 0; i < iterations; ++i) {
    x = greedy_doubling_step(h, x);
    if (trace != nullptr) trace->step("greedy/doubling", x);
  }
  charge(ledger, "greedy", static_cast<std::uint64_t>(iterations), "log2 D doubling iterations");
  return x;
}

FractionalAssignment basic_round(const Hypergraph& h, const FractionalAssignment& x, const RoundingParams& params,
                                 const VertexColoring& ecol, RoundLedger* ledger, RoundingTrace* trace) {
  check_params(params, "basic_round");
  check_input(h, x, params.d, "basic_round");
  if (ecol.colors.size() != h.num_edges()) {
    throw std::invalid_argument("basic_round: edge coloring size does not match edge count");
  }
  const std::uint64_t L = params.L;
  const std::uint64_t d = params.d;
  const Dyadic unit(static_cast<std::int64_t>(L), floor_log2(d));  // L/d
  FractionalAssignment y = FractionalAssignment::zeros(h.num_edges(), unit);
  if (trace != nullptr) ++trace->basic_calls;

  std::vector<EdgeId> support;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (!x.values[e].is_zero()) support.push_back(e);
  }
  if (support.empty()) return y;

  // Part I: defective coloring of the support's line graph with defect
  // d/(2L) - 1, so each vertex sees at most d/(2L) edges of one color.
  const Hypergraph hx = h.restrict_edges(support);
  const Graph f = line_graph(hx);
  VertexColoring given;
  given.palette_size = ecol.palette_size;
  for (EdgeId e : support) given.colors.push_back(ecol.colors[e]);
  const std::uint64_t p = d < 2 * L ? 0 : d / (2 * L) - 1;
  const std::size_t per_vertex = std::min<std::uint64_t>(d, std::max<std::size_t>(h.max_degree(), 1));
  const std::size_t degree_bound = std::max<std::size_t>(h.rank(), 1) * (per_vertex - 1);
  const VertexColoring col = defective_coloring(f, given, p, ledger, degree_bound);

  // Part II: raise color classes in increasing order, freezing edges at
  // half-tight vertices after each class.
  std::map<Color, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < support.size(); ++i) classes[col.colors[i]].push_back(i);
  std::vector<Dyadic> loads(h.num_vertices());
  std::vector<char> frozen(support.size(), 0);
  for (const auto& [color, members] : classes) {
    std::vector<VertexId> touched;
    for (std::size_t i : members) {
      if (frozen[i]) continue;
      y.values[support[i]] = unit;
      for (VertexId v : h.edge(support[i])) {
        loads[v] += unit;
        touched.push_back(v);
      }
    }
    for (VertexId v : touched) {
      if (loads[v] < kHalf) continue;
      for (EdgeId e : hx.incident(v)) frozen[e] = 1;
    }
    if (trace != nullptr) trace->step("basic_round/color", y);
  }

  // Doubling on edges without a half-tight endpoint.
  const int doublings = floor_log2(d / L);
  for (int i = 0; i < doublings; ++i) {
    const auto current = loads_of(h, y.values);
    bool changed = false;
    for (EdgeId e : support) {
      if (has_half_tight_endpoint(h, e, current)) continue;
      if (y.values[e].is_zero()) throw std::logic_error("basic_round: unraised edge without a half-tight endpoint");
      y.values[e] = y.values[e].doubled();
      changed = true;
    }
    if (trace != nullptr) trace->step("basic_round/doubling", y);
    if (!changed) break;
  }
  const auto final_loads = loads_of(h, y.values);
  for (EdgeId e : support) {
    if (!has_half_tight_endpoint(h, e, final_loads)) {
      throw std::logic_error("basic_round: edge " + std::to_string(e) + " left without a half-tight endpoint");
    }
  }
  charge(ledger, "basic_round", col.palette_size + static_cast<std::uint64_t>(doublings),
         "one round per defective color class + log2(d/L) doublings");
  return y;
}

FractionalAssignment recursive_round(const Hypergraph& h, const FractionalAssignment& x, const RoundingParams& params,
                                     const VertexColoring& ecol, RoundLedger* ledger, RoundingTrace* trace) {
  check_params(params, "recursive_round");
  const std::uint64_t lg = log2_u(params.L);
  if (params.L * lg * lg > params.d) throw std::invalid_argument("recursive_round: requires L log^2 L <= d");
  if (params.L <= 4) return basic_round(h, x, params, ecol, ledger, trace);
  return recursive_impl(h, x, params, ecol, ledger, trace, 0);
}

FractionalAssignment round_by(const Hypergraph& h, const FractionalAssignment& x, const RoundingParams& params,
                             const VertexColoring& ecol, RoundLedger* ledger, RoundingTrace* trace) {
  check_params(params, "round_by");
  return dispatch(h, x, params, ecol, ledger, trace, 0);
}

std::pair<std::uint64_t, std::uint64_t> wrapup_factors(std::uint64_t D) {
  const std::uint64_t lg = log2_u(std::max<std::uint64_t>(D, 1));
  const std::uint64_t sq = std::max<std::uint64_t>(lg * lg, 1);
  if (D <= sq) return {1, D};
  const std::uint64_t first = std::uint64_t{1} << log2_u(D / sq);
  if (first <= 1) return {1, D};
  return {first, D / first};
}

Matching approx_max_matching(const Hypergraph& h, RoundLedger* ledger, const VertexColoring* ecol,
                             RoundingTrace* trace) {
  Matching m;
  if (h.num_edges() == 0) return m;
  VertexColoring own;
  if (ecol == nullptr) {
    own = edge_coloring_init(h, ledger);
    ecol = &own;
  }
  FractionalAssignment x = greedy_fractional_matching(h, ledger, trace);
  const std::uint64_t D = ceil_pow2(h.max_degree());
  const auto [first, second] = wrapup_factors(D);
  if (first > 1) {
    x = round_by(h, x, {first, D, std::nullopt}, *ecol, ledger, trace);
    x = basic_round(h, x, {second, second, std::nullopt}, *ecol, ledger, trace);
  } else {
    x = basic_round(h, x, {D, D, std::nullopt}, *ecol, ledger, trace);
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (x.values[e].is_zero()) continue;
    if (x.values[e] != kOne) throw std::logic_error("approx_max_matching: rounding left a fractional value");
    m.edges.push_back(e);
  }
  return m;
}

MaximalMatchingResult maximal_matching(const Hypergraph& h, std::optional<double> slack, RoundLedger* ledger) {
  MaximalMatchingResult result;
  if (h.num_edges() == 0) return result;
  std::size_t limit = SIZE_MAX;
  if (slack) {
    if (!(*slack > 0.0 && *slack < 1.0)) throw std::invalid_argument("maximal_matching: slack must be in (0,1)");
    const double r = static_cast<double>(h.rank());
    limit = static_cast<std::size_t>(std::ceil(32.0 * r * r * r * std::log(1.0 / *slack)));
  }
  const VertexColoring ecol = edge_coloring_init(h, ledger);
  std::vector<char> blocked(h.num_vertices(), 0);
  std::vector<EdgeId> remaining(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) remaining[e] = e;

  while (!remaining.empty() && result.iterations < limit) {
    const Hypergraph sub = h.restrict_edges(remaining);
    VertexColoring sub_ecol;
    sub_ecol.palette_size = ecol.palette_size;
    for (EdgeId e : remaining) sub_ecol.colors.push_back(ecol.colors[e]);
    const Matching found = approx_max_matching(sub, ledger, &sub_ecol);
    if (found.empty()) throw std::logic_error("maximal_matching: approximation returned nothing on a nonempty input");
    for (EdgeId local : found.edges) {
      const EdgeId e = remaining[local];
      result.matching.edges.push_back(e);
      for (VertexId v : h.edge(e)) blocked[v] = 1;
    }
    std::erase_if(remaining, [&](EdgeId e) {
      const auto vs = h.edge(e);
      return std::any_of(vs.begin(), vs.end(), [&](VertexId v) { return blocked[v] != 0; });
    });
    ++result.iterations;
    charge(ledger, "maximal_driver", 1, "one round per repetition to remove matched edges and their neighbors");
  }
  std::sort(result.matching.edges.begin(), result.matching.edges.end());
  result.unblocked = std::move(remaining);
  return result;
}

}  // namespace hypermatch

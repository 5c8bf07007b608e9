#include "hypermatch/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace hypermatch {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t r, std::mt19937_64& rng) {
  if (r == 0 || r > n) {
    throw std::invalid_argument("random-hypergraph needs 1 <= r <= n, got r=" + std::to_string(r) +
                                " n=" + std::to_string(n));
  }
  const std::size_t lo = std::min<std::size_t>(2, r);
  std::vector<std::vector<VertexId>> edges;
  std::vector<VertexId> pool(n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t size = lo + uniform_below(rng, r - lo + 1);
    std::iota(pool.begin(), pool.end(), VertexId{0});
    // Partial Fisher-Yates.
    for (std::size_t j = 0; j < size; ++j) std::swap(pool[j], pool[j + uniform_below(rng, n - j)]);
    edges.emplace_back(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  }
  return Hypergraph::build(n, std::move(edges));
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random-graph needs 0 <= p <= 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

Graph random_regular(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  if (d >= n && !(n == 0 && d == 0)) {
    throw std::invalid_argument("d-regular needs d < n, got d=" + std::to_string(d) + " n=" + std::to_string(n));
  }
  if ((n * d) % 2 != 0) throw std::invalid_argument("d-regular needs n*d even");
  // Circulant start (i ~ i+-1..i+-d/2, plus i ~ i+n/2 for odd d), then
  // random double-edge swaps that keep the graph simple.
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::set<std::pair<VertexId, VertexId>> present;
  auto add = [&](VertexId a, VertexId b) {
    const auto e = std::minmax(a, b);
    if (present.insert(e).second) edges.emplace_back(e);
  };
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t k = 1; k <= d / 2; ++k) add(v, static_cast<VertexId>((v + k) % n));
    if (d % 2 == 1) add(v, static_cast<VertexId>((v + n / 2) % n));
  }
  const std::size_t swaps = 10 * edges.size();
  for (std::size_t i = 0; i < swaps && edges.size() >= 2; ++i) {
    const std::size_t a = uniform_below(rng, edges.size());
    const std::size_t b = uniform_below(rng, edges.size());
    if (a == b) continue;
    auto [u, v] = edges[a];
    auto [x, y] = edges[b];
    if (uniform_below(rng, 2) == 0) std::swap(x, y);
    // u-v, x-y  ->  u-x, v-y
    if (u == x || v == y || u == y || v == x) continue;
    const auto e1 = std::minmax(u, x);
    const auto e2 = std::minmax(v, y);
    if (present.count(e1) || present.count(e2)) continue;
    present.erase(edges[a]);
    present.erase(edges[b]);
    present.insert(e1);
    present.insert(e2);
    edges[a] = e1;
    edges[b] = e2;
  }
  return Graph::build(n, edges);
}

Graph star_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::build(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
  return Graph::build(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::build(n, edges);
}

}  // namespace hypermatch

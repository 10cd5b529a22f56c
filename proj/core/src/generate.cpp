#include "lazyburn/generate.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace lazyburn {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("Rng::below needs a positive bound");
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::uint64_t> Rng::sample(std::uint64_t universe, std::uint64_t count) {
  if (count > universe) throw InvalidInput("cannot sample more values than the universe holds");
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = universe - count; j < universe; ++j) {
    std::uint64_t t = below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

Hypergraph gen_star_hypergraph(int k, int l) {
  if (k < 2 || l < 2) {
    throw InvalidInput("generalized star needs k >= 2 and l >= 2, got k=" + std::to_string(k) +
                       " l=" + std::to_string(l));
  }
  std::vector<std::vector<Vertex>> edges;
  for (int i = 0; i < l; ++i) {
    std::vector<Vertex> e{0};
    for (int j = 0; j < k; ++j) e.push_back(static_cast<Vertex>(1 + i * k + j));
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<std::size_t>(k * l + 1), edges);
}

Hypergraph gen_latin_square_hypergraph(int n) {
  if (n < 1) throw InvalidInput("Latin square order must be positive");
  const auto un = static_cast<Vertex>(n);
  std::vector<std::vector<Vertex>> edges;
  for (Vertex i = 0; i < un; ++i) {
    std::vector<Vertex> row;
    for (Vertex j = 0; j < un; ++j) row.push_back(i * un + j);
    edges.push_back(std::move(row));
  }
  for (Vertex j = 0; j < un; ++j) {
    std::vector<Vertex> col;
    for (Vertex i = 0; i < un; ++i) col.push_back(i * un + j);
    edges.push_back(std::move(col));
  }
  for (Vertex s = 0; s < un; ++s) {
    std::vector<Vertex> cells;
    for (Vertex i = 0; i < un; ++i) cells.push_back(i * un + (s + un - i) % un);
    std::sort(cells.begin(), cells.end());
    edges.push_back(std::move(cells));
  }
  return Hypergraph(un * un, edges);
}

Hypergraph gen_random_hypergraph(std::size_t n, std::size_t m, std::size_t size_min,
                                 std::size_t size_max, std::uint64_t seed) {
  if (size_min < 1 || size_min > size_max || size_max > n) {
    throw InvalidInput("random hypergraph needs 1 <= size_min <= size_max <= n, got size_min=" +
                       std::to_string(size_min) + " size_max=" + std::to_string(size_max) +
                       " n=" + std::to_string(n));
  }
  Rng rng(seed);
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto size = rng.between(size_min, size_max);
    std::vector<Vertex> e;
    e.reserve(size);
    for (auto v : rng.sample(n, size)) e.push_back(static_cast<Vertex>(v));
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, edges);
}

Graph gen_random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (m > pairs) {
    throw InvalidInput("a simple graph on " + std::to_string(n) + " vertices has at most " +
                       std::to_string(pairs) + " edges");
  }
  Rng rng(seed);
  std::vector<GraphEdge> edges;
  edges.reserve(m);
  // Pair index p enumerates (u, v), u < v, row by row.
  for (auto p : rng.sample(pairs, m)) {
    Vertex u = 0;
    std::uint64_t row = n - 1;
    while (p >= row) {
      p -= row;
      --row;
      ++u;
    }
    edges.emplace_back(u, static_cast<Vertex>(u + 1 + p));
  }
  return Graph(n, edges);
}

}  // namespace lazyburn

#ifndef LAZYBURN_GENERATE_HPP
#define LAZYBURN_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lazyburn/graph.hpp"
#include "lazyburn/hypergraph.hpp"

namespace lazyburn {

/**
 * Deterministic random source for instance generation.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the
 * standard. Bounded draws use rejection sampling on raw 64-bit outputs
 * instead of std::uniform_int_distribution (whose algorithm differs between
 * standard libraries), so a seed produces the same instances everywhere.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  /// `count` distinct values from [0, universe), sorted. Floyd's algorithm,
  /// so the cost is O(count log count) independent of the universe size.
  std::vector<std::uint64_t> sample(std::uint64_t universe, std::uint64_t count);

 private:
  std::mt19937_64 engine_;
};

/// H_{k,l}: l edges of size k+1 sharing the centre vertex 0; edge i is
/// {0} ∪ {1 + ik, ..., (i+1)k}. Requires k, l >= 2.
Hypergraph gen_star_hypergraph(int k, int l);

/// Cyclic Latin square L(i,j) = (i+j) mod n. Cell (i,j) is vertex i*n + j;
/// edges are the n rows, then the n columns, then the n symbol classes.
Hypergraph gen_latin_square_hypergraph(int n);

/// m independent edges: size uniform in [size_min, size_max], then that many
/// distinct vertices uniformly at random. Requires 1 <= size_min <= size_max <= n.
Hypergraph gen_random_hypergraph(std::size_t n, std::size_t m, std::size_t size_min,
                                 std::size_t size_max, std::uint64_t seed);

/// A uniformly random graph with exactly m distinct edges (m <= n(n-1)/2).
Graph gen_random_graph(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace lazyburn

#endif  // LAZYBURN_GENERATE_HPP

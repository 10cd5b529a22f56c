#ifndef LAZYBURN_SOLVE_HPP
#define LAZYBURN_SOLVE_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "lazyburn/burn.hpp"
#include "lazyburn/hypergraph.hpp"

namespace lazyburn {

struct SearchLimits {
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::milliseconds max_time{60'000};
  /// Threads for the branch-and-bound phase. The value never depends on it;
  /// the witness does not either, because it is recomputed single-threaded.
  unsigned workers = 1;
  /// Search core(H) instead of H. Turning it off is for cross-checking only.
  bool use_core_reduction = true;
  /// Largest reduced hypergraph the search accepts; SizeLimitExceeded beyond.
  std::size_t max_search_vertices = 256;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  double millis = 0.0;
};

struct SolveResult {
  std::size_t value = 0;
  /// A minimum burning set; the lexicographically least one when the search
  /// finished within its limits.
  VertexSet witness;
  /// Chronological list of the witness, length n - value.
  ChronList certificate;
  /// False when a limit stopped the search; value and witness are then the
  /// best burning set found, not necessarily minimum.
  bool optimal = true;
  SolveStats stats;
  Model model = Model::spontaneous;
};

/**
 * Exact lazy burning number by core reduction and branch-and-bound.
 *
 * The search runs on core(H) (after dropping singleton edges for the
 * original model): peeled vertices burn for free and both models agree on
 * the core. The incumbent starts from the greedy bound. Nodes branch on one
 * unburned vertex at a time, highest core degree first, and are pruned by a
 * lower bound on the residual hypergraph (unburned vertices, edges with at
 * least two unburned vertices). A second pass then finds the lexicographically
 * least burning set of the optimal size.
 */
SolveResult b_lazy(const Hypergraph& h, Model model, const SearchLimits& limits = {});

/// Minimum burning set size by checking all subsets in order of size.
/// Throws SizeLimitExceeded when n > 16.
std::size_t b_lazy_bruteforce(const Hypergraph& h, Model model);

constexpr std::size_t bruteforce_vertex_limit = 16;

/// (b_L(H), b_L(H \ {v})) in the spontaneous model. The second value always
/// lies in [first - 1, first].
std::pair<std::size_t, std::size_t> b_lazy_monotonicity_check(const Hypergraph& h, Vertex v,
                                                              const SearchLimits& limits = {});

}  // namespace lazyburn

#endif  // LAZYBURN_SOLVE_HPP

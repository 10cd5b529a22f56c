#ifndef LAZYBURN_FORCE_HPP
#define LAZYBURN_FORCE_HPP

#include <cstddef>
#include <vector>

#include "lazyburn/graph.hpp"

namespace lazyburn {

/// u -> v.
struct Force {
  Vertex forcer;
  Vertex forced;
  friend auto operator<=>(const Force&, const Force&) = default;
};

enum class ForcingRule {
  standard,  ///< only black vertices force
  skew,      ///< any vertex with exactly one white neighbour forces it
};

struct ForceTrace {
  VertexSet seed;
  /// Forces fired in each round, ordered by forced vertex; a vertex forced
  /// by several candidates is credited to the lowest forcer id.
  std::vector<std::vector<Force>> rounds;
  VertexSet black;
  bool complete = false;
};

/// Round-synchronous forcing: the colouring at the start of a round decides
/// every force of that round. Throws InvalidInput on out-of-range seeds.
ForceTrace run_forcing(const Graph& g, const VertexSet& seed, ForcingRule rule);

inline ForceTrace zero_force(const Graph& g, const VertexSet& seed) {
  return run_forcing(g, seed, ForcingRule::standard);
}
inline ForceTrace skew_zero_force(const Graph& g, const VertexSet& seed) {
  return run_forcing(g, seed, ForcingRule::skew);
}

struct ForcingNumber {
  std::size_t value = 0;
  /// Lexicographically least forcing set of minimum size.
  VertexSet witness;
};

constexpr std::size_t default_forcing_limit = 25;

/// z(G) and z_0(G) by increasing-size subset search. Throws
/// SizeLimitExceeded when G has more than `limit` vertices (at most 64).
ForcingNumber z_exact(const Graph& g, std::size_t limit = default_forcing_limit);
ForcingNumber z0_exact(const Graph& g, std::size_t limit = default_forcing_limit);
ForcingNumber forcing_number(const Graph& g, ForcingRule rule,
                             std::size_t limit = default_forcing_limit);

}  // namespace lazyburn

#endif  // LAZYBURN_FORCE_HPP

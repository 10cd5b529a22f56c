#pragma once

#include "lazyburn/graph.hpp"
#include "lazyburn/hypergraph.hpp"

namespace fixtures {

using lazyburn::Graph;
using lazyburn::Hypergraph;

// Vertices a..e are 0..4.
inline constexpr lazyburn::Vertex a = 0, b = 1, c = 2, d = 3, e = 4;

/// Three 3-edges in a row: {a,b,c}, {b,c,d}, {c,d,e}.
inline Hypergraph fig2() { return Hypergraph(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}, {"a", "b", "c", "d", "e"}); }

/// [{0},{0,1},{1,2},{2,3,4}]: peels 0, 1, 2 and leaves the edge {3,4}.
inline Hypergraph peel_chain() { return Hypergraph(5, {{0}, {0, 1}, {1, 2}, {2, 3, 4}}); }

/// The 5-cycle a-b-d-e-c-a, so that {a,b} forces c and d, then e.
inline Graph c5() { return Graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}}); }

}  // namespace fixtures

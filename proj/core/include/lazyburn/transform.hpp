#ifndef LAZYBURN_TRANSFORM_HPP
#define LAZYBURN_TRANSFORM_HPP

#include <vector>

#include "lazyburn/graph.hpp"
#include "lazyburn/hypergraph.hpp"

namespace lazyburn {

/**
 * A weakly induced subhypergraph together with the maps back to its parent.
 *
 * `vertex_map[i]` is the parent id of sub-vertex i (increasing, so the
 * re-indexing preserves vertex order); `edge_map[j]` is the parent edge that
 * sub-edge j was cut from (also increasing).
 */
struct SubHypergraph {
  Hypergraph graph;
  std::vector<Vertex> vertex_map;
  std::vector<EdgeId> edge_map;

  /// Sub ids to parent ids.
  VertexSet to_parent(const VertexSet& sub) const;
  /// Parent ids to sub ids; parent vertices outside the subhypergraph are dropped.
  VertexSet restrict_to_sub(const VertexSet& parent) const;
};

/// Bipartite incidence (Levi) graph. Vertex i < n is hypergraph vertex i,
/// vertex n + j is hyperedge j; parts 0 and 1 respectively.
Graph incidence_graph(const Hypergraph& h);

/// H*: one vertex per hyperedge of H and, for every non-isolated vertex v of H
/// in increasing order, the hyperedge {j : v in edge j}. Repeated
/// neighbourhoods stay repeated.
Hypergraph dual(const Hypergraph& h);

/// Dual hyperedge index of each vertex of H, or -1 for isolated vertices
/// (which contribute no dual hyperedge).
std::vector<long> dual_edge_index(const Hypergraph& h);

/// H[U]: vertex set U (re-indexed) and edges {e ∩ U : e ∩ U ≠ ∅}.
SubHypergraph weak_induced(const Hypergraph& h, const VertexSet& keep);

/// H \ L = H[V \ L].
SubHypergraph remove_vertices(const Hypergraph& h, const VertexSet& drop);

/// Same vertices, every singleton edge removed. This is the hypergraph on
/// which the original (non-spontaneous) model behaves like the spontaneous one.
Hypergraph drop_singleton_edges(const Hypergraph& h);

/// N(G): one hyperedge N(v) per vertex of positive degree, increasing v.
Hypergraph open_neighborhood_hypergraph(const Graph& g);

/// N[G]: one hyperedge N(v) ∪ {v} per vertex.
Hypergraph closed_neighborhood_hypergraph(const Graph& g);

/// T(G): a triangle glued to every vertex. (v, i) for i in {1,2,3} has id
/// 3v + i - 1; the original edges live on layer 1.
Graph triangle_gluing(const Graph& g);

/// Vertex ids of T(G) on layer 1, i.e. B × {1}.
VertexSet lift_to_triangle_layer(const VertexSet& b);

}  // namespace lazyburn

#endif  // LAZYBURN_TRANSFORM_HPP

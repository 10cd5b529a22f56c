#ifndef LAZYBURN_GRAPH_HPP
#define LAZYBURN_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lazyburn/types.hpp"

namespace lazyburn {

using GraphEdge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on 0..n-1 with sorted adjacency lists.
 *
 * An optional two-colouring `part` (values 0 and 1) marks a bipartition;
 * incidence graphs use part 0 for hypergraph vertices and part 1 for edges.
 */
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on self-loops, parallel edges, ids >= n, or a
  /// part vector that has the wrong size, a value other than 0/1, or an
  /// edge inside one part.
  Graph(std::size_t n, const std::vector<GraphEdge>& edges, std::vector<std::uint8_t> part = {});

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Every edge once as (u, v) with u < v, sorted.
  std::vector<GraphEdge> edges() const;

  bool has_parts() const { return !part_.empty(); }
  const std::vector<std::uint8_t>& parts() const { return part_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
  std::vector<std::uint8_t> part_;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K_{1,j}: vertex 0 is the centre, 1..j are leaves.
Graph star_graph(std::size_t leaves);

}  // namespace lazyburn

#endif  // LAZYBURN_GRAPH_HPP

#ifndef LAZYBURN_HYPERGRAPH_HPP
#define LAZYBURN_HYPERGRAPH_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lazyburn/types.hpp"

namespace lazyburn {

/**
 * A hypergraph on vertices 0..n-1 with a multiset of hyperedges.
 *
 * Each hyperedge is a non-empty, strictly increasing list of vertex ids.
 * Singleton edges, repeated edges and isolated vertices are all allowed.
 * The edge list is stored in CSR form together with the vertex-to-edge
 * incidence lists, so both directions are O(1) spans. Immutable once built.
 */
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws InvalidInput when an edge is empty, unsorted, repeats a vertex
  /// or mentions an id >= n, or when labels is non-empty with size != n.
  Hypergraph(std::size_t n, const std::vector<std::vector<Vertex>>& edges,
             std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edge_offsets_.size() - 1; }

  /// Total number of incidences, sum of |e|.
  std::size_t num_pins() const { return pins_.size(); }

  std::span<const Vertex> edge(EdgeId e) const {
    return {pins_.data() + edge_offsets_[e], pins_.data() + edge_offsets_[e + 1]};
  }
  std::size_t edge_size(EdgeId e) const { return edge_offsets_[e + 1] - edge_offsets_[e]; }

  /// Indices of the edges containing v, increasing.
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {incidence_.data() + vertex_offsets_[v], incidence_.data() + vertex_offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return vertex_offsets_[v + 1] - vertex_offsets_[v]; }

  bool contains(EdgeId e, Vertex v) const;

  std::vector<std::vector<Vertex>> edge_lists() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// The display label of v, or its id when the hypergraph is unlabelled.
  std::string label(Vertex v) const;

  /// Structural equality: same n and the same edge list in the same order.
  /// Labels are presentation only and do not take part.
  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edge_offsets_ == b.edge_offsets_ && a.pins_ == b.pins_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> edge_offsets_{0};
  std::vector<Vertex> pins_;
  std::vector<std::size_t> vertex_offsets_{0};
  std::vector<EdgeId> incidence_;
  std::vector<std::string> labels_;
};

/// Keeps the first copy of each repeated hyperedge. Never applied implicitly.
Hypergraph dedup_edges(const Hypergraph& h);

/// Size of the smallest / largest hyperedge; 0 for an edgeless hypergraph.
std::size_t min_edge_size(const Hypergraph& h);
std::size_t max_edge_size(const Hypergraph& h);

std::size_t min_degree(const Hypergraph& h);
std::size_t max_degree(const Hypergraph& h);

/// Vertices contained in no hyperedge.
VertexSet isolated_vertices(const Hypergraph& h);

bool has_singleton_edge(const Hypergraph& h);

}  // namespace lazyburn

#endif  // LAZYBURN_HYPERGRAPH_HPP

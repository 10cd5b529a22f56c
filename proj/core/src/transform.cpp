#include "lazyburn/transform.hpp"

#include <algorithm>

namespace lazyburn {

VertexSet SubHypergraph::to_parent(const VertexSet& sub) const {
  sub.check_range(vertex_map.size(), "subhypergraph vertex set");
  std::vector<Vertex> out;
  out.reserve(sub.size());
  for (Vertex v : sub) out.push_back(vertex_map[v]);
  return VertexSet(std::move(out));
}

VertexSet SubHypergraph::restrict_to_sub(const VertexSet& parent) const {
  std::vector<Vertex> out;
  for (Vertex v : parent) {
    auto it = std::lower_bound(vertex_map.begin(), vertex_map.end(), v);
    if (it != vertex_map.end() && *it == v) {
      out.push_back(static_cast<Vertex>(it - vertex_map.begin()));
    }
  }
  return VertexSet(std::move(out));
}

Graph incidence_graph(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  std::vector<GraphEdge> edges;
  edges.reserve(h.num_pins());
  for (EdgeId e = 0; e < m; ++e) {
    for (Vertex v : h.edge(e)) edges.emplace_back(v, static_cast<Vertex>(n + e));
  }
  std::vector<std::uint8_t> part(n + m, 0);
  std::fill(part.begin() + static_cast<std::ptrdiff_t>(n), part.end(), 1);
  return Graph(n + m, edges, std::move(part));
}

Hypergraph dual(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> edges;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    auto inc = h.incident_edges(v);
    if (!inc.empty()) edges.emplace_back(inc.begin(), inc.end());
  }
  return Hypergraph(h.num_edges(), edges);
}

std::vector<long> dual_edge_index(const Hypergraph& h) {
  std::vector<long> out(h.num_vertices(), -1);
  long next = 0;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) > 0) out[v] = next++;
  }
  return out;
}

SubHypergraph weak_induced(const Hypergraph& h, const VertexSet& keep) {
  const auto in = keep.mask(h.num_vertices());
  SubHypergraph out;
  out.vertex_map = keep.ids();
  std::vector<Vertex> new_id(h.num_vertices(), 0);
  for (std::size_t i = 0; i < out.vertex_map.size(); ++i) {
    new_id[out.vertex_map[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> edges;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::vector<Vertex> cut;
    for (Vertex v : h.edge(e)) {
      if (in[v]) cut.push_back(new_id[v]);
    }
    if (!cut.empty()) {
      edges.push_back(std::move(cut));
      out.edge_map.push_back(e);
    }
  }
  std::vector<std::string> labels;
  if (h.has_labels()) {
    for (Vertex v : out.vertex_map) labels.push_back(h.labels()[v]);
  }
  out.graph = Hypergraph(keep.size(), edges, std::move(labels));
  return out;
}

SubHypergraph remove_vertices(const Hypergraph& h, const VertexSet& drop) {
  return weak_induced(h, drop.complement(h.num_vertices()));
}

Hypergraph drop_singleton_edges(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> edges;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (h.edge_size(e) > 1) {
      auto pins = h.edge(e);
      edges.emplace_back(pins.begin(), pins.end());
    }
  }
  return Hypergraph(h.num_vertices(), edges, h.labels());
}

Hypergraph open_neighborhood_hypergraph(const Graph& g) {
  std::vector<std::vector<Vertex>> edges;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    if (!nb.empty()) edges.emplace_back(nb.begin(), nb.end());
  }
  return Hypergraph(g.num_vertices(), edges);
}

Hypergraph closed_neighborhood_hypergraph(const Graph& g) {
  std::vector<std::vector<Vertex>> edges;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    std::vector<Vertex> closed(nb.begin(), nb.end());
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    edges.push_back(std::move(closed));
  }
  return Hypergraph(g.num_vertices(), edges);
}

Graph triangle_gluing(const Graph& g) {
  std::vector<GraphEdge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(3 * u, 3 * v);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    edges.emplace_back(3 * v, 3 * v + 1);
    edges.emplace_back(3 * v, 3 * v + 2);
    edges.emplace_back(3 * v + 1, 3 * v + 2);
  }
  return Graph(3 * g.num_vertices(), edges);
}

VertexSet lift_to_triangle_layer(const VertexSet& b) {
  std::vector<Vertex> out;
  for (Vertex v : b) out.push_back(3 * v);
  return VertexSet(std::move(out));
}

}  // namespace lazyburn

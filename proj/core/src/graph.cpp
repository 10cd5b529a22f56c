#include "lazyburn/graph.hpp"

#include <algorithm>
#include <string>

namespace lazyburn {

Graph::Graph(std::size_t n, const std::vector<GraphEdge>& edges, std::vector<std::uint8_t> part)
    : adjacency_(n), part_(std::move(part)) {
  if (!part_.empty()) {
    if (part_.size() != n) throw InvalidInput("part vector has the wrong length");
    for (auto p : part_) {
      if (p > 1) throw InvalidInput("part labels must be 0 or 1");
    }
  }
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (!part_.empty() && part_[u] == part_[v]) {
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") lies inside one part");
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw InvalidInput("parallel edge at vertex " + std::to_string(v));
    }
  }
  num_edges_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<GraphEdge> Graph::edges() const {
  std::vector<GraphEdge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph path_graph(std::size_t n) {
  std::vector<GraphEdge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  std::vector<GraphEdge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<GraphEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<GraphEdge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

}  // namespace lazyburn

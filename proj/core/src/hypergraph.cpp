#include "lazyburn/hypergraph.hpp"

#include <algorithm>
#include <map>

namespace lazyburn {

Hypergraph::Hypergraph(std::size_t n, const std::vector<std::vector<Vertex>>& edges,
                       std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_) {
    throw InvalidInput("expected " + std::to_string(n_) + " labels, got " +
                       std::to_string(labels_.size()));
  }

  edge_offsets_.reserve(edges.size() + 1);
  std::size_t total = 0;
  for (const auto& e : edges) total += e.size();
  pins_.reserve(total);

  std::vector<std::size_t> degree(n_ + 1, 0);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const auto& e = edges[j];
    if (e.empty()) throw InvalidInput("edge " + std::to_string(j) + " is empty");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= n_) {
        throw InvalidInput("edge " + std::to_string(j) + " mentions vertex " +
                           std::to_string(e[i]) + " but n = " + std::to_string(n_));
      }
      if (i > 0 && e[i - 1] >= e[i]) {
        throw InvalidInput("edge " + std::to_string(j) + " is not strictly increasing");
      }
      ++degree[e[i] + 1];
    }
    pins_.insert(pins_.end(), e.begin(), e.end());
    edge_offsets_.push_back(pins_.size());
  }

  vertex_offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) vertex_offsets_[v + 1] = vertex_offsets_[v] + degree[v + 1];
  incidence_.resize(pins_.size());
  std::vector<std::size_t> fill(vertex_offsets_.begin(), vertex_offsets_.end() - 1);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    for (Vertex v : edges[j]) incidence_[fill[v]++] = static_cast<EdgeId>(j);
  }
}

bool Hypergraph::contains(EdgeId e, Vertex v) const {
  auto pins = edge(e);
  return std::binary_search(pins.begin(), pins.end(), v);
}

std::vector<std::vector<Vertex>> Hypergraph::edge_lists() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    auto pins = edge(e);
    out.emplace_back(pins.begin(), pins.end());
  }
  return out;
}

std::string Hypergraph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Hypergraph dedup_edges(const Hypergraph& h) {
  std::map<std::vector<Vertex>, bool> seen;
  std::vector<std::vector<Vertex>> kept;
  for (auto& e : h.edge_lists()) {
    if (seen.emplace(e, true).second) kept.push_back(std::move(e));
  }
  return Hypergraph(h.num_vertices(), kept, h.labels());
}

std::size_t min_edge_size(const Hypergraph& h) {
  if (h.num_edges() == 0) return 0;
  std::size_t best = h.edge_size(0);
  for (EdgeId e = 1; e < h.num_edges(); ++e) best = std::min(best, h.edge_size(e));
  return best;
}

std::size_t max_edge_size(const Hypergraph& h) {
  std::size_t best = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) best = std::max(best, h.edge_size(e));
  return best;
}

std::size_t min_degree(const Hypergraph& h) {
  if (h.num_vertices() == 0) return 0;
  std::size_t best = h.degree(0);
  for (Vertex v = 1; v < h.num_vertices(); ++v) best = std::min(best, h.degree(v));
  return best;
}

std::size_t max_degree(const Hypergraph& h) {
  std::size_t best = 0;
  for (Vertex v = 0; v < h.num_vertices(); ++v) best = std::max(best, h.degree(v));
  return best;
}

VertexSet isolated_vertices(const Hypergraph& h) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) == 0) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

bool has_singleton_edge(const Hypergraph& h) {
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (h.edge_size(e) == 1) return true;
  }
  return false;
}

}  // namespace lazyburn

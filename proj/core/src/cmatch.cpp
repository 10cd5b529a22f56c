#include "lazyburn/cmatch.hpp"

#include <limits>
#include <string>

#include "lazyburn/solve.hpp"
#include "lazyburn/transform.hpp"

namespace lazyburn {

VertexSet CMatching::matched_vertices() const {
  std::vector<Vertex> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(p.vertex);
  return VertexSet(std::move(out));
}

InvalidChronList::InvalidChronList(std::size_t index)
    : InvalidInput("chronological list is invalid at entry " + std::to_string(index)),
      index_(index) {}

bool validate_cmatching(const Hypergraph& h, const CMatching& m) {
  if (m.host_vertices != h.num_vertices() || m.host_edges != h.num_edges()) {
    throw InvalidInput("C-matching was built for a different hypergraph");
  }
  constexpr std::size_t never = std::numeric_limits<std::size_t>::max();
  // Position of the last pair matching each vertex.
  std::vector<std::size_t> last(h.num_vertices(), never);
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    auto [v, e] = m.pairs[i];
    if (v >= h.num_vertices() || e >= h.num_edges()) {
      throw InvalidInput("C-matching pair " + std::to_string(i) + " is out of range");
    }
    last[v] = i;
  }
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    auto [v, e] = m.pairs[i];
    if (!h.contains(e, v)) return false;
    for (Vertex u : h.edge(e)) {
      if (last[u] != never && last[u] > i) return false;
    }
  }
  return true;
}

CMatching cmatching_from_chron(const Hypergraph& h, const VertexSet& seed, const ChronList& list) {
  if (auto bad = find_chron_violation(h, seed, list)) throw InvalidChronList(*bad);
  CMatching out{h.num_vertices(), h.num_edges(), {}};
  out.pairs.reserve(list.size());
  for (auto [e, v] : list) out.pairs.push_back({v, e});
  return out;
}

SeededChron chron_from_cmatching(const Hypergraph& h, const CMatching& m) {
  if (!validate_cmatching(h, m)) throw InvalidInput("not a C-matching");
  SeededChron out;
  out.seed = m.matched_vertices().complement(h.num_vertices());
  out.list.reserve(m.size());
  for (auto [v, e] : m.pairs) out.list.push_back({e, v});
  return out;
}

CMatching retrograde(const Hypergraph& h, const CMatching& m) {
  if (!validate_cmatching(h, m)) throw InvalidInput("retrograde needs a valid C-matching");
  const auto dual_index = dual_edge_index(h);
  std::size_t dual_edges = 0;
  for (long idx : dual_index) dual_edges += idx >= 0 ? 1 : 0;

  CMatching out{h.num_edges(), dual_edges, {}};
  out.pairs.reserve(m.size());
  for (auto it = m.pairs.rbegin(); it != m.pairs.rend(); ++it) {
    // Matched vertices lie in an edge, so they always have a dual edge.
    out.pairs.push_back({it->edge, static_cast<EdgeId>(dual_index[it->vertex])});
  }
  return out;
}

CMatching max_cmatching(const Hypergraph& h) { return max_cmatching(h, SearchLimits{}); }

CMatching max_cmatching(const Hypergraph& h, const SearchLimits& limits) {
  SolveResult best = b_lazy(h, Model::spontaneous, limits);
  return cmatching_from_chron(h, best.witness, best.certificate);
}

}  // namespace lazyburn

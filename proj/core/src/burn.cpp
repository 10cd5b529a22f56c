#include "lazyburn/burn.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace lazyburn {
namespace {

bool edge_is_active(const Hypergraph& h, EdgeId e, Model model) {
  return model == Model::spontaneous || h.edge_size(e) > 1;
}

Vertex only_unburned(const Hypergraph& h, EdgeId e, const std::vector<char>& burned) {
  for (Vertex v : h.edge(e)) {
    if (!burned[v]) return v;
  }
  return std::numeric_limits<Vertex>::max();
}

struct Peeling {
  std::vector<char> removed;
  std::vector<Vertex> removals;
  std::vector<EdgeId> removal_edges;
};

Peeling peel(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  Peeling out;
  out.removed.assign(n, 0);
  std::vector<std::uint32_t> live(m);

  // Singleton pool keyed by (vertex, edge): the smallest vertex is peeled
  // first, witnessed by its lowest-index singleton edge.
  using Entry = std::pair<Vertex, EdgeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pool;
  for (EdgeId e = 0; e < m; ++e) {
    live[e] = static_cast<std::uint32_t>(h.edge_size(e));
    if (live[e] == 1) pool.emplace(h.edge(e)[0], e);
  }

  while (!pool.empty()) {
    auto [v, e] = pool.top();
    pool.pop();
    if (out.removed[v]) continue;
    out.removed[v] = 1;
    out.removals.push_back(v);
    out.removal_edges.push_back(e);
    for (EdgeId f : h.incident_edges(v)) {
      if (--live[f] == 1) pool.emplace(only_unburned(h, f, out.removed), f);
    }
  }
  return out;
}

}  // namespace

Propagator::Propagator(const Hypergraph& h, Model model)
    : h_(&h), burned_(h.num_vertices(), 0), live_(h.num_edges(), 0) {
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (edge_is_active(h, e, model)) {
      live_[e] = static_cast<std::uint32_t>(h.edge_size(e));
      if (live_[e] == 1) queue_.push_back(e);
    }
  }
  settle();
}

void Propagator::ignite(Vertex v) {
  if (burned_[v]) return;
  burned_[v] = 1;
  ++burned_count_;
  for (EdgeId f : h_->incident_edges(v)) {
    if (live_[f] > 0 && --live_[f] == 1) queue_.push_back(f);
  }
  settle();
}

void Propagator::settle() {
  while (!queue_.empty()) {
    EdgeId e = queue_.back();
    queue_.pop_back();
    if (live_[e] != 1) continue;
    Vertex u = only_unburned(*h_, e, burned_);
    burned_[u] = 1;
    ++burned_count_;
    for (EdgeId f : h_->incident_edges(u)) {
      if (live_[f] > 0 && --live_[f] == 1) queue_.push_back(f);
    }
  }
}

BurnTrace propagate(const Hypergraph& h, const VertexSet& seed, Model model) {
  const std::size_t m = h.num_edges();
  BurnTrace trace;
  trace.seed = seed;
  std::vector<char> burned = seed.mask(h.num_vertices());

  std::vector<std::uint32_t> live(m, 0);
  std::vector<EdgeId> candidates;
  for (EdgeId e = 0; e < m; ++e) {
    if (!edge_is_active(h, e, model)) continue;
    for (Vertex v : h.edge(e)) live[e] += burned[v] ? 0 : 1;
    if (live[e] == 1) candidates.push_back(e);
  }

  constexpr EdgeId none = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> witness(h.num_vertices(), none);
  while (!candidates.empty()) {
    std::vector<Vertex> fresh;
    for (EdgeId e : candidates) {
      if (live[e] != 1) continue;
      Vertex u = only_unburned(h, e, burned);
      if (witness[u] == none) fresh.push_back(u);
      witness[u] = std::min(witness[u], e);
    }
    if (fresh.empty()) break;
    std::sort(fresh.begin(), fresh.end());

    candidates.clear();
    for (Vertex u : fresh) {
      trace.chron.push_back({witness[u], u});
      burned[u] = 1;
    }
    for (Vertex u : fresh) {
      for (EdgeId f : h.incident_edges(u)) {
        if (live[f] > 0 && --live[f] == 1) candidates.push_back(f);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    trace.rounds.emplace_back(std::move(fresh));
  }

  trace.burned = VertexSet::from_mask(burned);
  trace.complete = trace.burned.size() == h.num_vertices();
  return trace;
}

bool is_lazy_burning_set(const Hypergraph& h, const VertexSet& seed, Model model) {
  seed.check_range(h.num_vertices(), "burning set");
  if (model == Model::original) {
    return is_degenerate(remove_vertices(drop_singleton_edges(h), seed).graph);
  }
  return is_degenerate(remove_vertices(h, seed).graph);
}

CoreResult core(const Hypergraph& h) {
  Peeling p = peel(h);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (!p.removed[v]) keep.push_back(v);
  }
  return CoreResult{weak_induced(h, VertexSet(std::move(keep))), std::move(p.removals),
                    std::move(p.removal_edges)};
}

bool is_degenerate(const Hypergraph& h) { return peel(h).removals.size() == h.num_vertices(); }

std::variant<ChronList, StalledBurn> chronological_list(const Hypergraph& h, const VertexSet& seed,
                                                        Model model) {
  BurnTrace trace = propagate(h, seed, model);
  if (trace.complete) return std::move(trace.chron);
  return StalledBurn{std::move(trace.burned)};
}

std::optional<std::size_t> find_chron_violation(const Hypergraph& h, const VertexSet& seed,
                                                const ChronList& list, Model model) {
  std::vector<char> burned = seed.mask(h.num_vertices());
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto [e, v] = list[i];
    if (e >= h.num_edges() || v >= h.num_vertices()) {
      throw InvalidInput("chronological list entry " + std::to_string(i) + " is out of range");
    }
    if (burned[v] || !h.contains(e, v) || !edge_is_active(h, e, model)) return i;
    for (Vertex u : h.edge(e)) {
      if (u != v && !burned[u]) return i;
    }
    burned[v] = 1;
  }
  return std::nullopt;
}

}  // namespace lazyburn

#include "lazyburn/force.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

namespace lazyburn {
namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

/// Bitmask forcing closure for graphs with at most 64 vertices.
class MaskForcer {
 public:
  MaskForcer(const Graph& g, ForcingRule rule) : rule_(rule), adj_(g.num_vertices(), 0) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (Vertex u : g.neighbors(v)) adj_[v] |= bit(u);
    }
    full_ = g.num_vertices() == 64 ? ~Mask{0} : bit(static_cast<Vertex>(g.num_vertices())) - 1;
  }

  Mask full() const { return full_; }

  Mask closure(Mask black) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex u = 0; u < adj_.size(); ++u) {
        if (rule_ == ForcingRule::standard && !(black & bit(u))) continue;
        Mask white = adj_[u] & ~black;
        if (white != 0 && (white & (white - 1)) == 0) {
          black |= white;
          changed = true;
        }
      }
    }
    return black;
  }

 private:
  ForcingRule rule_;
  std::vector<Mask> adj_;
  Mask full_ = 0;
};

/// Lexicographic search for a forcing set with exactly `picks` more members.
/// A candidate already black in the current closure is skipped: a minimum
/// forcing set never contains a vertex forced by its smaller members.
bool extend(const MaskForcer& forcer, Vertex start, std::size_t picks, Mask black,
            std::vector<Vertex>& chosen, std::size_t n) {
  if (black == forcer.full()) return true;
  if (picks == 0) return false;
  const Mask before = start >= 64 ? ~Mask{0} : bit(start) - 1;
  Mask open = forcer.full() & ~black & ~before;
  if (static_cast<std::size_t>(std::popcount(open)) < picks) return false;
  for (Vertex x = start; x < n; ++x) {
    if (black & bit(x)) continue;
    chosen.push_back(x);
    if (extend(forcer, x + 1, picks - 1, forcer.closure(black | bit(x)), chosen, n)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

ForceTrace run_forcing(const Graph& g, const VertexSet& seed, ForcingRule rule) {
  const std::size_t n = g.num_vertices();
  ForceTrace trace;
  trace.seed = seed;
  std::vector<char> black = seed.mask(n);
  std::vector<std::uint32_t> white_degree(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) white_degree[u] += black[v] ? 0 : 1;
  }

  constexpr Vertex none = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> forcer_of(n, none);
  while (true) {
    std::vector<Vertex> forced;
    for (Vertex u = 0; u < n; ++u) {
      if (white_degree[u] != 1) continue;
      if (rule == ForcingRule::standard && !black[u]) continue;
      for (Vertex v : g.neighbors(u)) {
        if (black[v]) continue;
        if (forcer_of[v] == none) forced.push_back(v);
        forcer_of[v] = std::min(forcer_of[v], u);
        break;
      }
    }
    if (forced.empty()) break;
    std::sort(forced.begin(), forced.end());
    std::vector<Force> round;
    round.reserve(forced.size());
    for (Vertex v : forced) {
      round.push_back({forcer_of[v], v});
      black[v] = 1;
    }
    for (Vertex v : forced) {
      for (Vertex w : g.neighbors(v)) --white_degree[w];
    }
    trace.rounds.push_back(std::move(round));
  }

  trace.black = VertexSet::from_mask(black);
  trace.complete = trace.black.size() == n;
  return trace;
}

ForcingNumber forcing_number(const Graph& g, ForcingRule rule, std::size_t limit) {
  const std::size_t n = g.num_vertices();
  if (n > limit || n > 64) {
    throw SizeLimitExceeded("exact forcing search is limited to " +
                            std::to_string(std::min<std::size_t>(limit, 64)) +
                            " vertices, graph has " + std::to_string(n));
  }
  MaskForcer forcer(g, rule);
  const Mask start = forcer.closure(0);
  std::vector<Vertex> chosen;
  for (std::size_t k = 0; k <= n; ++k) {
    chosen.clear();
    if (extend(forcer, 0, k, start, chosen, n)) {
      return {chosen.size(), VertexSet(chosen)};
    }
  }
  // Unreachable: V(G) itself forces.
  return {n, VertexSet::range(n)};
}

ForcingNumber z_exact(const Graph& g, std::size_t limit) {
  return forcing_number(g, ForcingRule::standard, limit);
}

ForcingNumber z0_exact(const Graph& g, std::size_t limit) {
  return forcing_number(g, ForcingRule::skew, limit);
}

}  // namespace lazyburn

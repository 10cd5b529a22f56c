#ifndef LAZYBURN_BURN_HPP
#define LAZYBURN_BURN_HPP

#include <compare>
#include <optional>
#include <variant>
#include <vector>

#include "lazyburn/hypergraph.hpp"
#include "lazyburn/transform.hpp"

namespace lazyburn {

/// One step {h_i, v_i} of a chronological list: edge h_i burns vertex v_i.
struct ChronEntry {
  EdgeId edge;
  Vertex vertex;
  friend auto operator<=>(const ChronEntry&, const ChronEntry&) = default;
};

/// Ordered certificate of a burning process. For every i, v_i lies in h_i
/// and h_i \ {v_i} is contained in the seed plus v_1..v_{i-1}.
using ChronList = std::vector<ChronEntry>;

/// Full record of a lazy burning run from a seed set.
struct BurnTrace {
  VertexSet seed;
  /// Vertices newly burned in each propagation round; no empty rounds.
  std::vector<VertexSet> rounds;
  VertexSet burned;
  /// Burns in (round, vertex id) order; each vertex is paired with the
  /// lowest-index edge that could burn it in that round.
  ChronList chron;
  bool complete = false;
};

/// Round-synchronous lazy burning from `seed` to its fixpoint.
/// Throws InvalidInput if the seed mentions an id >= n.
BurnTrace propagate(const Hypergraph& h, const VertexSet& seed, Model model);

/// B is a lazy burning set iff H \ B is degenerate (for the original model,
/// singleton edges are dropped first).
bool is_lazy_burning_set(const Hypergraph& h, const VertexSet& seed, Model model);

/**
 * Output of the peeling algorithm.
 *
 * `removals` lists the peeled vertices in the order they were taken;
 * `removal_edges[i]` is an edge that was the singleton {removals[i]} at the
 * moment it was peeled. `core` is the weakly induced subhypergraph on the
 * remaining vertices, with maps back to the input.
 */
struct CoreResult {
  SubHypergraph core;
  std::vector<Vertex> removals;
  std::vector<EdgeId> removal_edges;
};

/// Repeatedly removes the smallest-id vertex that forms a singleton edge,
/// together with that edge, until no singleton edge is left. Edges emptied
/// by the removals are discarded. O(sum |e| + n log n).
CoreResult core(const Hypergraph& h);

/// core(h) has no vertices.
bool is_degenerate(const Hypergraph& h);

/// Returned by chronological_list when the seed does not burn everything.
struct StalledBurn {
  VertexSet burned;
};

/// The chronological list of propagate(h, seed, model) when the seed is a
/// burning set, otherwise the maximal burned set.
std::variant<ChronList, StalledBurn> chronological_list(const Hypergraph& h, const VertexSet& seed,
                                                        Model model);

/// Index of the first entry that breaks the chronological-list rules for
/// `seed` (vertex not in the edge, vertex already burned, prefix not yet
/// burned, or a singleton edge under the original model), or nullopt if the
/// whole list is valid. Throws InvalidInput on out-of-range ids.
std::optional<std::size_t> find_chron_violation(const Hypergraph& h, const VertexSet& seed,
                                                const ChronList& list,
                                                Model model = Model::spontaneous);

/**
 * Incremental burning closure, used by the solver and the greedy bound.
 *
 * Keeps per-edge counts of unburned vertices. `ignite` adds one vertex to
 * the seed and propagates to the fixpoint with a work queue, so a sequence
 * of ignitions costs O(sum |e|) in total. Copies are independent, which is
 * how the branch-and-bound snapshots its state.
 */
class Propagator {
 public:
  Propagator(const Hypergraph& h, Model model);

  /// Burns v (if not yet burned) and everything that follows from it.
  void ignite(Vertex v);

  bool burned(Vertex v) const { return burned_[v] != 0; }
  bool all_burned() const { return burned_count_ == h_->num_vertices(); }
  std::size_t burned_count() const { return burned_count_; }
  std::size_t unburned_count() const { return h_->num_vertices() - burned_count_; }

  /// Unburned vertices in edge e (0 for edges the model ignores).
  std::size_t unburned_in(EdgeId e) const { return live_[e]; }

  VertexSet burned_set() const { return VertexSet::from_mask(burned_); }
  const Hypergraph& hypergraph() const { return *h_; }

 private:
  void settle();

  const Hypergraph* h_;
  std::vector<char> burned_;
  std::vector<std::uint32_t> live_;
  std::vector<EdgeId> queue_;
  std::size_t burned_count_ = 0;
};

}  // namespace lazyburn

#endif  // LAZYBURN_BURN_HPP

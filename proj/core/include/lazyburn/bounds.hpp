#ifndef LAZYBURN_BOUNDS_HPP
#define LAZYBURN_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lazyburn/hypergraph.hpp"

namespace lazyburn {

/**
 * Closed-form bounds on the lazy burning number b_L (spontaneous model).
 *
 * Notation used below, for a hypergraph with n vertices and m edges:
 *   r      smallest edge size            Δ̄   largest edge size
 *   λ̄      largest |e ∩ f|, e ≠ f        Δ    largest vertex degree
 *   λ      largest number of edges containing a fixed pair of vertices
 *   δ      smallest degree of a non-isolated vertex
 *   m(H)   maximum C-matching size, n - b_L
 *
 * Several lower bounds are only valid at a point t <= m(H). The report uses
 * t = 1 for the intersection family unless a certified m(H) is supplied.
 * The uniformity bound needs its evaluation point below m(H); without a
 * certificate it is checked against max(1, ⌈m/Δ⌉), which never exceeds m(H)
 * because the matched vertices of a maximum C-matching cover every edge.
 * Real-valued bounds are rounded up, since b_L is an integer.
 */

/// max(0, n - m).
long long lb_trivial(const Hypergraph& h);

/// D̄_t - λ̄·C(t,2) - t, with D̄_t the sum of the t smallest edge sizes.
/// Requires 1 <= t <= m (InvalidInput otherwise); valid for b_L only when
/// t <= m(H), which the caller must ensure.
long long lb_intersection(const Hypergraph& h, std::size_t t);

/// ⌈(r-1)²/(2λ̄) + (r-1)/2 - 3λ̄/8⌉ when λ̄ >= 1, n >= ⌈(r-1)/λ̄ + 1/2⌉ and
/// the evaluation point max(1, ⌊(r-1)/λ̄ + 1/2⌋) is at most the certified
/// lower bound on m(H); nullopt otherwise.
std::optional<long long> lb_uniformity(const Hypergraph& h,
                                       std::optional<std::size_t> certified_m = {});

/// C(r,2) for a linear hypergraph (λ̄ <= 1) with at least r edges.
std::optional<long long> lb_linear(const Hypergraph& h);

/// n - ⌈m/Δ⌉. Requires at least one edge.
long long ub_degree(const Hypergraph& h);

/// n - ⌈n/Δ̄⌉ when H has no isolated vertices.
std::optional<long long> ub_cardinality(const Hypergraph& h);

struct GreedyBurn {
  std::size_t value = 0;
  VertexSet set;
};

/// Greedy burning set: repeatedly add the vertex whose addition burns the
/// most vertices (lowest id on ties) until everything burns.
GreedyBurn ub_greedy(const Hypergraph& h, Model model);

enum class BoundKind { lower, upper };

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::lower;
  long long value = 0;
  bool applicable = false;
  std::string note;
};

/// Vertex/edge swapped versions of the lower bounds, evaluated from H's own
/// statistics: each equals the primal bound on dual(H) plus n - m.
/// Entries: dual_intersection[t] for t = 1..(safe range), dual_uniformity,
/// dual_linear.
std::vector<BoundEntry> lb_dual_family(const Hypergraph& h,
                                       std::optional<std::size_t> certified_m = {});

struct BoundReportOptions {
  /// A verified value of m(H); widens the intersection family to t <= m(H).
  std::optional<std::size_t> certified_m;
  /// Adds the greedy_upper entry (costs a propagation search).
  bool include_greedy = false;
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  long long best_lower = 0;
  long long best_upper = 0;

  const BoundEntry* find(const std::string& name) const;
};

BoundReport bound_report(const Hypergraph& h, const BoundReportOptions& options = {});

/// Raw statistics behind the bounds.
struct HypergraphStats {
  std::size_t n = 0, m = 0;
  std::size_t min_edge = 0, max_edge = 0;
  std::size_t max_edge_overlap = 0;   // λ̄
  std::size_t max_degree = 0;         // Δ
  std::size_t max_pair_degree = 0;    // λ
  std::size_t min_positive_degree = 0;
  std::size_t non_isolated = 0;
};
HypergraphStats hypergraph_stats(const Hypergraph& h);

}  // namespace lazyburn

#endif  // LAZYBURN_BOUNDS_HPP

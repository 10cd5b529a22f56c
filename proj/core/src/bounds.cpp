#include "lazyburn/bounds.hpp"

#include <algorithm>
#include <string>

#include "lazyburn/burn.hpp"

namespace lazyburn {
namespace {

using ll = long long;

ll ceil_div(ll a, ll b) {
  // b > 0
  ll q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

ll floor_div(ll a, ll b) {
  ll q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

ll choose2(ll t) { return t * (t - 1) / 2; }

ll ceil_count(std::size_t a, std::size_t b) {
  return static_cast<ll>((a + b - 1) / b);
}

/// D_t - lam*C(t,2) - t for the sorted size list `sizes`.
ll intersection_value(const std::vector<std::size_t>& sorted_sizes, std::size_t lam, std::size_t t) {
  ll sum = 0;
  for (std::size_t i = 0; i < t; ++i) sum += static_cast<ll>(sorted_sizes[i]);
  return sum - static_cast<ll>(lam) * choose2(static_cast<ll>(t)) - static_cast<ll>(t);
}

/// The uniformity formula on abstract parameters: `points` plays the role of
/// n, `r` the smallest edge, `lam` the largest overlap, `m_floor` a certified
/// lower bound on the maximum C-matching.
std::optional<ll> uniformity_value(std::size_t points, std::size_t r, std::size_t lam,
                                   ll m_floor) {
  if (lam == 0 || r == 0) return std::nullopt;
  const ll a = static_cast<ll>(r) - 1;
  const ll l = static_cast<ll>(lam);
  // x* = a/l + 1/2 = (2a + l) / (2l)
  const ll need_points = ceil_div(2 * a + l, 2 * l);
  if (static_cast<ll>(points) < need_points) return std::nullopt;
  const ll t_use = std::max<ll>(1, floor_div(2 * a + l, 2 * l));
  if (t_use > m_floor) return std::nullopt;
  return ceil_div(4 * a * a + 4 * l * a - 3 * l * l, 8 * l);
}

std::optional<ll> linear_value(std::size_t edges, std::size_t r, std::size_t lam) {
  if (edges == 0 || lam > 1 || edges < r) return std::nullopt;
  return choose2(static_cast<ll>(r));
}

/// Sizes of the primal edges, ascending.
std::vector<std::size_t> sorted_edge_sizes(const Hypergraph& h) {
  std::vector<std::size_t> out;
  out.reserve(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) out.push_back(h.edge_size(e));
  std::sort(out.begin(), out.end());
  return out;
}

/// Non-zero degrees, ascending: the edge sizes of dual(h).
std::vector<std::size_t> sorted_positive_degrees(const Hypergraph& h) {
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) > 0) out.push_back(h.degree(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Largest t for which the intersection family is reported: 1 by default
/// (m(H) >= 1 as soon as there is an edge), up to a certified m(H) otherwise.
std::size_t safe_t(std::size_t edges, std::optional<std::size_t> certified) {
  if (edges == 0) return 0;
  return std::min(edges, certified ? *certified : std::size_t{1});
}

ll m_floor(std::size_t edges, std::size_t max_deg, std::optional<std::size_t> certified) {
  if (certified) return static_cast<ll>(*certified);
  if (edges == 0) return 0;
  return std::max<ll>(1, ceil_count(edges, max_deg));
}

BoundEntry lower(std::string name, std::optional<ll> value, std::string note = {}) {
  return {std::move(name), BoundKind::lower, value.value_or(0), value.has_value(), std::move(note)};
}

BoundEntry upper(std::string name, std::optional<ll> value, std::string note = {}) {
  return {std::move(name), BoundKind::upper, value.value_or(0), value.has_value(), std::move(note)};
}

}  // namespace

HypergraphStats hypergraph_stats(const Hypergraph& h) {
  HypergraphStats s;
  s.n = h.num_vertices();
  s.m = h.num_edges();
  s.min_edge = min_edge_size(h);
  s.max_edge = max_edge_size(h);
  s.max_degree = max_degree(h);

  // Pairwise edge overlaps by counting through incidence lists:
  // O(sum over v of deg(v)^2) rather than O(m^2).
  std::vector<std::uint32_t> count(std::max(s.n, s.m), 0);
  std::vector<std::uint32_t> touched;
  for (EdgeId e = 0; e < s.m; ++e) {
    for (Vertex v : h.edge(e)) {
      for (EdgeId f : h.incident_edges(v)) {
        if (f <= e) continue;
        if (count[f]++ == 0) touched.push_back(f);
      }
    }
    for (EdgeId f : touched) {
      s.max_edge_overlap = std::max<std::size_t>(s.max_edge_overlap, count[f]);
      count[f] = 0;
    }
    touched.clear();
  }

  // Pair co-degrees the same way, vertex side.
  for (Vertex u = 0; u < s.n; ++u) {
    if (h.degree(u) > 0) {
      ++s.non_isolated;
      s.min_positive_degree = s.min_positive_degree == 0
                                  ? h.degree(u)
                                  : std::min(s.min_positive_degree, h.degree(u));
    }
    for (EdgeId e : h.incident_edges(u)) {
      for (Vertex w : h.edge(e)) {
        if (w <= u) continue;
        if (count[w]++ == 0) touched.push_back(w);
      }
    }
    for (Vertex w : touched) {
      s.max_pair_degree = std::max<std::size_t>(s.max_pair_degree, count[w]);
      count[w] = 0;
    }
    touched.clear();
  }
  return s;
}

long long lb_trivial(const Hypergraph& h) {
  const ll n = static_cast<ll>(h.num_vertices());
  const ll m = static_cast<ll>(h.num_edges());
  return std::max<ll>(0, n - m);
}

long long lb_intersection(const Hypergraph& h, std::size_t t) {
  if (t < 1 || t > h.num_edges()) {
    throw InvalidInput("intersection bound needs 1 <= t <= " + std::to_string(h.num_edges()) +
                       ", got t = " + std::to_string(t));
  }
  const auto s = hypergraph_stats(h);
  return intersection_value(sorted_edge_sizes(h), s.max_edge_overlap, t);
}

std::optional<long long> lb_uniformity(const Hypergraph& h, std::optional<std::size_t> certified_m) {
  const auto s = hypergraph_stats(h);
  if (s.m == 0) return std::nullopt;
  return uniformity_value(s.n, s.min_edge, s.max_edge_overlap,
                          m_floor(s.m, s.max_degree, certified_m));
}

std::optional<long long> lb_linear(const Hypergraph& h) {
  const auto s = hypergraph_stats(h);
  return linear_value(s.m, s.min_edge, s.max_edge_overlap);
}

long long ub_degree(const Hypergraph& h) {
  if (h.num_edges() == 0) throw InvalidInput("degree bound needs at least one edge");
  return static_cast<ll>(h.num_vertices()) - ceil_count(h.num_edges(), max_degree(h));
}

std::optional<long long> ub_cardinality(const Hypergraph& h) {
  if (h.num_vertices() == 0) return 0;
  if (!isolated_vertices(h).empty()) return std::nullopt;
  return static_cast<ll>(h.num_vertices()) - ceil_count(h.num_vertices(), max_edge_size(h));
}

GreedyBurn ub_greedy(const Hypergraph& h, Model model) {
  Propagator state(h, model);
  GreedyBurn out;
  std::vector<Vertex> picked;
  while (!state.all_burned()) {
    Vertex best = 0;
    std::size_t best_count = 0;
    bool found = false;
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
      if (state.burned(v)) continue;
      Propagator trial = state;
      trial.ignite(v);
      if (!found || trial.burned_count() > best_count) {
        best = v;
        best_count = trial.burned_count();
        found = true;
      }
    }
    state.ignite(best);
    picked.push_back(best);
  }
  out.set = VertexSet(std::move(picked));
  out.value = out.set.size();
  return out;
}

std::vector<BoundEntry> lb_dual_family(const Hypergraph& h, std::optional<std::size_t> certified_m) {
  const auto s = hypergraph_stats(h);
  // dual(h): m vertices, one edge per non-isolated vertex with size deg(v);
  // its overlap parameter is the pair co-degree and its max degree the
  // largest edge of h. The maximum C-matching has the same size on both sides.
  const ll shift = static_cast<ll>(s.n) - static_cast<ll>(s.m);
  const std::size_t dual_edges = s.non_isolated;
  const std::size_t dual_max_deg = s.max_edge;
  const auto degrees = sorted_positive_degrees(h);

  std::vector<BoundEntry> out;
  const std::size_t upto = safe_t(dual_edges, certified_m);
  for (std::size_t t = 1; t <= upto; ++t) {
    out.push_back(lower("dual_intersection[" + std::to_string(t) + "]",
                        shift + intersection_value(degrees, s.max_pair_degree, t)));
  }
  if (upto == 0) {
    out.push_back(lower("dual_intersection[1]", std::nullopt, "no vertex lies in an edge"));
  }

  std::optional<ll> uni;
  if (dual_edges > 0) {
    uni = uniformity_value(s.m, s.min_positive_degree, s.max_pair_degree,
                           m_floor(dual_edges, dual_max_deg, certified_m));
  }
  if (uni) *uni += shift;
  out.push_back(lower("dual_uniformity", uni));

  auto lin = linear_value(dual_edges, s.min_positive_degree, s.max_pair_degree);
  if (lin) *lin += shift;
  out.push_back(lower("dual_linear", lin));
  return out;
}

const BoundEntry* BoundReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

BoundReport bound_report(const Hypergraph& h, const BoundReportOptions& options) {
  const auto s = hypergraph_stats(h);
  BoundReport report;
  auto& entries = report.entries;

  entries.push_back(lower("trivial", lb_trivial(h)));

  const std::size_t upto = safe_t(s.m, options.certified_m);
  if (upto == 0) {
    entries.push_back(lower("intersection[1]", std::nullopt, "no edges"));
  } else {
    const auto sizes = sorted_edge_sizes(h);
    for (std::size_t t = 1; t <= upto; ++t) {
      entries.push_back(lower("intersection[" + std::to_string(t) + "]",
                              intersection_value(sizes, s.max_edge_overlap, t)));
    }
  }
  entries.push_back(lower("uniformity", lb_uniformity(h, options.certified_m)));
  entries.push_back(lower("linear", lb_linear(h)));
  for (auto& e : lb_dual_family(h, options.certified_m)) entries.push_back(std::move(e));

  entries.push_back(upper("degree_upper", s.m > 0 ? std::optional<ll>(ub_degree(h)) : std::nullopt));
  entries.push_back(upper("cardinality_upper", ub_cardinality(h)));
  if (options.include_greedy) {
    entries.push_back(upper("greedy_upper",
                            static_cast<ll>(ub_greedy(h, Model::spontaneous).value)));
  }

  report.best_lower = 0;
  report.best_upper = static_cast<ll>(s.n);
  for (const auto& e : entries) {
    if (!e.applicable) continue;
    if (e.kind == BoundKind::lower) {
      report.best_lower = std::max(report.best_lower, e.value);
    } else {
      report.best_upper = std::min(report.best_upper, e.value);
    }
  }
  return report;
}

}  // namespace lazyburn

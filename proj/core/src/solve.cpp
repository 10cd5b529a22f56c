#include "lazyburn/solve.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "lazyburn/bounds.hpp"
#include "lazyburn/transform.hpp"

namespace lazyburn {
namespace {

using Clock = std::chrono::steady_clock;

class Budget {
 public:
  Budget(const SearchLimits& limits, Clock::time_point start)
      : max_nodes_(limits.max_nodes), deadline_(start + limits.max_time) {}

  /// Counts one node; false once a limit has been hit.
  bool tick() {
    if (stopped_.load(std::memory_order_relaxed)) return false;
    const auto k = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (k > max_nodes_ || ((k & 1023) == 0 && Clock::now() > deadline_)) {
      stopped_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
  void prune() { prunes_.fetch_add(1, std::memory_order_relaxed); }

  bool stopped() const { return stopped_.load(); }
  std::uint64_t nodes() const { return std::min(nodes_.load(), max_nodes_); }
  std::uint64_t prunes() const { return prunes_.load(); }

 private:
  std::uint64_t max_nodes_;
  Clock::time_point deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> prunes_{0};
  std::atomic<bool> stopped_{false};
};

/// Lower bound on the number of further seeds needed from `state`: every
/// isolated residual vertex, plus for the rest the larger of the trivial
/// bound and the single-edge intersection bound.
std::size_t residual_lower_bound(const Propagator& state, std::vector<char>& mark) {
  const Hypergraph& h = state.hypergraph();
  std::size_t edges = 0;
  std::size_t smallest = 0;
  std::size_t covered = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const std::size_t live = state.unburned_in(e);
    if (live < 2) continue;
    ++edges;
    smallest = smallest == 0 ? live : std::min(smallest, live);
    for (Vertex v : h.edge(e)) {
      if (!state.burned(v) && !mark[v]) {
        mark[v] = 1;
        ++covered;
      }
    }
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (state.unburned_in(e) < 2) continue;
    for (Vertex v : h.edge(e)) mark[v] = 0;
  }
  const std::size_t isolated = state.unburned_count() - covered;
  std::size_t rest = covered > edges ? covered - edges : 0;
  if (edges > 0) rest = std::max(rest, smallest - 1);
  return isolated + rest;
}

struct Node {
  std::size_t index;
  Propagator state;
  std::vector<Vertex> chosen;
};

/// Phase one: proves the optimal value, improving on a given incumbent.
class BranchAndBound {
 public:
  BranchAndBound(const Hypergraph& r, Budget& budget, std::vector<Vertex> incumbent)
      : r_(r), budget_(budget), best_size_(incumbent.size()), best_(std::move(incumbent)) {
    order_.resize(r.num_vertices());
    for (Vertex v = 0; v < r.num_vertices(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return r.degree(a) > r.degree(b); });
  }

  void run(unsigned workers) {
    Propagator root(r_, Model::spontaneous);
    std::vector<Vertex> chosen;
    if (workers <= 1) {
      std::vector<char> mark(r_.num_vertices(), 0);
      search(0, root, chosen, mark);
      return;
    }
    // Split the top of the tree into independent subtrees.
    std::vector<Node> frontier{{0, root, {}}};
    const std::size_t target = 8 * static_cast<std::size_t>(workers);
    std::vector<char> mark(r_.num_vertices(), 0);
    while (frontier.size() < target && !budget_.stopped()) {
      std::vector<Node> next;
      bool grew = false;
      for (auto& node : frontier) {
        if (!expand(node, next, mark)) continue;
        grew = true;
      }
      frontier = std::move(next);
      if (!grew) break;
    }
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      std::vector<char> local_mark(r_.num_vertices(), 0);
      for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
        auto& node = frontier[i];
        search(node.index, node.state, node.chosen, local_mark);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<Vertex> best() const { return best_; }

 private:
  /// Outcome of the checks shared by every node.
  enum class Step { done, pruned, branch };

  Step visit(std::size_t& index, const Propagator& state, const std::vector<Vertex>& chosen,
             std::vector<char>& mark) {
    if (!budget_.tick()) return Step::done;
    if (state.all_burned()) {
      offer(chosen);
      return Step::done;
    }
    const std::size_t lb = residual_lower_bound(state, mark);
    if (chosen.size() + lb >= best_size_.load()) {
      budget_.prune();
      return Step::pruned;
    }
    while (index < order_.size() && state.burned(order_[index])) ++index;
    std::size_t available = 0;
    for (std::size_t i = index; i < order_.size() && available < lb; ++i) {
      available += state.burned(order_[i]) ? 0 : 1;
    }
    if (index == order_.size() || available < lb) {
      budget_.prune();
      return Step::pruned;
    }
    return Step::branch;
  }

  void search(std::size_t index, const Propagator& state, std::vector<Vertex>& chosen,
              std::vector<char>& mark) {
    if (visit(index, state, chosen, mark) != Step::branch) return;
    const Vertex v = order_[index];
    {
      Propagator in = state;
      in.ignite(v);
      chosen.push_back(v);
      search(index + 1, in, chosen, mark);
      chosen.pop_back();
    }
    search(index + 1, state, chosen, mark);
  }

  /// Replaces `node` by its two children in `out`; false when it was a leaf.
  bool expand(Node& node, std::vector<Node>& out, std::vector<char>& mark) {
    std::size_t index = node.index;
    if (visit(index, node.state, node.chosen, mark) != Step::branch) return false;
    const Vertex v = order_[index];
    Node in{index + 1, node.state, node.chosen};
    in.state.ignite(v);
    in.chosen.push_back(v);
    out.push_back(std::move(in));
    out.push_back({index + 1, std::move(node.state), std::move(node.chosen)});
    return true;
  }

  void offer(const std::vector<Vertex>& chosen) {
    std::lock_guard lock(mutex_);
    if (chosen.size() < best_size_.load()) {
      best_ = chosen;
      best_size_.store(chosen.size());
    }
  }

  const Hypergraph& r_;
  Budget& budget_;
  std::vector<Vertex> order_;
  std::atomic<std::size_t> best_size_;
  std::mutex mutex_;
  std::vector<Vertex> best_;
};

/// Phase two: the lexicographically least burning set with exactly `picks`
/// members, given that none smaller exists.
bool least_witness(const Hypergraph& r, Budget& budget, Vertex start, std::size_t picks,
                   const Propagator& state, std::vector<Vertex>& chosen, std::vector<char>& mark) {
  if (!budget.tick()) return false;
  if (state.all_burned()) return true;
  if (picks == 0) return false;
  const std::size_t lb = residual_lower_bound(state, mark);
  if (lb > picks) {
    budget.prune();
    return false;
  }
  for (Vertex x = start; x < r.num_vertices(); ++x) {
    if (state.burned(x)) continue;
    Propagator next = state;
    next.ignite(x);
    chosen.push_back(x);
    if (least_witness(r, budget, x + 1, picks - 1, next, chosen, mark)) return true;
    chosen.pop_back();
    if (budget.stopped()) return false;
  }
  return false;
}

}  // namespace

SolveResult b_lazy(const Hypergraph& h, Model model, const SearchLimits& limits) {
  const auto start = Clock::now();
  Budget budget(limits, start);

  const Hypergraph base = model == Model::original ? drop_singleton_edges(h) : h;
  SubHypergraph reduced;
  if (limits.use_core_reduction) {
    reduced = core(base).core;
  } else {
    reduced.graph = base;
    reduced.vertex_map.resize(base.num_vertices());
    for (Vertex v = 0; v < base.num_vertices(); ++v) reduced.vertex_map[v] = v;
  }
  const Hypergraph& r = reduced.graph;
  if (r.num_vertices() > limits.max_search_vertices) {
    throw SizeLimitExceeded("exact search is limited to " +
                            std::to_string(limits.max_search_vertices) +
                            " vertices after reduction, got " + std::to_string(r.num_vertices()));
  }

  // The reduced hypergraph has no singleton edges when the core is taken,
  // and the model difference is already absorbed into `base` otherwise, so
  // the search always runs the spontaneous rules.
  auto greedy = ub_greedy(r, Model::spontaneous);
  BranchAndBound phase_one(r, budget, greedy.set.ids());
  phase_one.run(std::max(1u, limits.workers));

  SolveResult result;
  result.model = model;
  result.optimal = !budget.stopped();
  std::vector<Vertex> best = phase_one.best();

  if (result.optimal) {
    Propagator root(r, Model::spontaneous);
    std::vector<Vertex> chosen;
    std::vector<char> mark(r.num_vertices(), 0);
    if (least_witness(r, budget, 0, best.size(), root, chosen, mark)) {
      best = std::move(chosen);
    }
  }

  result.witness = reduced.to_parent(VertexSet(best));
  result.value = result.witness.size();
  auto trace = propagate(h, result.witness, model);
  if (!trace.complete) {
    throw std::logic_error("solver produced a set that does not burn the hypergraph");
  }
  result.certificate = std::move(trace.chron);
  result.stats.nodes = budget.nodes();
  result.stats.prunes = budget.prunes();
  result.stats.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

std::size_t b_lazy_bruteforce(const Hypergraph& h, Model model) {
  const std::size_t n = h.num_vertices();
  if (n > bruteforce_vertex_limit) {
    throw SizeLimitExceeded("brute-force search is limited to " +
                            std::to_string(bruteforce_vertex_limit) + " vertices, hypergraph has " +
                            std::to_string(n));
  }
  const std::uint32_t full = std::uint32_t{1} << n;
  for (std::size_t size = 0; size <= n; ++size) {
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      std::vector<Vertex> ids;
      for (Vertex v = 0; v < n; ++v) {
        if (mask >> v & 1u) ids.push_back(v);
      }
      if (is_lazy_burning_set(h, VertexSet(std::move(ids)), model)) return size;
    }
  }
  return n;
}

std::pair<std::size_t, std::size_t> b_lazy_monotonicity_check(const Hypergraph& h, Vertex v,
                                                              const SearchLimits& limits) {
  if (v >= h.num_vertices()) {
    throw InvalidInput("vertex " + std::to_string(v) + " is out of range");
  }
  const auto whole = b_lazy(h, Model::spontaneous, limits);
  const auto rest = b_lazy(remove_vertices(h, VertexSet{v}).graph, Model::spontaneous, limits);
  if (!whole.optimal || !rest.optimal) {
    throw SizeLimitExceeded("search limits reached before both values were proven");
  }
  return {whole.value, rest.value};
}

}  // namespace lazyburn

#include <doctest.h>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "lazyburn/generate.hpp"
#include "lazyburn/serialize.hpp"
#include "lazyburn/solve.hpp"
#include "lazyburn/transform.hpp"

using namespace lazyburn;

namespace {

constexpr Model both_models[] = {Model::spontaneous, Model::original};

/// Lexicographically least minimum burning set, by enumeration.
VertexSet least_burning_set(const Hypergraph& h, Model model, std::size_t size) {
  const std::size_t n = h.num_vertices();
  VertexSet best;
  bool found = false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1u) ids.push_back(v);
    }
    VertexSet s(std::move(ids));
    if (is_lazy_burning_set(h, s, model) && (!found || s < best)) {
      best = s;
      found = true;
    }
  }
  return best;
}

void check_result(const Hypergraph& h, const SolveResult& r, Model model) {
  CHECK(r.witness.size() == r.value);
  CHECK(is_lazy_burning_set(h, r.witness, model));
  CHECK(r.certificate.size() == h.num_vertices() - r.value);
  CHECK_FALSE(find_chron_violation(h, r.witness, r.certificate, model).has_value());
  CHECK(r.model == model);
}

}  // namespace

TEST_SUITE("solve") {
  TEST_CASE("overlapping triples have lazy burning number 2") {
    auto h = fixtures::fig2();
    auto r = b_lazy(h, Model::spontaneous);
    CHECK(r.value == 2);
    CHECK(r.optimal);
    CHECK(r.witness == VertexSet{0, 1});
    CHECK(r.certificate.size() == 3);
    check_result(h, r, Model::spontaneous);
  }

  TEST_CASE("generalized stars") {
    for (int k = 2; k <= 4; ++k) {
      for (int l = 2; l <= 4; ++l) {
        auto h = gen_star_hypergraph(k, l);
        auto r = b_lazy(h, Model::spontaneous);
        CHECK(r.value == static_cast<std::size_t>((k - 1) * l + 1));
        check_result(h, r, Model::spontaneous);
      }
    }
  }

  TEST_CASE("singleton semantics") {
    Hypergraph h(1, {{0}});
    CHECK(b_lazy(h, Model::spontaneous).value == 0);
    CHECK(b_lazy(h, Model::original).value == 1);
    CHECK(b_lazy(Hypergraph(), Model::spontaneous).value == 0);
    CHECK(b_lazy(Hypergraph(3, {}), Model::spontaneous).value == 3);
  }

  TEST_CASE("brute force reference") {
    Hypergraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(b_lazy_bruteforce(k4, Model::spontaneous) == 1);
    Hypergraph triples(4, {{0, 1, 2}, {1, 2, 3}});
    CHECK(b_lazy_bruteforce(triples, Model::spontaneous) == 2);
    CHECK(b_lazy_bruteforce(Hypergraph(5, {}), Model::spontaneous) == 5);
    CHECK_THROWS_AS(b_lazy_bruteforce(Hypergraph(17, {}), Model::spontaneous), SizeLimitExceeded);
  }

  TEST_CASE("solver, brute force and naive closure agree on random instances") {
    for (std::uint64_t s = 0; s < 500; ++s) {
      const std::size_t n = 1 + s % 10;
      auto h = gen_random_hypergraph(n, s % 11, 1, std::min<std::size_t>(n, 1 + s % 5), s);
      for (Model model : both_models) {
        CAPTURE(s);
        auto r = b_lazy(h, model);
        CHECK(r.optimal);
        CHECK(r.value == b_lazy_bruteforce(h, model));
        if (s % 5 == 0) CHECK(r.value == oracle::min_burning_set(h, model));
        check_result(h, r, model);
      }
    }
  }

  TEST_CASE("exhaustive sweep of small hypergraphs") {
    std::size_t count = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
      oracle::for_each_small_hypergraph(n, 4, 3, [&](const Hypergraph& h) {
        ++count;
        for (Model model : both_models) {
          auto r = b_lazy(h, model);
          const auto expect = b_lazy_bruteforce(h, model);
          if (r.value != expect) {
            CAPTURE(count);
            CHECK(r.value == expect);
          }
        }
      });
    }
    CHECK(count > 100000);
  }

  TEST_CASE("witness is the least minimum burning set") {
    for (std::uint64_t s = 0; s < 150; ++s) {
      const std::size_t n = 2 + s % 9;
      auto h = gen_random_hypergraph(n, 1 + s % 8, 1, std::min<std::size_t>(n, 4), s + 1000);
      for (Model model : both_models) {
        auto r = b_lazy(h, model);
        CHECK(r.witness == least_burning_set(h, model, r.value));
      }
    }
  }

  TEST_CASE("dual identity") {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const std::size_t n = 1 + s % 9;
      auto h = gen_random_hypergraph(n, s % 9, 1, std::min<std::size_t>(n, 4), s + 77);
      const auto bl = static_cast<long>(b_lazy(h, Model::spontaneous).value);
      const auto bd = static_cast<long>(b_lazy(dual(h), Model::spontaneous).value);
      CHECK(bd == static_cast<long>(h.num_edges()) - static_cast<long>(n) + bl);
    }
  }

  TEST_CASE("core reduction does not change the answer") {
    SearchLimits plain;
    plain.use_core_reduction = false;
    for (std::uint64_t s = 0; s < 200; ++s) {
      const std::size_t n = 1 + s % 10;
      auto h = gen_random_hypergraph(n, s % 10, 1, std::min<std::size_t>(n, 4), s + 3);
      for (Model model : both_models) {
        auto fast = b_lazy(h, model);
        auto slow = b_lazy(h, model, plain);
        CHECK(fast.value == slow.value);
        CHECK(fast.witness == slow.witness);
      }
      auto c = core(h);
      CHECK(b_lazy(c.core.graph, Model::spontaneous).value == b_lazy(h, Model::spontaneous).value);
      auto w = b_lazy(h, Model::spontaneous).witness;
      for (Vertex v : c.removals) CHECK_FALSE(w.contains(v));
    }
  }

  TEST_CASE("worker count does not change the result") {
    SearchLimits parallel;
    parallel.workers = 4;
    for (std::uint64_t s = 0; s < 60; ++s) {
      auto h = gen_random_hypergraph(14, 9, 2, 4, s + 50);
      auto one = b_lazy(h, Model::spontaneous);
      auto four = b_lazy(h, Model::spontaneous, parallel);
      CHECK(one.value == four.value);
      CHECK(one.witness == four.witness);
      CHECK(four.optimal);
    }
  }

  TEST_CASE("limits return a flagged incumbent") {
    SearchLimits tiny;
    tiny.max_nodes = 1;
    auto h = gen_random_hypergraph(30, 18, 3, 5, 9);
    auto r = b_lazy(h, Model::spontaneous, tiny);
    CHECK_FALSE(r.optimal);
    check_result(h, r, Model::spontaneous);
    CHECK(r.value >= b_lazy(h, Model::spontaneous).value);

    SearchLimits narrow;
    narrow.max_search_vertices = 3;
    CHECK_THROWS_AS(b_lazy(fixtures::fig2(), Model::spontaneous, narrow), SizeLimitExceeded);
  }

  TEST_CASE("monotonicity under vertex removal") {
    auto [whole, rest] = b_lazy_monotonicity_check(fixtures::fig2(), fixtures::c);
    CHECK(whole == 2);
    CHECK(rest >= 1);
    CHECK(rest <= 2);
    CHECK(b_lazy_monotonicity_check(Hypergraph(4, {}), 2) == std::pair<std::size_t, std::size_t>{4, 3});
    auto [sw, sr] = b_lazy_monotonicity_check(gen_star_hypergraph(2, 2), 0);
    CHECK(sw == 3);
    CHECK(sr >= 2);
    CHECK(sr <= 3);
    CHECK_THROWS_AS(b_lazy_monotonicity_check(fixtures::fig2(), 5), InvalidInput);
  }

  TEST_CASE("JSON") {
    auto r = b_lazy(fixtures::fig2(), Model::spontaneous);
    auto j = to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"value", "witness", "certificate", "optimal", "nodes",
                                           "millis", "model"});
    CHECK(j["model"] == "spontaneous");
    CHECK(to_json(r, false).dump().find("millis") == std::string::npos);
    CHECK(to_json(r, false)["certificate"].dump() == "[[0,2],[1,3],[2,4]]");
  }
}

#include <doctest.h>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "lazyburn/force.hpp"
#include "lazyburn/generate.hpp"
#include "lazyburn/serialize.hpp"
#include "lazyburn/solve.hpp"
#include "lazyburn/transform.hpp"

using namespace lazyburn;

namespace {

using Rounds = std::vector<std::vector<Force>>;

VertexSet subset_from_mask(std::uint32_t mask, std::size_t n) {
  std::vector<Vertex> ids;
  for (Vertex v = 0; v < n; ++v) {
    if (mask >> v & 1u) ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

/// First forcing set of minimum size in lexicographic order, by brute force.
VertexSet least_forcing_set(const Graph& g, bool skew) {
  const std::size_t n = g.num_vertices();
  const std::size_t z = oracle::forcing_number(g, skew);
  VertexSet best;
  bool found = false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != z) continue;
    auto s = subset_from_mask(mask, n);
    auto out = oracle::force_closure(g, s.mask(n), skew);
    if (std::all_of(out.begin(), out.end(), [](char x) { return x != 0; })) {
      if (!found || s < best) best = s;
      found = true;
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("force") {
  TEST_CASE("an adjacent pair forces the 5-cycle") {
    auto t = zero_force(fixtures::c5(), VertexSet{fixtures::a, fixtures::b});
    CHECK(t.complete);
    CHECK(t.rounds == Rounds{{{fixtures::a, fixtures::c}, {fixtures::b, fixtures::d}},
                             {{fixtures::c, fixtures::e}}});
    CHECK(z_exact(fixtures::c5()).value == 2);
  }

  TEST_CASE("standard forcing edge cases") {
    auto g = fixtures::c5();
    auto all = zero_force(g, VertexSet::range(5));
    CHECK(all.complete);
    CHECK(all.rounds.empty());
    auto star = star_graph(3);
    auto t = zero_force(star, VertexSet{1});
    CHECK_FALSE(t.complete);
    CHECK(t.black == VertexSet{0, 1});
    CHECK_THROWS_AS(zero_force(star, VertexSet{4}), InvalidInput);
  }

  TEST_CASE("skew forcing") {
    auto star = star_graph(3);
    auto empty = skew_zero_force(star, {});
    CHECK_FALSE(empty.complete);
    CHECK(empty.rounds == Rounds{{{1, 0}}});
    CHECK(empty.black == VertexSet{0});

    auto two = skew_zero_force(star, VertexSet{1, 2});
    CHECK(two.complete);
    CHECK(two.rounds == Rounds{{{1, 0}, {0, 3}}});

    CHECK(skew_zero_force(fixtures::c5(), VertexSet::range(5)).complete);
    CHECK_THROWS_AS(skew_zero_force(star, VertexSet{9}), InvalidInput);
  }

  TEST_CASE("exact forcing numbers") {
    for (std::size_t j = 2; j <= 6; ++j) CHECK(z_exact(star_graph(j)).value == j - 1);
    auto k2 = Graph(2, {{0, 1}});
    CHECK(z_exact(k2).value == 1);
    CHECK(z0_exact(triangle_gluing(k2)).value == 1);
    CHECK(z_exact(Graph()).value == 0);
    CHECK(z0_exact(Graph(3, {})).value == 3);
    CHECK(z_exact(path_graph(6)).witness == VertexSet{0});
    CHECK(z_exact(complete_graph(5)).value == 4);
  }

  TEST_CASE("the size guard fails loudly") {
    CHECK_THROWS_AS(z_exact(path_graph(26)), SizeLimitExceeded);
    CHECK_NOTHROW(z_exact(path_graph(26), 30));
    CHECK_THROWS_AS(z0_exact(path_graph(65), 100), SizeLimitExceeded);
  }

  TEST_CASE("exact search against brute force, with least witnesses") {
    for (std::uint64_t s = 0; s < 80; ++s) {
      const std::size_t n = 1 + s % 8;
      auto g = gen_random_graph(n, s % (n * (n - 1) / 2 + 1), s);
      auto z = z_exact(g);
      auto z0 = z0_exact(g);
      CHECK(z.value == oracle::forcing_number(g, false));
      CHECK(z0.value == oracle::forcing_number(g, true));
      CHECK(z.witness == least_forcing_set(g, false));
      CHECK(z0.witness == least_forcing_set(g, true));
      CHECK(z0.value <= z.value);
      CHECK(zero_force(g, z.witness).complete);
      CHECK(skew_zero_force(g, z0.witness).complete);
    }
  }

  TEST_CASE("forcing traces agree with the naive closure") {
    for (std::uint64_t s = 0; s < 60; ++s) {
      auto g = gen_random_graph(8, 3 + s % 15, s);
      Rng rng(s);
      for (int i = 0; i < 10; ++i) {
        auto seed = subset_from_mask(static_cast<std::uint32_t>(rng.below(256)), 8);
        for (bool skew : {false, true}) {
          auto t = run_forcing(g, seed, skew ? ForcingRule::skew : ForcingRule::standard);
          CHECK(t.black == VertexSet::from_mask(oracle::force_closure(g, seed.mask(8), skew)));
          // Forced vertices are new and distinct; seed plus forced is black.
          VertexSet seen = seed;
          for (const auto& round : t.rounds) {
            for (auto [u, v] : round) {
              CHECK_FALSE(seen.contains(v));
              CHECK(g.has_edge(u, v));
              seen.insert(v);
            }
          }
          CHECK(seen == t.black);
        }
      }
    }
  }

  TEST_CASE("burning sets are zero forcing sets of the incidence graph with all edges") {
    for (std::uint64_t s = 0; s < 60; ++s) {
      const std::size_t n = 2 + s % 9;
      auto h = gen_random_hypergraph(n, 1 + s % 7, 1, std::min<std::size_t>(n, 4), s);
      auto ig = incidence_graph(h);
      Rng rng(s + 3);
      for (int i = 0; i < 16; ++i) {
        auto b = subset_from_mask(static_cast<std::uint32_t>(rng.below(1u << n)), n);
        auto seed = b;
        for (EdgeId e = 0; e < h.num_edges(); ++e) seed.insert(static_cast<Vertex>(n + e));
        CHECK(is_lazy_burning_set(h, b, Model::spontaneous) == zero_force(ig, seed).complete);
      }
      CHECK(z_exact(ig).value <= b_lazy(h, Model::spontaneous).value + h.num_edges());
    }
  }

  TEST_CASE("skew forcing sets are burning sets of the open neighbourhood hypergraph") {
    for (std::uint64_t s = 0; s < 60; ++s) {
      const std::size_t n = 1 + s % 8;
      auto g = gen_random_graph(n, s % (n * (n - 1) / 2 + 1), s + 11);
      auto nh = open_neighborhood_hypergraph(g);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto b = subset_from_mask(mask, n);
        CHECK(skew_zero_force(g, b).complete == is_lazy_burning_set(nh, b, Model::spontaneous));
      }
      CHECK(z0_exact(g).value == b_lazy(nh, Model::spontaneous).value);
    }
  }

  TEST_CASE("triangle gluing turns forcing into skew forcing") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      const std::size_t n = 1 + s % 6;
      auto g = gen_random_graph(n, s % (n * (n - 1) / 2 + 1), s + 21);
      auto t = triangle_gluing(g);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto b = subset_from_mask(mask, n);
        CHECK(zero_force(g, b).complete == skew_zero_force(t, lift_to_triangle_layer(b)).complete);
      }
      CHECK(z_exact(g).value == z0_exact(t).value);
    }
  }

  TEST_CASE("skew forcing number of an incidence graph") {
    for (std::uint64_t s = 0; s < 40; ++s) {
      const std::size_t n = 1 + s % 7;
      auto h = gen_random_hypergraph(n, s % 7, 1, std::min<std::size_t>(n, 3), s + 5);
      auto bl = static_cast<long>(b_lazy(h, Model::spontaneous).value);
      auto bd = static_cast<long>(b_lazy(dual(h), Model::spontaneous).value);
      auto z0 = static_cast<long>(z0_exact(incidence_graph(h)).value);
      CHECK(z0 == bl + bd);
      CHECK(z0 == 2 * bl + static_cast<long>(h.num_edges()) - static_cast<long>(n));
    }
  }

  TEST_CASE("JSON") {
    auto t = zero_force(fixtures::c5(), VertexSet{0, 1});
    CHECK(to_json(t).dump() == R"({"seed":[0,1],"rounds":[[[0,2],[1,3]],[[2,4]]],"complete":true})");
    CHECK(to_json(z_exact(fixtures::c5())).dump() == R"({"value":2,"witness":[0,1]})");
  }
}

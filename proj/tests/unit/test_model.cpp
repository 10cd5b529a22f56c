#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "../support/fixtures.hpp"
#include "lazyburn/generate.hpp"
#include "lazyburn/io.hpp"
#include "lazyburn/serialize.hpp"
#include "lazyburn/transform.hpp"

using namespace lazyburn;
using Edges = std::vector<std::vector<Vertex>>;

namespace {

std::vector<std::size_t> part_degrees(const Graph& g, std::uint8_t part) {
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.parts()[v] == part) out.push_back(g.degree(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("vertex sets are sorted and unique") {
    VertexSet s{3, 1, 3, 0};
    CHECK(s.ids() == std::vector<Vertex>{0, 1, 3});
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    s.insert(2);
    s.erase(0);
    CHECK(s.ids() == std::vector<Vertex>{1, 2, 3});
    CHECK(s.complement(5).ids() == std::vector<Vertex>{0, 4});
    CHECK(VertexSet{0, 5} < VertexSet{1});
    CHECK_THROWS_AS(s.check_range(3), InvalidInput);
    CHECK(set_union(VertexSet{0, 2}, VertexSet{1}) == VertexSet{0, 1, 2});
    CHECK(set_difference(VertexSet{0, 1, 2}, VertexSet{1}) == VertexSet{0, 2});
    CHECK(set_intersection(VertexSet{0, 1, 2}, VertexSet{1, 5}) == VertexSet{1});
  }

  TEST_CASE("vertex lists parse from comma-separated text") {
    CHECK(parse_vertex_list("0,1,2") == VertexSet{0, 1, 2});
    CHECK(parse_vertex_list("") == VertexSet{});
    CHECK(parse_vertex_list(" 4 , 2") == VertexSet{2, 4});
    CHECK_THROWS_AS(parse_vertex_list("0,,1"), InvalidInput);
    CHECK_THROWS_AS(parse_vertex_list("0,1,"), InvalidInput);
    CHECK_THROWS_AS(parse_vertex_list("x"), InvalidInput);
    CHECK(format_vertex_list(VertexSet{0, 1}, ",") == "0,1");
  }

  TEST_CASE("hypergraph construction validates edges") {
    auto h = fixtures::fig2();
    CHECK(h.num_vertices() == 5);
    CHECK(h.num_edges() == 3);
    CHECK(h.num_pins() == 9);
    CHECK(h.degree(fixtures::c) == 3);
    CHECK(h.label(fixtures::e) == "e");
    CHECK(h.contains(1, fixtures::d));
    CHECK_FALSE(h.contains(0, fixtures::d));
    CHECK(std::vector<EdgeId>(h.incident_edges(fixtures::b).begin(),
                              h.incident_edges(fixtures::b).end()) == std::vector<EdgeId>{0, 1});

    CHECK_THROWS_AS(Hypergraph(3, {{}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph(3, {{1, 0}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph(3, {{1, 1}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph(2, {{0}}, {"only-one"}), InvalidInput);
  }

  TEST_CASE("multiset edges, singletons and isolated vertices are kept") {
    Hypergraph h(4, {{0, 1}, {0, 1}, {2}});
    CHECK(h.num_edges() == 3);
    CHECK(has_singleton_edge(h));
    CHECK(isolated_vertices(h) == VertexSet{3});
    CHECK(dedup_edges(h).num_edges() == 2);
    CHECK(min_edge_size(h) == 1);
    CHECK(max_edge_size(h) == 2);
    CHECK(min_degree(h) == 0);
    CHECK(max_degree(h) == 2);
    CHECK(Hypergraph() == Hypergraph(0, {}));
  }

  TEST_CASE("graphs reject loops, repeats and same-part edges") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidInput);
    CHECK_THROWS_AS(Graph(2, {{0, 1}}, {0, 0}), InvalidInput);
    auto g = fixtures::c5();
    CHECK(g.num_edges() == 5);
    CHECK(g.has_edge(4, 2));
    CHECK(cycle_graph(5).num_edges() == 5);
    CHECK(path_graph(4).num_edges() == 3);
    CHECK(complete_graph(4).num_edges() == 6);
    CHECK(star_graph(3).degree(0) == 3);
  }

  TEST_CASE("incidence graph is bipartite with the right degrees") {
    auto h = fixtures::fig2();
    auto ig = incidence_graph(h);
    CHECK(ig.num_vertices() == 8);
    CHECK(ig.num_edges() == 9);
    CHECK(ig.has_edge(0, 5));
    CHECK(ig.has_edge(2, 7));
    CHECK_FALSE(ig.has_edge(0, 6));
    for (EdgeId e = 0; e < 3; ++e) CHECK(ig.degree(5 + e) == h.edge_size(e));

    auto empty = incidence_graph(Hypergraph(3, {}));
    CHECK(empty.num_vertices() == 3);
    CHECK(empty.num_edges() == 0);

    auto single = incidence_graph(Hypergraph(1, {{0}}));
    CHECK(single.num_vertices() == 2);
    CHECK(single.num_edges() == 1);
  }

  TEST_CASE("dual hypergraph") {
    CHECK(dual(fixtures::fig2()).edge_lists() == Edges{{0}, {0, 1}, {0, 1, 2}, {1, 2}, {2}});
    CHECK(dual(fixtures::fig2()).num_vertices() == 3);
    CHECK(dual(Hypergraph(2, {{0, 1}})).edge_lists() == Edges{{0}, {0}});

    Hypergraph with_isolated(4, {{0, 2}, {2, 3}});
    CHECK(dual(with_isolated).edge_lists() == Edges{{0}, {0, 1}, {1}});
    CHECK(dual_edge_index(with_isolated) == std::vector<long>{0, -1, 1, 2});
  }

  TEST_CASE("dual round trip swaps the incidence graph parts") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto h = gen_random_hypergraph(7, 5, 1, 4, seed);
      if (!isolated_vertices(h).empty()) continue;
      auto g1 = incidence_graph(h);
      auto g2 = incidence_graph(dual(h));
      CHECK(g1.num_edges() == g2.num_edges());
      CHECK(part_degrees(g1, 0) == part_degrees(g2, 1));
      CHECK(part_degrees(g1, 1) == part_degrees(g2, 0));
    }
  }

  TEST_CASE("weak induced subhypergraphs") {
    auto h = fixtures::fig2();
    auto sub = weak_induced(h, VertexSet{fixtures::c, fixtures::d, fixtures::e});
    CHECK(sub.graph.edge_lists() == Edges{{0}, {0, 1}, {0, 1, 2}});
    CHECK(sub.vertex_map == std::vector<Vertex>{2, 3, 4});
    CHECK(sub.edge_map == std::vector<EdgeId>{0, 1, 2});
    CHECK(sub.to_parent(VertexSet{0, 2}) == VertexSet{2, 4});
    CHECK(sub.restrict_to_sub(VertexSet{0, 3}) == VertexSet{1});

    CHECK(weak_induced(h, VertexSet::range(5)).graph == h);
    auto none = weak_induced(h, VertexSet{});
    CHECK(none.graph.num_vertices() == 0);
    CHECK(none.graph.num_edges() == 0);
    CHECK_THROWS_AS(weak_induced(h, VertexSet{7}), InvalidInput);
    CHECK(remove_vertices(h, VertexSet{0, 1}).graph == sub.graph);
  }

  TEST_CASE("removing vertices one at a time empties the hypergraph") {
    Rng order_rng(7);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Hypergraph h = gen_random_hypergraph(8, 6, 1, 4, seed);
      while (h.num_vertices() > 0) {
        auto v = static_cast<Vertex>(order_rng.below(h.num_vertices()));
        h = remove_vertices(h, VertexSet{v}).graph;
      }
      CHECK(h.num_edges() == 0);
    }
  }

  TEST_CASE("neighbourhood hypergraphs") {
    auto star = star_graph(3);
    CHECK(open_neighborhood_hypergraph(star).edge_lists() == Edges{{1, 2, 3}, {0}, {0}, {0}});
    CHECK(closed_neighborhood_hypergraph(star).edge_lists() ==
          Edges{{0, 1, 2, 3}, {0, 1}, {0, 2}, {0, 3}});
    CHECK(open_neighborhood_hypergraph(Graph(2, {{0, 1}})).edge_lists() == Edges{{1}, {0}});
    CHECK(open_neighborhood_hypergraph(Graph(3, {})).num_edges() == 0);
    CHECK(closed_neighborhood_hypergraph(Graph(1, {})).edge_lists() == Edges{{0}});
    CHECK(closed_neighborhood_hypergraph(complete_graph(3)).edge_lists() ==
          Edges{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      auto g = gen_random_graph(8, seed % 12, seed);
      std::size_t degree_sum = 0;
      for (Vertex v = 0; v < 8; ++v) degree_sum += g.degree(v);
      CHECK(open_neighborhood_hypergraph(g).num_pins() == degree_sum);
      CHECK(closed_neighborhood_hypergraph(g).num_pins() == degree_sum + 8);
    }
  }

  TEST_CASE("triangle gluing") {
    auto t = triangle_gluing(Graph(2, {{0, 1}}));
    CHECK(t.num_vertices() == 6);
    CHECK(t.num_edges() == 7);
    CHECK(t.has_edge(0, 3));
    CHECK(t.has_edge(0, 1));
    CHECK(t.has_edge(1, 2));
    CHECK(t.has_edge(0, 2));
    CHECK(triangle_gluing(Graph(1, {})).edges() == std::vector<GraphEdge>{{0, 1}, {0, 2}, {1, 2}});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto g = gen_random_graph(6, seed, seed);
      auto tg = triangle_gluing(g);
      CHECK(tg.num_vertices() == 18);
      CHECK(tg.num_edges() == g.num_edges() + 18);
    }
    CHECK(lift_to_triangle_layer(VertexSet{0, 2}) == VertexSet{0, 6});
  }

  TEST_CASE("generalized stars") {
    auto s = gen_star_hypergraph(2, 2);
    CHECK(s.num_vertices() == 5);
    CHECK(s.edge_lists() == Edges{{0, 1, 2}, {0, 3, 4}});
    auto s32 = gen_star_hypergraph(3, 2);
    CHECK(s32.num_vertices() == 7);
    CHECK(min_edge_size(s32) == 4);
    CHECK(max_edge_size(s32) == 4);
    for (int k = 2; k <= 4; ++k) {
      for (int l = 2; l <= 4; ++l) {
        auto h = gen_star_hypergraph(k, l);
        CHECK(min_edge_size(h) == static_cast<std::size_t>(k + 1));
        CHECK(max_edge_size(h) == static_cast<std::size_t>(k + 1));
        std::size_t hubs = 0;
        for (Vertex v = 0; v < h.num_vertices(); ++v) hubs += h.degree(v) == static_cast<std::size_t>(l);
        CHECK(hubs == 1);
      }
    }
    CHECK_THROWS_AS(gen_star_hypergraph(1, 3), InvalidInput);
    CHECK_THROWS_AS(gen_star_hypergraph(3, 1), InvalidInput);
  }

  TEST_CASE("cyclic Latin square hypergraphs") {
    auto l2 = gen_latin_square_hypergraph(2);
    CHECK(l2.num_vertices() == 4);
    CHECK(l2.num_edges() == 6);
    auto l3 = gen_latin_square_hypergraph(3);
    CHECK(l3.num_vertices() == 9);
    CHECK(l3.num_edges() == 9);
    for (Vertex v = 0; v < 9; ++v) CHECK(l3.degree(v) == 3);
    for (EdgeId e = 0; e < 9; ++e) {
      for (EdgeId f = e + 1; f < 9; ++f) {
        std::size_t common = 0;
        for (Vertex v : l3.edge(e)) common += l3.contains(f, v) ? 1 : 0;
        CHECK(common <= 1);
      }
    }
    CHECK_THROWS_AS(gen_latin_square_hypergraph(0), InvalidInput);
  }

  TEST_CASE("random generators are seeded and respect their ranges") {
    CHECK(gen_random_hypergraph(9, 7, 2, 4, 42) == gen_random_hypergraph(9, 7, 2, 4, 42));
    CHECK_FALSE(gen_random_hypergraph(9, 7, 2, 4, 42) == gen_random_hypergraph(9, 7, 2, 4, 43));
    CHECK(gen_random_hypergraph(5, 0, 1, 2, 1).num_edges() == 0);
    auto h = gen_random_hypergraph(10, 40, 2, 5, 3);
    CHECK(min_edge_size(h) >= 2);
    CHECK(max_edge_size(h) <= 5);
    CHECK_THROWS_AS(gen_random_hypergraph(3, 1, 2, 4, 0), InvalidInput);
    CHECK_THROWS_AS(gen_random_hypergraph(3, 1, 0, 2, 0), InvalidInput);
    CHECK_THROWS_AS(gen_random_hypergraph(3, 1, 3, 2, 0), InvalidInput);

    auto g = gen_random_graph(9, 12, 5);
    CHECK(g.num_edges() == 12);
    CHECK(g == gen_random_graph(9, 12, 5));
    CHECK_THROWS_AS(gen_random_graph(3, 4, 0), InvalidInput);

    Rng rng(1);
    for (int i = 0; i < 100; ++i) CHECK(rng.below(7) < 7);
    auto sample = Rng(9).sample(20, 6);
    CHECK(sample.size() == 6);
    CHECK(std::is_sorted(sample.begin(), sample.end()));
    CHECK(std::adjacent_find(sample.begin(), sample.end()) == sample.end());
  }

  TEST_CASE(".hg text round trip") {
    const std::string canonical = "5 3\n0 1 2\n1 2 3\n2 3 4\n";
    auto h = parse_hg(canonical);
    CHECK(h == fixtures::fig2());
    CHECK(format_hg(h) == canonical);
    CHECK(parse_hg("# comment\n\n3 1\n# more\n0 2\n") == Hypergraph(3, {{0, 2}}));
    CHECK(format_hg(Hypergraph(2, {})) == "2 0\n");

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto r = gen_random_hypergraph(12, 9, 1, 6, seed);
      CHECK(parse_hg(format_hg(r)) == r);
    }
  }

  TEST_CASE(".hg parse errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
      try {
        parse_hg(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 999;
    };
    CHECK(line_of("2 1\n1 0\n") == 2);
    CHECK(line_of("2 1\n0 5\n") == 2);
    CHECK(line_of("2 2\n0 1\n") == 2);
    CHECK(line_of("# c\n2 1\n0 1\n1\n") == 4);
    CHECK(line_of("2 1\n0 x\n") == 2);
    CHECK(line_of("2\n") == 1);
    CHECK_THROWS_AS(parse_hg(""), ParseError);
  }

  TEST_CASE(".gr text round trip") {
    const std::string canonical = "5 5\n0 1\n0 2\n1 3\n2 4\n3 4\n";
    auto g = parse_gr(canonical);
    CHECK(g == fixtures::c5());
    CHECK(format_gr(g) == canonical);
    CHECK_THROWS_AS(parse_gr("2 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_gr("2 1\n0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_gr("2 1\n0 2\n"), ParseError);
  }

  TEST_CASE("JSON mirror format") {
    auto h = fixtures::fig2();
    auto j = to_json(h);
    CHECK(j.dump() == R"({"n":5,"edges":[[0,1,2],[1,2,3],[2,3,4]]})");
    CHECK(hypergraph_from_json(j) == h);
    CHECK_THROWS_AS(hypergraph_from_json(Json::parse(R"({"edges":[]})")), ParseError);
    CHECK_THROWS_AS(hypergraph_from_json(Json::parse(R"({"n":2,"edges":[[1,0]]})")), InvalidInput);
    auto g = fixtures::c5();
    CHECK(graph_from_json(to_json(g)) == g);
    auto ig = incidence_graph(h);
    CHECK(graph_from_json(to_json(ig)) == ig);
  }

  TEST_CASE("DOT export marks the incidence parts") {
    auto dot = format_incidence_dot(fixtures::fig2());
    CHECK(dot.find("v0 [shape=circle, label=\"a\"]") != std::string::npos);
    CHECK(dot.find("e2 [shape=box") != std::string::npos);
    CHECK(dot.find("v4 -- e2;") != std::string::npos);
    auto gdot = format_dot(incidence_graph(fixtures::fig2()));
    CHECK(gdot.find("5 [shape=box]") != std::string::npos);
    CHECK(format_dot(fixtures::c5()).find("3 -- 4;") != std::string::npos);
  }
}

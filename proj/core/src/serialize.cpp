#include "lazyburn/serialize.hpp"

namespace lazyburn {
namespace {

Json chron_json(const ChronList& list) {
  Json out = Json::array();
  for (auto [e, v] : list) out.push_back({e, v});
  return out;
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"", 0);
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field \"") + key + "\" has the wrong type", 0);
  }
}

}  // namespace

Json to_json(const VertexSet& s) { return Json(s.ids()); }

Json to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto span = h.edge(e);
    edges.push_back(std::vector<Vertex>(span.begin(), span.end()));
  }
  return {{"n", h.num_vertices()}, {"edges", std::move(edges)}};
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  Json out{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
  if (g.has_parts()) {
    std::vector<int> parts(g.parts().begin(), g.parts().end());
    out["parts"] = parts;
  }
  return out;
}

Json to_json(const BurnTrace& t) {
  Json rounds = Json::array();
  for (const auto& r : t.rounds) rounds.push_back(to_json(r));
  return {{"seed", to_json(t.seed)},
          {"rounds", std::move(rounds)},
          {"burned", to_json(t.burned)},
          {"chron", chron_json(t.chron)},
          {"complete", t.complete}};
}

Json to_json(const CoreResult& c) {
  return {{"removals", c.removals},
          {"removal_edges", c.removal_edges},
          {"core", to_json(c.core.graph)},
          {"vertex_map", c.core.vertex_map}};
}

Json to_json(const CMatching& m) {
  Json pairs = Json::array();
  for (auto [v, e] : m.pairs) pairs.push_back({v, e});
  return {{"pairs", std::move(pairs)}};
}

Json to_json(const ForceTrace& t) {
  Json rounds = Json::array();
  for (const auto& round : t.rounds) {
    Json r = Json::array();
    for (auto [u, v] : round) r.push_back({u, v});
    rounds.push_back(std::move(r));
  }
  return {{"seed", to_json(t.seed)}, {"rounds", std::move(rounds)}, {"complete", t.complete}};
}

Json to_json(const ForcingNumber& z) {
  return {{"value", z.value}, {"witness", to_json(z.witness)}};
}

Json to_json(const BoundReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json item{{"name", e.name},
              {"kind", e.kind == BoundKind::lower ? "lower" : "upper"},
              {"value", nullptr},
              {"applicable", e.applicable}};
    if (e.applicable) item["value"] = e.value;
    if (!e.note.empty()) item["note"] = e.note;
    entries.push_back(std::move(item));
  }
  return {{"entries", std::move(entries)},
          {"best_lower", r.best_lower},
          {"best_upper", r.best_upper}};
}

Json to_json(const GreedyBurn& g) { return {{"value", g.value}, {"set", to_json(g.set)}}; }

Json to_json(const SolveResult& r, bool timing) {
  Json out{{"value", r.value},
           {"witness", to_json(r.witness)},
           {"certificate", chron_json(r.certificate)},
           {"optimal", r.optimal},
           {"nodes", r.stats.nodes}};
  if (timing) out["millis"] = r.stats.millis;
  out["model"] = to_string(r.model);
  return out;
}

Hypergraph hypergraph_from_json(const Json& j) {
  auto n = field<std::size_t>(j, "n");
  auto edges = field<std::vector<std::vector<Vertex>>>(j, "edges");
  return Hypergraph(n, edges);
}

Graph graph_from_json(const Json& j) {
  auto n = field<std::size_t>(j, "n");
  auto pairs = field<std::vector<std::vector<Vertex>>>(j, "edges");
  std::vector<GraphEdge> edges;
  edges.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.size() != 2) throw ParseError("graph edge must have two endpoints", 0);
    edges.emplace_back(p[0], p[1]);
  }
  std::vector<std::uint8_t> parts;
  if (j.contains("parts")) {
    for (int x : field<std::vector<int>>(j, "parts")) parts.push_back(static_cast<std::uint8_t>(x));
  }
  return Graph(n, edges, std::move(parts));
}

}  // namespace lazyburn

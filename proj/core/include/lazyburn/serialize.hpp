#ifndef LAZYBURN_SERIALIZE_HPP
#define LAZYBURN_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "lazyburn/bounds.hpp"
#include "lazyburn/burn.hpp"
#include "lazyburn/cmatch.hpp"
#include "lazyburn/force.hpp"
#include "lazyburn/graph.hpp"
#include "lazyburn/hypergraph.hpp"
#include "lazyburn/solve.hpp"

namespace lazyburn {

/// JSON value type used throughout; keys keep insertion order so output
/// follows the documented field order.
using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const Hypergraph& h);                 // {n, edges}
Json to_json(const Graph& g);                      // {n, edges[, parts]}
Json to_json(const BurnTrace& t);                  // {seed, rounds, burned, chron, complete}
Json to_json(const CoreResult& c);                 // {removals, removal_edges, core, vertex_map}
Json to_json(const CMatching& m);                  // {pairs}
Json to_json(const ForceTrace& t);                 // {seed, rounds, complete}
Json to_json(const ForcingNumber& z);              // {value, witness}
Json to_json(const BoundReport& r);                // {entries, best_lower, best_upper}
Json to_json(const GreedyBurn& g);                 // {value, set}

/// {value, witness, certificate, optimal, nodes, millis, model}. With
/// `timing` false the wall-clock field is left out, which makes the output
/// reproducible byte for byte.
Json to_json(const SolveResult& r, bool timing = true);

/// Inverse of to_json(Hypergraph); throws ParseError on malformed input and
/// InvalidInput on structurally invalid edges.
Hypergraph hypergraph_from_json(const Json& j);
Graph graph_from_json(const Json& j);

}  // namespace lazyburn

#endif  // LAZYBURN_SERIALIZE_HPP

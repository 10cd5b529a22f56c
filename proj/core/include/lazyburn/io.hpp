#ifndef LAZYBURN_IO_HPP
#define LAZYBURN_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lazyburn/graph.hpp"
#include "lazyburn/hypergraph.hpp"

namespace lazyburn {

// .hg: '#' comment lines and blank lines are skipped; the first data line is
// "n m", followed by m lines holding the strictly increasing vertex ids of
// one edge each, separated by single spaces.
//
// .gr: same comment rules; "n m" followed by m lines "u v".
//
// Canonical files (no comments, single spaces, '\n' line ends, .gr edges as
// u < v in sorted order) round-trip byte for byte.

Hypergraph parse_hg(std::istream& in);
Hypergraph parse_hg(const std::string& text);
std::string format_hg(const Hypergraph& h);

Graph parse_gr(std::istream& in);
Graph parse_gr(const std::string& text);
std::string format_gr(const Graph& g);

/// Reads a whole file; throws ParseError (line 0) if it cannot be opened.
std::string read_file(const std::filesystem::path& path);
Hypergraph read_hg(const std::filesystem::path& path);
Graph read_gr(const std::filesystem::path& path);

/// Plain DOT for a graph. Vertices of part 1 are drawn as boxes when the
/// graph carries a bipartition.
std::string format_dot(const Graph& g, const std::string& name = "G");

/// DOT for IG(H): hypergraph vertices are circles named by their labels,
/// hyperedges are boxes named e0, e1, ...
std::string format_incidence_dot(const Hypergraph& h);

}  // namespace lazyburn

#endif  // LAZYBURN_IO_HPP

#include "lazyburn/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "lazyburn/types.hpp"

namespace lazyburn {
namespace {

/// Line reader that skips comments and blank lines and tracks line numbers.
class DataLines {
 public:
  explicit DataLines(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::vector<std::uint64_t> parse_numbers(const std::string& line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    std::uint64_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t')) {
      throw ParseError("expected a non-negative integer", line_no);
    }
    out.push_back(value);
    p = next;
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_header(DataLines& lines, const char* kind) {
  std::string line;
  if (!lines.next(line)) throw ParseError(std::string("missing '") + kind + "' header line", 0);
  auto header = parse_numbers(line, lines.number());
  if (header.size() != 2) {
    throw ParseError(std::string("header must be '") + kind + "'", lines.number());
  }
  return {header[0], header[1]};
}

}  // namespace

Hypergraph parse_hg(std::istream& in) {
  DataLines lines(in);
  auto [n, m] = parse_header(lines, "n m");
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(m);
  std::string line;
  for (std::uint64_t j = 0; j < m; ++j) {
    if (!lines.next(line)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(j),
                       lines.number());
    }
    auto ids = parse_numbers(line, lines.number());
    std::vector<Vertex> e;
    for (auto id : ids) {
      if (id >= n) throw ParseError("vertex id " + std::to_string(id) + " >= n", lines.number());
      if (!e.empty() && e.back() >= id) {
        throw ParseError("edge vertices must be strictly increasing", lines.number());
      }
      e.push_back(static_cast<Vertex>(id));
    }
    edges.push_back(std::move(e));
  }
  if (lines.next(line)) throw ParseError("trailing data after the last edge", lines.number());
  try {
    return Hypergraph(n, edges);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), 0);
  }
}

Hypergraph parse_hg(const std::string& text) {
  std::istringstream in(text);
  return parse_hg(in);
}

std::string format_hg(const Hypergraph& h) {
  std::ostringstream os;
  os << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    bool first = true;
    for (Vertex v : h.edge(e)) {
      if (!first) os << ' ';
      os << v;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

Graph parse_gr(std::istream& in) {
  DataLines lines(in);
  auto [n, m] = parse_header(lines, "n m");
  std::vector<GraphEdge> edges;
  edges.reserve(m);
  std::string line;
  for (std::uint64_t j = 0; j < m; ++j) {
    if (!lines.next(line)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(j),
                       lines.number());
    }
    auto ids = parse_numbers(line, lines.number());
    if (ids.size() != 2) throw ParseError("edge line must be 'u v'", lines.number());
    if (ids[0] >= n || ids[1] >= n) throw ParseError("vertex id >= n", lines.number());
    edges.emplace_back(static_cast<Vertex>(ids[0]), static_cast<Vertex>(ids[1]));
  }
  if (lines.next(line)) throw ParseError("trailing data after the last edge", lines.number());
  try {
    return Graph(n, edges);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), 0);
  }
}

Graph parse_gr(const std::string& text) {
  std::istringstream in(text);
  return parse_gr(in);
}

std::string format_gr(const Graph& g) {
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Hypergraph read_hg(const std::filesystem::path& path) { return parse_hg(read_file(path)); }

Graph read_gr(const std::filesystem::path& path) { return parse_gr(read_file(path)); }

std::string format_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    os << "  " << v;
    if (g.has_parts()) os << " [shape=" << (g.parts()[v] ? "box" : "circle") << "]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string format_incidence_dot(const Hypergraph& h) {
  std::ostringstream os;
  os << "graph IG {\n";
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    os << "  v" << v << " [shape=circle, label=\"" << h.label(v) << "\"];\n";
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    os << "  e" << e << " [shape=box, label=\"e" << e << "\"];\n";
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for (Vertex v : h.edge(e)) os << "  v" << v << " -- e" << e << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace lazyburn

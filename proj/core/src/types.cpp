#include "lazyburn/types.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace lazyburn {

const char* to_string(Model model) {
  return model == Model::spontaneous ? "spontaneous" : "original";
}

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_mask(const std::vector<char>& mask) {
  VertexSet out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.ids_.push_back(static_cast<Vertex>(v));
  }
  return out;
}

VertexSet VertexSet::range(std::size_t n) {
  VertexSet out;
  out.ids_.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.ids_[v] = static_cast<Vertex>(v);
  return out;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) ids_.erase(it);
}

void VertexSet::check_range(std::size_t n, const char* what) const {
  if (!ids_.empty() && ids_.back() >= n) {
    throw InvalidInput(std::string(what) + ": vertex id " + std::to_string(ids_.back()) +
                       " out of range for " + std::to_string(n) + " vertices");
  }
}

std::vector<char> VertexSet::mask(std::size_t n) const {
  check_range(n);
  std::vector<char> out(n, 0);
  for (Vertex v : ids_) out[v] = 1;
  return out;
}

VertexSet VertexSet::complement(std::size_t n) const {
  check_range(n);
  VertexSet out;
  auto it = ids_.begin();
  for (std::size_t v = 0; v < n; ++v) {
    if (it != ids_.end() && *it == v) {
      ++it;
    } else {
      out.ids_.push_back(static_cast<Vertex>(v));
    }
  }
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet parse_vertex_list(const std::string& text) {
  std::vector<Vertex> ids;
  if (text.find_first_not_of(" \t") == std::string::npos) return {};
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    Vertex v = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw InvalidInput("not a vertex id: '" + token + "' in '" + text + "'");
    }
    ids.push_back(v);
  }
  if (text.back() == ',') throw InvalidInput("trailing comma in vertex list '" + text + "'");
  return VertexSet(std::move(ids));
}

std::string format_vertex_list(const VertexSet& set, const char* sep) {
  std::ostringstream os;
  bool first = true;
  for (Vertex v : set) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace lazyburn

#ifndef LAZYBURN_TYPES_HPP
#define LAZYBURN_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lazyburn {

/// Dense vertex id, 0..n-1.
using Vertex = std::uint32_t;

/// Position of a hyperedge in its hypergraph's edge list.
using EdgeId = std::uint32_t;

/// Which propagation rule applies to singleton hyperedges.
///
/// `spontaneous` burns the vertex of every singleton edge without help;
/// `original` ignores singleton edges entirely.
enum class Model { spontaneous, original };

const char* to_string(Model model);

/// Bad argument, out-of-range id or broken structural invariant.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed .hg / .gr / JSON text. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An exact search refused to run because the instance exceeds its size guard.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A set of vertex ids kept as a sorted, duplicate-free list.
 *
 * The sorted list is also the canonical serialization, and comparison is
 * lexicographic on it, which is the order used for "least witness" rules.
 */
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  /// Members of a 0/1 mask.
  static VertexSet from_mask(const std::vector<char>& mask);

  /// {0, 1, ..., n-1}.
  static VertexSet range(std::size_t n);

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  const std::vector<Vertex>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  /// Throws InvalidInput if some member is >= n.
  void check_range(std::size_t n, const char* what = "vertex set") const;

  /// 0/1 membership mask of length n; members must be < n.
  std::vector<char> mask(std::size_t n) const;

  /// {0..n-1} minus this set.
  VertexSet complement(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

/// Comma separated ids, e.g. "0,1,2". Empty string gives the empty set.
VertexSet parse_vertex_list(const std::string& text);
std::string format_vertex_list(const VertexSet& set, const char* sep = " ");

}  // namespace lazyburn

#endif  // LAZYBURN_TYPES_HPP

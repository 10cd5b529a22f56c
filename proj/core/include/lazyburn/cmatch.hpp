#ifndef LAZYBURN_CMATCH_HPP
#define LAZYBURN_CMATCH_HPP

#include <cstddef>
#include <vector>

#include "lazyburn/burn.hpp"
#include "lazyburn/hypergraph.hpp"

namespace lazyburn {

struct SearchLimits;

/// Incidence v ∈ h of IG(H), written vh.
struct CMatchPair {
  Vertex vertex;
  EdgeId edge;
  friend auto operator<=>(const CMatchPair&, const CMatchPair&) = default;
};

/**
 * An ordered list of incidences (v_1 h_1, ..., v_k h_k) of IG(H), stored with
 * the dimensions of its host hypergraph rather than a reference to it.
 *
 * It is a C-matching when every v_i lies in h_i and no h_i contains a later
 * v_j (j > i). That forces all v_i and all h_i to be distinct.
 */
struct CMatching {
  std::size_t host_vertices = 0;
  std::size_t host_edges = 0;
  std::vector<CMatchPair> pairs;

  std::size_t size() const { return pairs.size(); }
  /// M_V, the matched hypergraph vertices.
  VertexSet matched_vertices() const;

  friend bool operator==(const CMatching&, const CMatching&) = default;
};

/// Thrown when a chronological list handed to cmatching_from_chron is invalid.
class InvalidChronList : public InvalidInput {
 public:
  explicit InvalidChronList(std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// True iff M is a C-matching of IG(h). Throws InvalidInput when M was built
/// for different host dimensions or mentions out-of-range ids.
bool validate_cmatching(const Hypergraph& h, const CMatching& m);

/// Reads a chronological list of `seed` as the C-matching (v_i h_i).
/// Throws InvalidChronList carrying the first violated index.
CMatching cmatching_from_chron(const Hypergraph& h, const VertexSet& seed, const ChronList& list);

/// Inverse of cmatching_from_chron: the seed V \ M_V and the list ({h_i, v_i}).
struct SeededChron {
  VertexSet seed;
  ChronList list;
};
SeededChron chron_from_cmatching(const Hypergraph& h, const CMatching& m);

/// (h_k v_k, ..., h_1 v_1) as a C-matching of IG(dual(h)): dual vertex ids are
/// the edge indices of h, dual edge ids follow dual_edge_index(h).
/// Throws InvalidInput when M is not a C-matching of IG(h).
CMatching retrograde(const Hypergraph& h, const CMatching& m);

/// A maximum C-matching, obtained from an optimal burning set of the
/// spontaneous model and its certificate; size n - b_L(h).
CMatching max_cmatching(const Hypergraph& h);
CMatching max_cmatching(const Hypergraph& h, const SearchLimits& limits);

}  // namespace lazyburn

#endif  // LAZYBURN_CMATCH_HPP

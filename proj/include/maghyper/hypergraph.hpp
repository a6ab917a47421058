#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "maghyper/errors.hpp"

namespace maghyper {

/// Vertex labels are opaque string tokens: nonempty, no whitespace, unique
/// within one hypergraph.
using VertexId = std::string;

/// Default cap on the number of hyperedges a simplicial closure may produce;
/// the closure is exponential in the largest hyperedge.
inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 20;

/// A finite hypergraph: a sorted vertex universe and a canonically ordered
/// list of distinct nonempty hyperedges. Hyperedges are stored as sorted
/// vectors of indices into the vertex table; since the vertex table is sorted
/// by label, index order and label order agree, and the canonical edge order
/// (size ascending, then lexicographic on sorted labels) is exactly
/// (size ascending, then lexicographic on index vectors). Immutable after
/// construction; all operations on it are pure functions.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Builds and validates from label data. An empty `vertices` list means
  /// "infer the universe as the union of the edges". Duplicate vertices within
  /// one edge are collapsed (edges are sets); duplicate edges are an error.
  static Hypergraph from_labels(const std::vector<VertexId>& vertices,
                                const std::vector<std::vector<VertexId>>& edges,
                                bool infer_vertices);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexId>& vertex_labels() const { return vertices_; }
  const VertexId& vertex_label(int v) const { return vertices_.at(v); }

  /// Edges in canonical order, each a sorted vector of vertex indices.
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const std::vector<int>& edge(int i) const { return edges_.at(i); }
  std::vector<VertexId> edge_labels(int i) const;

  /// Index of the edge with exactly these (sorted) vertex indices, or -1.
  int find_edge(const std::vector<int>& sorted_vertices) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Hypergraph& a, const Hypergraph& b) {
    return !(a == b);
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::vector<int>> edges_;
};

/// Parses the JSON wire format
///   {"vertices": ["a", ...] (optional), "hyperedges": [["a", ...], ...]}
/// into a validated, canonically ordered hypergraph.
Hypergraph parse(std::string_view text);

/// Serializes to the same JSON format, always emitting both fields in
/// canonical order, UTF-8, LF-terminated. parse(serialize(h)) == h.
std::string serialize(const Hypergraph& h, bool pretty = false);

/// Simplicial closure: every nonempty subset of every hyperedge. Throws
/// CapError when the result would exceed `cap` edges.
Hypergraph simplicial_closure(const Hypergraph& h,
                              std::size_t cap = kDefaultClosureCap);

/// Adjoins every vertex as a singleton hyperedge (deduplicated); written H-bar
/// in the vertex-flavor theory.
Hypergraph augment_vertices(const Hypergraph& h);

/// Disjoint union; vertex labels of `h` are prefixed (with as many
/// underscores as needed) to force disjointness from `g`.
Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h);

/// The sub-hypergraph of all hyperedges of size <= 2. Requires the input to
/// be a simplicial complex (closed under nonempty subsets); throws InputError
/// otherwise.
Hypergraph skeleton_1(const Hypergraph& k);

/// True when every nonempty subset of every edge is itself an edge.
bool is_simplicial_complex(const Hypergraph& h);

}  // namespace maghyper

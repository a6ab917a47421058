// Shared fixtures, frozen reference values, random generators, and
// independent oracles used across the test binaries.  Keep this header free
// of any test-framework dependency so the acceptance runner can reuse it.
#pragma once

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "maghyper/homology.hpp"
#include "maghyper/hypergraph.hpp"
#include "maghyper/metric.hpp"

namespace support {

using maghyper::Hypergraph;
using maghyper::IndexMatrix;
using maghyper::VertexId;

using Labels = std::vector<std::vector<VertexId>>;

// ---------------------------------------------------------------------------
// Fixtures (canonical edge order: size ascending, then lexicographic).

/// The full two-simplex: all nonempty subsets of {0,1,2}.
inline Hypergraph full_two_simplex() {
  return Hypergraph::from_labels(
      {}, {{"0"}, {"1"}, {"2"}, {"0", "1"}, {"0", "2"}, {"1", "2"},
           {"0", "1", "2"}},
      true);
}

/// The fan: the full two-simplex with the edge {0,2} removed.
inline Hypergraph fan() {
  return Hypergraph::from_labels(
      {}, {{"0"}, {"1"}, {"2"}, {"0", "1"}, {"1", "2"}, {"0", "1", "2"}},
      true);
}

/// The segment chain: two overlapping segments with two of the three
/// vertices also present as singletons.
inline Hypergraph segment_chain() {
  return Hypergraph::from_labels({}, {{"0"}, {"1"}, {"0", "1"}, {"1", "2"}},
                                 true);
}

/// A single segment with both endpoints as singletons (the complete graph
/// on two vertices, viewed as a simplicial complex).
inline Hypergraph one_segment() {
  return Hypergraph::from_labels({}, {{"a"}, {"b"}, {"a", "b"}}, true);
}

/// A path with three vertices, viewed as a simplicial complex.
inline Hypergraph two_segment_path() {
  return Hypergraph::from_labels(
      {}, {{"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}}, true);
}

// ---------------------------------------------------------------------------
// Frozen reference values (doubled half-unit distances; -1 = infinite).

using Rows = std::vector<std::vector<std::int64_t>>;

inline const Rows& full_two_simplex_d2() {
  static const Rows rows = {
      {0, 2, 2, 1, 1, 2, 1}, {2, 0, 2, 1, 2, 1, 1}, {2, 2, 0, 2, 1, 1, 1},
      {1, 1, 2, 0, 2, 2, 1}, {1, 2, 1, 2, 0, 2, 1}, {2, 1, 1, 2, 2, 0, 1},
      {1, 1, 1, 1, 1, 1, 0}};
  return rows;
}

inline const Rows& full_two_simplex_delta() {
  static const Rows rows = {
      {0, 2, 2, 1, 1, 2, 1}, {2, 0, 2, 1, 2, 1, 1}, {2, 2, 0, 2, 1, 1, 1},
      {1, 1, 2, 0, 1, 1, 1}, {1, 2, 1, 1, 0, 1, 1}, {2, 1, 1, 1, 1, 0, 1},
      {1, 1, 1, 1, 1, 1, 0}};
  return rows;
}

inline const Rows& fan_d2() {
  static const Rows rows = {{0, 2, 2, 1, 2, 1}, {2, 0, 2, 1, 1, 1},
                            {2, 2, 0, 2, 1, 1}, {1, 1, 2, 0, 2, 1},
                            {2, 1, 1, 2, 0, 1}, {1, 1, 1, 1, 1, 0}};
  return rows;
}

inline const Rows& fan_delta() {
  static const Rows rows = {{0, 2, 2, 1, 2, 1}, {2, 0, 2, 1, 1, 1},
                            {2, 2, 0, 2, 1, 1}, {1, 1, 2, 0, 1, 1},
                            {2, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 0}};
  return rows;
}

inline const Rows& segment_chain_d2() {
  static const Rows rows = {
      {0, 2, 1, 3}, {2, 0, 1, 1}, {1, 1, 0, 2}, {3, 1, 2, 0}};
  return rows;
}

inline const Rows& segment_chain_delta() {
  static const Rows rows = {
      {0, 2, 1, 2}, {2, 0, 1, 1}, {1, 1, 0, 1}, {2, 1, 1, 0}};
  return rows;
}

inline IndexMatrix rows_to_matrix(const Rows& rows) {
  const int n = static_cast<int>(rows.size());
  IndexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return m;
}

inline bool matrix_equals(const IndexMatrix& m, const Rows& rows) {
  if (m.rows() != static_cast<Eigen::Index>(rows.size())) return false;
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != static_cast<std::size_t>(m.cols())) return false;
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != rows[i][j]) return false;
  }
  return true;
}

// Truncated magnitude series coefficients in x (one per half-unit power).
inline const std::vector<std::int64_t>& full_two_simplex_series() {
  static const std::vector<std::int64_t> c = {
      7, -24, 72, -216, 648, -1944, 5832, -17496, 52488};
  return c;
}
inline const std::vector<std::int64_t>& fan_series() {
  static const std::vector<std::int64_t> c = {
      6, -18, 48, -130, 354, -966, 2638, -7206, 19686};
  return c;
}
inline const std::vector<std::int64_t>& segment_chain_series() {
  static const std::vector<std::int64_t> c = {4, -6, 6, -6, 6, -6, 6};
  return c;
}

// ---------------------------------------------------------------------------
// Random instances (all deterministic under a caller-provided engine).

using Rng = std::mt19937_64;

/// Random hypergraph with 1..max_vertices vertices and 1..max_edges distinct
/// nonempty hyperedges.
inline Hypergraph random_hypergraph(Rng& rng, int max_vertices,
                                    int max_edges) {
  std::uniform_int_distribution<int> nv_dist(1, max_vertices);
  const int nv = nv_dist(rng);
  std::vector<VertexId> names;
  names.reserve(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) names.push_back("v" + std::to_string(i));

  std::uniform_int_distribution<int> ne_dist(1, max_edges);
  // Only 2^nv - 1 distinct nonempty subsets exist; cap the target so the
  // rejection loop below always terminates.
  const int ne = std::min(ne_dist(rng), (1 << nv) - 1);
  std::set<std::vector<VertexId>> edges;
  std::uniform_int_distribution<int> coin(0, 1);
  while (static_cast<int>(edges.size()) < ne) {
    std::vector<VertexId> edge;
    for (int i = 0; i < nv; ++i)
      if (coin(rng) == 1) edge.push_back(names[static_cast<std::size_t>(i)]);
    if (edge.empty())
      edge.push_back(
          names[std::uniform_int_distribution<int>(0, nv - 1)(rng)]);
    edges.insert(edge);
  }
  return Hypergraph::from_labels(
      names, Labels(edges.begin(), edges.end()), false);
}

/// Random simplicial complex: the closure of a small random hypergraph.
inline Hypergraph random_simplicial_complex(Rng& rng, int max_vertices,
                                            int max_edges) {
  return maghyper::simplicial_closure(
      random_hypergraph(rng, max_vertices, max_edges));
}

/// A random vertex map out of g, together with the image hypergraph it
/// induces.  Vertex-induced morphisms preserve inclusions by construction.
struct VertexMapInstance {
  Hypergraph target;
  std::vector<int> vertex_map;
};

inline VertexMapInstance random_vertex_collapse(Rng& rng,
                                                const Hypergraph& g) {
  const int n = g.vertex_count();
  std::uniform_int_distribution<int> pick(0, n - 1);
  VertexMapInstance inst;
  inst.vertex_map.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inst.vertex_map[static_cast<std::size_t>(i)] = pick(rng);

  std::set<std::vector<VertexId>> images;
  for (int e = 0; e < g.edge_count(); ++e) {
    std::set<VertexId> img;
    for (int v : g.edge(e))
      img.insert(g.vertex_label(inst.vertex_map[static_cast<std::size_t>(v)]));
    images.insert(std::vector<VertexId>(img.begin(), img.end()));
  }
  std::vector<VertexId> names;
  for (int i = 0; i < n; ++i) names.push_back(g.vertex_label(i));
  inst.target =
      Hypergraph::from_labels(names, Labels(images.begin(), images.end()),
                              false);
  return inst;
}

// ---------------------------------------------------------------------------
// Independent oracles.

/// Exhaustive distances via depth-first search over simple hyperedge paths.
/// Only practical for a handful of hyperedges; returns doubled lengths and
/// hop counts with -1 for unreachable pairs.
struct BruteDistances {
  Rows d2;
  Rows delta;
};

inline BruteDistances brute_force_distances(const Hypergraph& h) {
  const int m = h.edge_count();
  Rows step(static_cast<std::size_t>(m),
            std::vector<std::int64_t>(static_cast<std::size_t>(m), -1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) {
        step[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
        continue;
      }
      const auto& a = h.edge(i);
      const auto& b = h.edge(j);
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      if (common.size() == a.size() || common.size() == b.size())
        step[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
      else
        step[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 2;
    }
  }

  BruteDistances out;
  out.d2.assign(static_cast<std::size_t>(m),
                std::vector<std::int64_t>(static_cast<std::size_t>(m), -1));
  out.delta = out.d2;
  for (int s = 0; s < m; ++s) {
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    // DFS over simple paths accumulating (length2, hops).
    std::vector<std::int64_t>& drow = out.d2[static_cast<std::size_t>(s)];
    std::vector<std::int64_t>& hrow = out.delta[static_cast<std::size_t>(s)];
    std::function<void(int, std::int64_t, std::int64_t)> visit =
        [&](int node, std::int64_t len2, std::int64_t hops) {
          if (drow[static_cast<std::size_t>(node)] < 0 ||
              len2 < drow[static_cast<std::size_t>(node)])
            drow[static_cast<std::size_t>(node)] = len2;
          if (hrow[static_cast<std::size_t>(node)] < 0 ||
              hops < hrow[static_cast<std::size_t>(node)])
            hrow[static_cast<std::size_t>(node)] = hops;
          used[static_cast<std::size_t>(node)] = true;
          for (int next = 0; next < m; ++next) {
            if (used[static_cast<std::size_t>(next)]) continue;
            const std::int64_t w =
                step[static_cast<std::size_t>(node)][static_cast<std::size_t>(next)];
            if (w < 0) continue;
            visit(next, len2 + w, hops + 1);
          }
          used[static_cast<std::size_t>(node)] = false;
        };
    visit(s, 0, 0);
  }
  return out;
}

/// Rank of an integer matrix over the prime field F_p (independent of the
/// Smith normal form code path).
inline int mod_p_rank(const maghyper::IntMatrix& m, int p) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<std::vector<int>> a(static_cast<std::size_t>(rows),
                                  std::vector<int>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const maghyper::Int r = m(i, j) % maghyper::Int(p);
      int v = static_cast<int>(r.to_int64());
      if (v < 0) v += p;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    // Scale the pivot row to 1 (p is prime, so invert by exponentiation).
    const int pv = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
    int inv = 1, base = pv, exp = p - 2;
    while (exp > 0) {
      if (exp & 1) inv = inv * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    for (int j = col; j < cols; ++j)
      a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
          a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const int f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) {
        int v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -
                f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] % p;
        v %= p;
        if (v < 0) v += p;
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = v;
      }
    }
    ++rank;
  }
  return rank;
}

/// Dimension of H_k of an integer chain complex with coefficients in F_p,
/// computed purely with mod-p ranks.
inline int mod_p_homology_dim(const maghyper::IntMatrix& boundary_k,
                              const maghyper::IntMatrix& boundary_k1, int p) {
  const int chains = static_cast<int>(boundary_k.cols());
  return chains - mod_p_rank(boundary_k, p) - mod_p_rank(boundary_k1, p);
}

// ---------------------------------------------------------------------------
// Process helper (used by the CLI tests and the determinism criterion).

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

/// Runs a shell command, capturing stdout (stderr is discarded).
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  const std::string full = command + " 2>/dev/null";
  FILE* pipe = ::popen(full.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = ::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = ::pclose(pipe);
  if (status >= 0 && WIFEXITED(status))
    result.exit_code = WEXITSTATUS(status);
  return result;
}

/// Writes text to a file, overwriting any existing content.
inline void write_file(const std::string& path, const std::string& text) {
  FILE* f = ::fopen(path.c_str(), "wb");
  if (f == nullptr) return;
  ::fwrite(text.data(), 1, text.size(), f);
  ::fclose(f);
}

}  // namespace support

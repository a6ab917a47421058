#include "maghyper/metric.hpp"

#include <algorithm>

#include "maghyper/errors.hpp"

namespace maghyper {

namespace {

/// Relation of two sorted vertex sets, enough to classify a step.
enum class Overlap { kDisjoint, kEqual, kSubset, kSuperset, kCrossing };

Overlap classify(const std::vector<int>& s, const std::vector<int>& t) {
  std::size_t i = 0, j = 0, common = 0;
  while (i < s.size() && j < t.size()) {
    if (s[i] == t[j]) {
      ++common, ++i, ++j;
    } else if (s[i] < t[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  if (common == 0) return Overlap::kDisjoint;
  if (common == s.size() && common == t.size()) return Overlap::kEqual;
  if (common == s.size()) return Overlap::kSubset;
  if (common == t.size()) return Overlap::kSuperset;
  return Overlap::kCrossing;
}

constexpr std::int64_t kInf = -1;

bool lex_less(std::int64_t a1, std::int64_t a2, std::int64_t b1,
              std::int64_t b2) {
  if (a1 != b1) return a1 < b1;
  return a2 < b2;
}

}  // namespace

HalfLength step_length(const std::vector<int>& s, const std::vector<int>& t) {
  switch (classify(s, t)) {
    case Overlap::kEqual:
      return HalfLength::zero();
    case Overlap::kSubset:
    case Overlap::kSuperset:
      return HalfLength::half();
    case Overlap::kCrossing:
      return HalfLength::one();
    case Overlap::kDisjoint:
      break;
  }
  throw InputError("step length is undefined for disjoint hyperedges");
}

PathWitness path_length(const Hypergraph& h, const std::vector<int>& edges) {
  if (edges.empty()) throw InputError("path must contain at least one edge");
  for (int e : edges) {
    if (e < 0 || e >= h.edge_count()) {
      throw InputError("path edge index out of range");
    }
  }
  PathWitness w;
  w.edges = edges;
  w.height = static_cast<int>(edges.size()) - 1;
  w.length = HalfLength::zero();
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    w.length += step_length(h.edge(edges[i]), h.edge(edges[i + 1]));
  }
  return w;
}

DistanceMatrix distance_matrix(const Hypergraph& h) {
  const int n = h.edge_count();
  DistanceMatrix m;
  m.size = n;
  m.d2 = IndexMatrix::Constant(n, n, kInf);
  m.delta = IndexMatrix::Constant(n, n, kInf);
  m.next_d = IndexMatrix::Constant(n, n, kInf);
  m.d_hops = IndexMatrix::Constant(n, n, kInf);
  m.next_delta = IndexMatrix::Constant(n, n, kInf);
  m.delta_len2 = IndexMatrix::Constant(n, n, kInf);

  for (int i = 0; i < n; ++i) {
    m.d2(i, i) = 0;
    m.d_hops(i, i) = 0;
    m.delta(i, i) = 0;
    m.delta_len2(i, i) = 0;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Overlap rel = classify(h.edge(i), h.edge(j));
      if (rel == Overlap::kDisjoint) continue;
      const std::int64_t w2 = (rel == Overlap::kCrossing) ? 2 : 1;
      m.d2(i, j) = m.d2(j, i) = w2;
      m.d_hops(i, j) = m.d_hops(j, i) = 1;
      m.next_d(i, j) = j;
      m.next_d(j, i) = i;
      m.delta(i, j) = m.delta(j, i) = 1;
      m.delta_len2(i, j) = m.delta_len2(j, i) = w2;
      m.next_delta(i, j) = j;
      m.next_delta(j, i) = i;
    }
  }

  // Floyd–Warshall twice over the same arc set, with lexicographic
  // objectives: (length, hops) for d and (hops, length) for delta. The
  // secondary component makes witnesses canonical and lets tests check the
  // joint-optimal-path lemma.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (m.d2(i, k) < 0 && m.delta(i, k) < 0) continue;
      for (int j = 0; j < n; ++j) {
        if (m.d2(i, k) >= 0 && m.d2(k, j) >= 0) {
          const std::int64_t via2 = m.d2(i, k) + m.d2(k, j);
          const std::int64_t via_hops = m.d_hops(i, k) + m.d_hops(k, j);
          if (m.d2(i, j) < 0 ||
              lex_less(via2, via_hops, m.d2(i, j), m.d_hops(i, j))) {
            m.d2(i, j) = via2;
            m.d_hops(i, j) = via_hops;
            m.next_d(i, j) = m.next_d(i, k);
          }
        }
        if (m.delta(i, k) >= 0 && m.delta(k, j) >= 0) {
          const std::int64_t via_hops = m.delta(i, k) + m.delta(k, j);
          const std::int64_t via2 = m.delta_len2(i, k) + m.delta_len2(k, j);
          if (m.delta(i, j) < 0 ||
              lex_less(via_hops, via2, m.delta(i, j), m.delta_len2(i, j))) {
            m.delta(i, j) = via_hops;
            m.delta_len2(i, j) = via2;
            m.next_delta(i, j) = m.next_delta(i, k);
          }
        }
      }
    }
  }
  return m;
}

namespace {

PathWitness follow(const IndexMatrix& next, const Hypergraph& h, int i,
                   int j) {
  if (i != j && next(i, j) < 0) {
    throw InputError("no path between the requested hyperedges");
  }
  std::vector<int> edges{i};
  int cur = i;
  while (cur != j) {
    cur = static_cast<int>(next(cur, j));
    edges.push_back(cur);
  }
  return path_length(h, edges);
}

}  // namespace

PathWitness d_witness(const DistanceMatrix& m, const Hypergraph& h, int i,
                      int j) {
  return follow(m.next_d, h, i, j);
}

PathWitness delta_witness(const DistanceMatrix& m, const Hypergraph& h, int i,
                          int j) {
  return follow(m.next_delta, h, i, j);
}

DistanceMatrix vertex_distance_matrix(const Hypergraph& h) {
  const Hypergraph aug = augment_vertices(h);
  const DistanceMatrix full = distance_matrix(aug);

  // Position of each singleton {v} in the augmented edge order.
  const int nv = h.vertex_count();
  std::vector<int> pos(nv, -1);
  for (int v = 0; v < nv; ++v) {
    // Labels are shared between h and aug, but indices may differ when h
    // declares isolated vertices; map through the label.
    const auto& label = h.vertex_label(v);
    int av = -1;
    for (int w = 0; w < aug.vertex_count(); ++w) {
      if (aug.vertex_label(w) == label) {
        av = w;
        break;
      }
    }
    pos[v] = aug.find_edge({av});
    if (pos[v] < 0) throw InternalError("augmented singleton edge missing");
  }

  DistanceMatrix m;
  m.size = nv;
  m.d2 = IndexMatrix::Constant(nv, nv, kInf);
  m.delta = IndexMatrix::Constant(nv, nv, kInf);
  for (int a = 0; a < nv; ++a) {
    for (int b = 0; b < nv; ++b) {
      const std::int64_t v2 = full.d2(pos[a], pos[b]);
      if (v2 >= 0 && v2 % 2 != 0) {
        throw InternalError("vertex distance came out half-integral");
      }
      m.d2(a, b) = v2;
      m.delta(a, b) = full.delta(pos[a], pos[b]);
    }
  }
  return m;
}

}  // namespace maghyper

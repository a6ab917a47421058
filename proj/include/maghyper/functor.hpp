#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "maghyper/homology.hpp"
#include "maghyper/hypergraph.hpp"

namespace maghyper {

/// A map of hypergraphs: a total map on hyperedge indices required to
/// preserve inclusions (s subset of t implies f(s) subset of f(t)).
struct HypergraphMorphism {
  Hypergraph source;
  Hypergraph target;
  std::vector<int> edge_map;  ///< size = source.edge_count()
};

HypergraphMorphism identity_morphism(const Hypergraph& g);

/// g after f; requires f.target == g.source (InputError otherwise).
HypergraphMorphism compose(const HypergraphMorphism& g,
                           const HypergraphMorphism& f);

/// Morphism induced by a vertex map phi (source vertex index -> target vertex
/// index): every source hyperedge must land exactly on a target hyperedge as
/// a set, else InputError. Such morphisms automatically contract distances.
HypergraphMorphism vertex_induced_morphism(const Hypergraph& g,
                                           const Hypergraph& h,
                                           const std::vector<int>& vertex_map);

/// The inclusion of g as the left factor of disjoint_union(g, h).
HypergraphMorphism left_inclusion(const Hypergraph& g, const Hypergraph& h);

/// Validation verdict. Totality and inclusion-preservation decide validity;
/// the distance inequality d(f s, f t) <= d(s, t) is checked as a diagnostic
/// and reported, never enforced — inclusion-preserving maps exist that
/// increase distances.
struct MorphismReport {
  bool total_ok = false;
  bool inclusion_ok = false;
  std::optional<std::pair<int, int>> inclusion_witness;
  bool distance_ok = false;
  std::optional<std::pair<int, int>> distance_witness;
  bool valid() const { return total_ok && inclusion_ok; }
};

MorphismReport validate_morphism(const HypergraphMorphism& f);

/// The chain-level induced map in the hyperedge flavor: per grading, the
/// matrix sending a source generator tuple to its entrywise image when that
/// image has pairwise-distinct consecutive entries and the same total length,
/// and to zero otherwise.
struct InducedChain {
  GeneratorMap source_gens;
  GeneratorMap target_gens;
  std::map<Grading, IntMatrix> maps;  ///< target level x source level

  const IntMatrix* at(int k, std::int64_t length2) const {
    const auto it = maps.find({k, length2});
    return it == maps.end() ? nullptr : &it->second;
  }
};

InducedChain induced_chain_map(const HypergraphMorphism& f,
                               std::int64_t length2_max,
                               std::size_t cap = kDefaultGeneratorCap);

/// The induced map on one homology bigrading, written in the presentation
/// coordinates of homology_basis: row/col i is a free generator when its
/// divisor is 0 and a Z/d generator when the divisor is d > 1 (coordinates
/// with divisor 1 are dropped). Torsion rows are reduced to [0, d).
struct HomologyMapCell {
  IntMatrix map;
  std::vector<Int> row_divisors;
  std::vector<Int> col_divisors;

  friend bool operator==(const HomologyMapCell& a, const HomologyMapCell& b) {
    return a.row_divisors == b.row_divisors &&
           a.col_divisors == b.col_divisors && a.map.rows() == b.map.rows() &&
           a.map.cols() == b.map.cols() && (a.map - b.map).isZero(0);
  }
};

struct InducedHomology {
  std::map<Grading, HomologyMapCell> cells;  ///< gradings with either side nonzero
};

/// Computes f_* on every complete bigrading with length2 <= length2_max.
/// Verifies that f_# is a chain map and that homology classes map to cycle
/// classes; violations throw InternalError (for a valid morphism whose
/// distance inequality holds they cannot occur).
InducedHomology induced_homology_map(const HypergraphMorphism& f,
                                     std::int64_t length2_max,
                                     std::size_t cap = kDefaultGeneratorCap);

/// Matrix composition of homology-map cells (g after f), with torsion rows
/// reduced by the row divisors.
HomologyMapCell compose_cells(const HomologyMapCell& g,
                              const HomologyMapCell& f);

/// Per-bigrading comparison of MH(G) + MH(H) with MH of the disjoint union,
/// hyperedge flavor, at every grading length2 <= length2_max.
struct DisjointUnionReport {
  bool ok = false;
  std::string detail;  ///< first mismatch when not ok
};

DisjointUnionReport disjoint_union_check(const Hypergraph& g,
                                         const Hypergraph& h,
                                         std::int64_t length2_max);

}  // namespace maghyper

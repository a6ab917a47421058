#include "maghyper/functor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "maghyper/errors.hpp"

namespace maghyper {

namespace {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Int mod_floor(const Int& a, const Int& d) {
  Int r = a % d;
  if (r.sign() < 0) r += d;
  return r;
}

Eigen::Index level_size(const GradedComplex& c, int k) {
  if (k < 0 || k > c.k_max()) return 0;
  return static_cast<Eigen::Index>(c.levels[k].size());
}

IntMatrix boundary_or_zero(const GradedComplex& c, int k) {
  if (k >= 1 && k <= c.k_max()) return c.boundaries[k];
  return IntMatrix::Zero(level_size(c, k - 1), level_size(c, k));
}

}  // namespace

HypergraphMorphism identity_morphism(const Hypergraph& g) {
  HypergraphMorphism f;
  f.source = g;
  f.target = g;
  f.edge_map.resize(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) f.edge_map[i] = i;
  return f;
}

HypergraphMorphism compose(const HypergraphMorphism& g,
                           const HypergraphMorphism& f) {
  if (f.target != g.source) {
    throw InputError("compose: middle hypergraphs do not match");
  }
  HypergraphMorphism out;
  out.source = f.source;
  out.target = g.target;
  out.edge_map.reserve(f.edge_map.size());
  for (int e : f.edge_map) out.edge_map.push_back(g.edge_map.at(e));
  return out;
}

HypergraphMorphism vertex_induced_morphism(
    const Hypergraph& g, const Hypergraph& h,
    const std::vector<int>& vertex_map) {
  if (static_cast<int>(vertex_map.size()) != g.vertex_count()) {
    throw InputError("vertex map must cover every source vertex");
  }
  for (int v : vertex_map) {
    if (v < 0 || v >= h.vertex_count()) {
      throw InputError("vertex map image out of range");
    }
  }
  HypergraphMorphism f;
  f.source = g;
  f.target = h;
  for (int e = 0; e < g.edge_count(); ++e) {
    std::set<int> image;
    for (int v : g.edge(e)) image.insert(vertex_map[v]);
    const std::vector<int> sorted(image.begin(), image.end());
    const int te = h.find_edge(sorted);
    if (te < 0) {
      throw InputError("vertex map sends a hyperedge outside the target");
    }
    f.edge_map.push_back(te);
  }
  return f;
}

HypergraphMorphism left_inclusion(const Hypergraph& g, const Hypergraph& h) {
  HypergraphMorphism f;
  f.source = g;
  f.target = disjoint_union(g, h);

  std::map<VertexId, int> target_index;
  for (int v = 0; v < f.target.vertex_count(); ++v) {
    target_index.emplace(f.target.vertex_label(v), v);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<int> image;
    for (const VertexId& label : g.edge_labels(e)) {
      image.push_back(target_index.at(label));
    }
    std::sort(image.begin(), image.end());
    const int te = f.target.find_edge(image);
    if (te < 0) throw InternalError("union lost a left-factor hyperedge");
    f.edge_map.push_back(te);
  }
  return f;
}

MorphismReport validate_morphism(const HypergraphMorphism& f) {
  MorphismReport report;
  report.total_ok =
      static_cast<int>(f.edge_map.size()) == f.source.edge_count();
  if (report.total_ok) {
    for (int e : f.edge_map) {
      if (e < 0 || e >= f.target.edge_count()) {
        report.total_ok = false;
        break;
      }
    }
  }
  if (!report.total_ok) return report;

  report.inclusion_ok = true;
  for (int i = 0; i < f.source.edge_count() && report.inclusion_ok; ++i) {
    for (int j = 0; j < f.source.edge_count(); ++j) {
      if (i == j || !is_subset(f.source.edge(i), f.source.edge(j))) continue;
      if (!is_subset(f.target.edge(f.edge_map[i]),
                     f.target.edge(f.edge_map[j]))) {
        report.inclusion_ok = false;
        report.inclusion_witness = {i, j};
        break;
      }
    }
  }

  // Diagnostic only: inclusion-preserving maps need not contract distances.
  const DistanceMatrix dg = distance_matrix(f.source);
  const DistanceMatrix dh = distance_matrix(f.target);
  report.distance_ok = true;
  for (int i = 0; i < f.source.edge_count() && report.distance_ok; ++i) {
    for (int j = 0; j < f.source.edge_count(); ++j) {
      if (dg.d2(i, j) < 0) continue;
      const std::int64_t image = dh.d2(f.edge_map[i], f.edge_map[j]);
      if (image < 0 || image > dg.d2(i, j)) {
        report.distance_ok = false;
        report.distance_witness = {i, j};
        break;
      }
    }
  }
  return report;
}

InducedChain induced_chain_map(const HypergraphMorphism& f,
                               std::int64_t length2_max, std::size_t cap) {
  if (!validate_morphism(f).valid()) {
    throw InputError("induced map requires an inclusion-preserving morphism");
  }
  InducedChain out;
  out.source_gens =
      enumerate_generators(f.source, Flavor::kHyperedge, length2_max, cap);
  out.target_gens =
      enumerate_generators(f.target, Flavor::kHyperedge, length2_max, cap);
  const IndexMatrix target_d2 = flavor_distances(f.target, Flavor::kHyperedge);

  std::set<Grading> gradings;
  for (const auto& [key, list] : out.source_gens) gradings.insert(key);
  for (const auto& [key, list] : out.target_gens) gradings.insert(key);

  static const std::vector<Tuple> kEmpty;
  for (const Grading& key : gradings) {
    const auto sit = out.source_gens.find(key);
    const auto tit = out.target_gens.find(key);
    const std::vector<Tuple>& src = sit == out.source_gens.end() ? kEmpty : sit->second;
    const std::vector<Tuple>& tgt = tit == out.target_gens.end() ? kEmpty : tit->second;

    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(tgt.size()),
                                  static_cast<Eigen::Index>(src.size()));
    std::map<Tuple, int> row;
    for (int i = 0; i < static_cast<int>(tgt.size()); ++i) row.emplace(tgt[i], i);

    for (int c = 0; c < static_cast<int>(src.size()); ++c) {
      Tuple image;
      image.reserve(src[c].size());
      for (int e : src[c]) image.push_back(f.edge_map[e]);
      bool distinct = true;
      for (std::size_t i = 1; i < image.size(); ++i) {
        if (image[i] == image[i - 1]) {
          distinct = false;
          break;
        }
      }
      if (!distinct) continue;
      if (tuple_length2(target_d2, image) != key.second) continue;
      const auto it = row.find(image);
      if (it == row.end()) {
        throw InternalError("image generator missing from target enumeration");
      }
      m(it->second, c) = Int(1);
    }
    out.maps.emplace(key, std::move(m));
  }
  return out;
}

namespace {

IntMatrix chain_matrix_or_zero(const InducedChain& chain,
                               const GradedComplex& cg,
                               const GradedComplex& ch, int k,
                               std::int64_t length2) {
  if (const IntMatrix* m = chain.at(k, length2)) return *m;
  return IntMatrix::Zero(level_size(ch, k), level_size(cg, k));
}

bool matrices_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

}  // namespace

InducedHomology induced_homology_map(const HypergraphMorphism& f,
                                     std::int64_t length2_max,
                                     std::size_t cap) {
  const InducedChain chain = induced_chain_map(f, length2_max, cap);
  const IndexMatrix d2g = flavor_distances(f.source, Flavor::kHyperedge);
  const IndexMatrix d2h = flavor_distances(f.target, Flavor::kHyperedge);

  InducedHomology out;
  for (std::int64_t l2 = 0; l2 <= length2_max; ++l2) {
    const GradedComplex cg =
        build_graded_complex(d2g, chain.source_gens, Flavor::kHyperedge, l2);
    const GradedComplex ch =
        build_graded_complex(d2h, chain.target_gens, Flavor::kHyperedge, l2);
    const int k_top = std::max(cg.k_max(), ch.k_max());
    if (k_top < 0) continue;

    // f_# must commute with the boundary before anything can descend.
    for (int k = 1; k <= k_top; ++k) {
      const IntMatrix lhs = boundary_or_zero(ch, k) *
                            chain_matrix_or_zero(chain, cg, ch, k, l2);
      const IntMatrix rhs = chain_matrix_or_zero(chain, cg, ch, k - 1, l2) *
                            boundary_or_zero(cg, k);
      if (!matrices_equal(lhs, rhs)) {
        throw InternalError(
            "induced map is not a chain map at k=" + std::to_string(k) +
            ", length2=" + std::to_string(l2));
      }
    }

    for (int k = 0; k <= k_top; ++k) {
      const HomologyBasis bg =
          homology_basis(boundary_or_zero(cg, k), boundary_or_zero(cg, k + 1));
      const HomologyBasis bh =
          homology_basis(boundary_or_zero(ch, k), boundary_or_zero(ch, k + 1));
      if (bg.group().is_trivial() && bh.group().is_trivial()) continue;

      std::vector<int> src_coords, tgt_coords;
      for (int i = 0; i < static_cast<int>(bg.divisors.size()); ++i) {
        if (bg.divisors[i] != Int(1)) src_coords.push_back(i);
      }
      for (int i = 0; i < static_cast<int>(bh.divisors.size()); ++i) {
        if (bh.divisors[i] != Int(1)) tgt_coords.push_back(i);
      }

      HomologyMapCell cell;
      for (int i : tgt_coords) cell.row_divisors.push_back(bh.divisors[i]);
      for (int i : src_coords) cell.col_divisors.push_back(bg.divisors[i]);
      cell.map = IntMatrix::Zero(static_cast<Eigen::Index>(tgt_coords.size()),
                                 static_cast<Eigen::Index>(src_coords.size()));

      const IntMatrix fk = chain_matrix_or_zero(chain, cg, ch, k, l2);
      for (std::size_t c = 0; c < src_coords.size(); ++c) {
        // Chain representative of the c-th surviving source coordinate.
        const IntVector rep =
            bg.kernel * bg.transform_inv.col(src_coords[c]).eval();
        const IntVector image_coords = cycle_coords(bh, fk * rep);
        for (std::size_t r = 0; r < tgt_coords.size(); ++r) {
          Int value = image_coords(tgt_coords[r]);
          const Int& d = cell.row_divisors[r];
          if (d > Int(1)) value = mod_floor(value, d);
          cell.map(static_cast<Eigen::Index>(r),
                   static_cast<Eigen::Index>(c)) = value;
        }
      }
      out.cells.emplace(Grading{k, l2}, std::move(cell));
    }
  }
  return out;
}

HomologyMapCell compose_cells(const HomologyMapCell& g,
                              const HomologyMapCell& f) {
  if (g.col_divisors != f.row_divisors) {
    throw InputError("compose_cells: middle presentations do not match");
  }
  HomologyMapCell out;
  out.row_divisors = g.row_divisors;
  out.col_divisors = f.col_divisors;
  out.map = g.map * f.map;
  for (Eigen::Index r = 0; r < out.map.rows(); ++r) {
    const Int& d = out.row_divisors[static_cast<std::size_t>(r)];
    if (d > Int(1)) {
      for (Eigen::Index c = 0; c < out.map.cols(); ++c) {
        out.map(r, c) = mod_floor(out.map(r, c), d);
      }
    }
  }
  return out;
}

DisjointUnionReport disjoint_union_check(const Hypergraph& g,
                                         const Hypergraph& h,
                                         std::int64_t length2_max) {
  const HomologyTable tg = homology_table(g, Flavor::kHyperedge, length2_max);
  const HomologyTable th = homology_table(h, Flavor::kHyperedge, length2_max);
  const HomologyTable tu =
      homology_table(disjoint_union(g, h), Flavor::kHyperedge, length2_max);

  std::set<Grading> gradings;
  for (const auto& [key, group] : tg.entries) gradings.insert(key);
  for (const auto& [key, group] : th.entries) gradings.insert(key);
  for (const auto& [key, group] : tu.entries) gradings.insert(key);

  DisjointUnionReport report;
  report.ok = true;
  for (const Grading& key : gradings) {
    const HomologyGroup sum =
        direct_sum(tg.at(key.first, key.second), th.at(key.first, key.second));
    const HomologyGroup whole = tu.at(key.first, key.second);
    if (sum != whole) {
      report.ok = false;
      std::ostringstream os;
      os << "at (k=" << key.first << ", length2=" << key.second
         << "): G plus H gives " << sum.str() << " but the union gives "
         << whole.str();
      report.detail = os.str();
      break;
    }
  }
  return report;
}

}  // namespace maghyper

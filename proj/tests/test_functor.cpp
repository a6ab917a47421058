#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "maghyper/errors.hpp"
#include "maghyper/functor.hpp"
#include "maghyper/homology.hpp"
#include "support.hpp"

using namespace maghyper;

namespace {

/// A vertex-induced morphism drawn from a random vertex collapse.
HypergraphMorphism random_morphism(support::Rng& rng, const Hypergraph& g,
                                   support::VertexMapInstance* inst_out) {
  const support::VertexMapInstance inst = support::random_vertex_collapse(rng, g);
  if (inst_out != nullptr) *inst_out = inst;
  return vertex_induced_morphism(g, inst.target, inst.vertex_map);
}

/// Checks the commuting-square property of the induced chain map at every
/// complete bigrading up to length2_max.
void check_chain_map(const HypergraphMorphism& f, std::int64_t length2_max) {
  const InducedChain chain = induced_chain_map(f, length2_max);
  const IndexMatrix dg = flavor_distances(f.source, Flavor::kHyperedge);
  const IndexMatrix dh = flavor_distances(f.target, Flavor::kHyperedge);
  std::set<std::int64_t> lengths;
  for (const auto& [grading, m] : chain.maps) lengths.insert(grading.second);
  for (const std::int64_t l2 : lengths) {
    const GradedComplex cg =
        build_graded_complex(dg, chain.source_gens, Flavor::kHyperedge, l2);
    const GradedComplex ch =
        build_graded_complex(dh, chain.target_gens, Flavor::kHyperedge, l2);
    // A missing block means neither side has generators at that grading, so
    // the chain map there is the (uniquely-shaped) zero map.
    const auto block = [&](int k) -> IntMatrix {
      const IntMatrix* m = chain.at(k, l2);
      if (m != nullptr) return *m;
      const Eigen::Index rows =
          k <= ch.k_max()
              ? static_cast<Eigen::Index>(
                    ch.levels[static_cast<std::size_t>(k)].size())
              : 0;
      const Eigen::Index cols =
          k <= cg.k_max()
              ? static_cast<Eigen::Index>(
                    cg.levels[static_cast<std::size_t>(k)].size())
              : 0;
      return IntMatrix::Zero(rows, cols);
    };
    for (int k = 1; k <= cg.k_max(); ++k) {
      const IntMatrix fk = block(k);
      const IntMatrix fk1 = block(k - 1);
      IntMatrix dh_k = k <= ch.k_max()
                           ? ch.boundaries[static_cast<std::size_t>(k)]
                           : IntMatrix::Zero(fk1.rows(), fk.rows());
      const IntMatrix lhs = dh_k * fk;
      const IntMatrix rhs = fk1 * cg.boundaries[static_cast<std::size_t>(k)];
      CHECK(lhs.rows() == rhs.rows());
      CHECK(lhs.cols() == rhs.cols());
      CHECK((lhs - rhs).isZero(0));
    }
  }
}

}  // namespace

TEST_CASE("identity and composition of morphisms") {
  const Hypergraph g = support::fan();
  const HypergraphMorphism id = identity_morphism(g);
  CHECK(validate_morphism(id).valid());
  CHECK(validate_morphism(id).distance_ok);
  const HypergraphMorphism idid = compose(id, id);
  CHECK(idid.edge_map == id.edge_map);

  const HypergraphMorphism incl = left_inclusion(g, support::one_segment());
  const MorphismReport r = validate_morphism(incl);
  CHECK(r.valid());
  CHECK(r.distance_ok);

  // Composition demands compatible middles.
  const HypergraphMorphism other = identity_morphism(support::one_segment());
  CHECK_THROWS_AS(compose(other, id), InputError);
}

TEST_CASE("vertex-induced morphisms preserve inclusions") {
  support::Rng rng(1789);
  for (int trial = 0; trial < 20; ++trial) {
    const Hypergraph g = support::random_hypergraph(rng, 5, 6);
    support::VertexMapInstance inst;
    const HypergraphMorphism f = random_morphism(rng, g, &inst);
    const MorphismReport r = validate_morphism(f);
    CHECK(r.valid());
    CHECK(r.distance_ok);  // vertex collapses never increase distances
  }
}

TEST_CASE("inclusion violations are reported with a witness") {
  const Hypergraph g = support::segment_chain();
  // Swap the two singletons' images inconsistently: send {0} to {1,2}
  // and the containing segment {0,1} to {0}; inclusion is violated.
  const int v0 = g.find_edge({0});
  const int e01 = g.find_edge({0, 1});
  HypergraphMorphism f;
  f.source = g;
  f.target = g;
  f.edge_map = {0, 1, 2, 3};
  f.edge_map[static_cast<std::size_t>(v0)] = g.find_edge({1, 2});
  f.edge_map[static_cast<std::size_t>(e01)] = g.find_edge({0});
  const MorphismReport r = validate_morphism(f);
  CHECK_FALSE(r.inclusion_ok);
  CHECK_FALSE(r.valid());
  REQUIRE(r.inclusion_witness.has_value());

  // Totality violations are caught too.
  HypergraphMorphism partial;
  partial.source = g;
  partial.target = g;
  partial.edge_map = {0, 1};
  CHECK_FALSE(validate_morphism(partial).total_ok);
  HypergraphMorphism wild;
  wild.source = g;
  wild.target = g;
  wild.edge_map = {0, 1, 2, 99};
  CHECK_FALSE(validate_morphism(wild).total_ok);
}

TEST_CASE("inclusion-preserving maps can still increase distances") {
  // Three chained segments map into a target where the middle segment's
  // image is far from everything: inclusions hold vacuously, the distance
  // inequality does not.
  const Hypergraph g = Hypergraph::from_labels(
      {}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}, true);
  const Hypergraph h = Hypergraph::from_labels(
      {}, {{"x", "y"}, {"y", "z"}, {"z", "w"}, {"p", "q"}}, true);
  HypergraphMorphism f;
  f.source = g;
  f.target = h;
  // Resolve labels through explicit lookups to stay order-independent.
  auto target_index = [&h](const std::vector<VertexId>& labels) {
    std::vector<int> idx;
    for (const VertexId& l : labels)
      for (int v = 0; v < h.vertex_count(); ++v)
        if (h.vertex_label(v) == l) idx.push_back(v);
    std::sort(idx.begin(), idx.end());
    return h.find_edge(idx);
  };
  auto source_index = [&g](const std::vector<VertexId>& labels) {
    std::vector<int> idx;
    for (const VertexId& l : labels)
      for (int v = 0; v < g.vertex_count(); ++v)
        if (g.vertex_label(v) == l) idx.push_back(v);
    std::sort(idx.begin(), idx.end());
    return g.find_edge(idx);
  };
  f.edge_map.assign(static_cast<std::size_t>(g.edge_count()), -1);
  f.edge_map[static_cast<std::size_t>(source_index({"a", "b"}))] =
      target_index({"x", "y"});
  f.edge_map[static_cast<std::size_t>(source_index({"b", "c"}))] =
      target_index({"p", "q"});
  f.edge_map[static_cast<std::size_t>(source_index({"c", "d"}))] =
      target_index({"z", "w"});
  const MorphismReport r = validate_morphism(f);
  CHECK(r.total_ok);
  CHECK(r.inclusion_ok);
  CHECK(r.valid());
  CHECK_FALSE(r.distance_ok);
  CHECK(r.distance_witness.has_value());
}

TEST_CASE("induced chain maps commute with the boundary") {
  const Hypergraph g = support::segment_chain();
  check_chain_map(identity_morphism(g), 3);
  check_chain_map(left_inclusion(g, support::one_segment()), 3);
  support::Rng rng(40);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph base = support::random_hypergraph(rng, 4, 5);
    check_chain_map(random_morphism(rng, base, nullptr), 2);
  }
}

TEST_CASE("identity induces the identity on homology") {
  const Hypergraph h = support::segment_chain();
  const InducedHomology maps =
      induced_homology_map(identity_morphism(h), 3);
  CHECK_FALSE(maps.cells.empty());
  for (const auto& [grading, cell] : maps.cells) {
    REQUIRE(cell.map.rows() == cell.map.cols());
    CHECK((cell.map - IntMatrix::Identity(cell.map.rows(), cell.map.cols()))
              .isZero(0));
    CHECK(cell.row_divisors == cell.col_divisors);
  }
}

TEST_CASE("composition is functorial on chains and homology") {
  support::Rng rng(112233);
  int done = 0;
  while (done < 10) {
    const Hypergraph g = support::random_hypergraph(rng, 4, 4);
    support::VertexMapInstance inst1;
    const HypergraphMorphism f1 = random_morphism(rng, g, &inst1);
    const support::VertexMapInstance mid =
        support::random_vertex_collapse(rng, inst1.target);
    const HypergraphMorphism f2 =
        vertex_induced_morphism(inst1.target, mid.target, mid.vertex_map);
    const HypergraphMorphism composite = compose(f2, f1);
    CHECK(validate_morphism(composite).valid());

    // Chain level: (g after f)_# equals g_# after f_# at every grading.
    const std::int64_t l2max = 2;
    const InducedChain c1 = induced_chain_map(f1, l2max);
    const InducedChain c2 = induced_chain_map(f2, l2max);
    const InducedChain cc = induced_chain_map(composite, l2max);
    for (const auto& [grading, mcc] : cc.maps) {
      const IntMatrix* m1 = c1.at(grading.first, grading.second);
      const IntMatrix* m2 = c2.at(grading.first, grading.second);
      if (m1 != nullptr && m2 != nullptr) {
        CHECK((mcc - (*m2) * (*m1)).isZero(0));
      } else {
        // The middle hypergraph has no generators at this grading, so the
        // composite factors through zero.
        CHECK(mcc.isZero(0));
      }
    }

    // Homology level: compare cells wherever the composite has one.
    const InducedHomology h1 = induced_homology_map(f1, l2max);
    const InducedHomology h2 = induced_homology_map(f2, l2max);
    const InducedHomology hc = induced_homology_map(composite, l2max);
    for (const auto& [grading, cell] : hc.cells) {
      const auto it1 = h1.cells.find(grading);
      const auto it2 = h2.cells.find(grading);
      if (it1 != h1.cells.end() && it2 != h2.cells.end()) {
        const HomologyMapCell composed =
            compose_cells(it2->second, it1->second);
        CHECK(composed == cell);
      } else {
        // The middle group vanishes, so the composite map must be zero.
        CHECK(cell.map.isZero(0));
      }
    }
    ++done;
  }
}

TEST_CASE("homology of a disjoint union splits") {
  const DisjointUnionReport fixed = disjoint_union_check(
      support::segment_chain(), support::one_segment(), 3);
  CHECK(fixed.ok);
  support::Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph g = support::random_hypergraph(rng, 4, 4);
    const Hypergraph h = support::random_hypergraph(rng, 4, 4);
    const DisjointUnionReport r = disjoint_union_check(g, h, 2);
    CHECK(r.ok);
    if (!r.ok) MESSAGE(r.detail);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "maghyper/errors.hpp"
#include "maghyper/halflength.hpp"
#include "maghyper/hypergraph.hpp"
#include "maghyper/int.hpp"
#include "support.hpp"

using namespace maghyper;

TEST_CASE("arbitrary-precision integers behave like integers") {
  const Int a = 7, b = -3;
  CHECK(a + b == 4);
  CHECK(a * b == -21);
  CHECK(a - b == 10);
  CHECK((a % b) == 1);
  CHECK(a / b == -2);
  CHECK(Int("123456789123456789") * Int("1000000000000") ==
        Int("123456789123456789000000000000"));
  CHECK(abs(Int(-5)) == 5);
  CHECK(gcd(Int(12), Int(-18)) == 6);
  CHECK(lcm(Int(4), Int(6)) == 12);
  CHECK(div_exact(Int(42), Int(-7)) == -6);
  CHECK_THROWS_AS(div_exact(Int(5), Int(2)), InternalError);
  CHECK(Int(-42).str() == "-42");
  CHECK(Int(0).is_zero());
  CHECK(Int(-9).sign() == -1);
  CHECK(Int("9223372036854775807").to_int64() == 9223372036854775807LL);
}

TEST_CASE("integer matrices with Eigen expressions") {
  IntMatrix m(2, 2);
  m << 1, 2, 3, 4;
  const IntMatrix p = m * m;
  CHECK(p(0, 0) == 7);
  CHECK(p(1, 1) == 22);
  const IntMatrix t = m.transpose();
  CHECK(t(0, 1) == 3);
  CHECK((m - m).isZero(0));
  CHECK(IntMatrix::Identity(3, 3)(2, 2) == 1);
}

TEST_CASE("half-integer lengths") {
  const HalfLength h = HalfLength::half();
  CHECK(h.str() == "1/2");
  CHECK((h + h).str() == "1");
  CHECK((h + HalfLength::one()).str() == "3/2");
  CHECK(HalfLength::zero().str() == "0");
  CHECK(HalfLength::infinity().is_infinite());
  CHECK((h + HalfLength::infinity()).is_infinite());
  CHECK(HalfLength::from_half_units(5).str() == "5/2");
  CHECK(HalfLength::from_half_units(4).str() == "2");
}

TEST_CASE("hypergraph construction canonicalizes") {
  const Hypergraph h = Hypergraph::from_labels(
      {}, {{"b", "a"}, {"c"}, {"a"}}, true);
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 3);
  // Canonical order: size ascending, then lexicographic.
  CHECK(h.edge_labels(0) == std::vector<VertexId>{"a"});
  CHECK(h.edge_labels(1) == std::vector<VertexId>{"c"});
  CHECK(h.edge_labels(2) == std::vector<VertexId>{"a", "b"});
  CHECK(h.find_edge({0, 1}) == 2);
  CHECK(h.find_edge({2}) == 1);
  CHECK(h.find_edge({0, 2}) == -1);
}

TEST_CASE("hypergraph input validation") {
  CHECK_THROWS_AS(Hypergraph::from_labels({}, {{"a", "a b"}}, true),
                  InputError);  // whitespace in a label
  CHECK_THROWS_AS(Hypergraph::from_labels({}, {{""}}, true), InputError);
  CHECK_THROWS_AS(Hypergraph::from_labels({"a", "a"}, {{"a"}}, false),
                  InputError);  // duplicate vertex
  CHECK_THROWS_AS(Hypergraph::from_labels({"a"}, {{"b"}}, false),
                  InputError);  // edge vertex outside the universe
  CHECK_THROWS_AS(Hypergraph::from_labels({}, {{"a"}, {"a"}}, true),
                  InputError);  // duplicate edge
  CHECK_THROWS_AS(Hypergraph::from_labels({}, {{}}, true),
                  InputError);  // empty edge
  // A repeated vertex inside one edge is deduplicated, not an error.
  const Hypergraph h = Hypergraph::from_labels({}, {{"a", "a", "b"}}, true);
  CHECK(h.edge(0).size() == 2);
}

TEST_CASE("JSON round trip") {
  const Hypergraph h = support::fan();
  const std::string text = serialize(h);
  const Hypergraph back = parse(text);
  CHECK(back == h);
  const Hypergraph pretty_back = parse(serialize(h, true));
  CHECK(pretty_back == h);

  CHECK_THROWS_AS(parse("not json"), InputError);
  CHECK_THROWS_AS(parse("{}"), InputError);
  CHECK_THROWS_AS(parse("{\"hyperedges\": 3}"), InputError);
  CHECK_THROWS_AS(parse("{\"hyperedges\": [[]]}"), InputError);

  // Explicit vertex sets may include isolated vertices.
  const Hypergraph iso =
      parse("{\"vertices\": [\"a\", \"b\", \"z\"], "
            "\"hyperedges\": [[\"a\", \"b\"]]}");
  CHECK(iso.vertex_count() == 3);
  CHECK(iso.edge_count() == 1);
}

TEST_CASE("simplicial closure") {
  const Hypergraph chain = support::segment_chain();
  const Hypergraph closed = simplicial_closure(chain);
  // {0,1} and {1,2} contribute all nonempty subsets.
  CHECK(closed.edge_count() == 5);
  CHECK(closed.find_edge({2}) >= 0);
  CHECK(is_simplicial_complex(closed));
  CHECK_FALSE(is_simplicial_complex(chain));
  // Closure is idempotent.
  CHECK(simplicial_closure(closed) == closed);

  const Hypergraph full = support::full_two_simplex();
  CHECK(simplicial_closure(support::fan()) == full);
  CHECK(simplicial_closure(full) == full);

  // The cap aborts before materializing an oversized closure.
  const Hypergraph big = Hypergraph::from_labels(
      {}, {{"a", "b", "c", "d", "e"}}, true);
  CHECK_THROWS_AS(simplicial_closure(big, 7), CapError);
}

TEST_CASE("vertex augmentation adds all singletons") {
  const Hypergraph h =
      Hypergraph::from_labels({"a", "b", "c"}, {{"a", "b"}}, false);
  const Hypergraph a = augment_vertices(h);
  CHECK(a.edge_count() == 4);  // three singletons plus the segment
  CHECK(a.find_edge({2}) >= 0);
  // Already-augmented inputs are unchanged.
  CHECK(augment_vertices(a) == a);
}

TEST_CASE("disjoint union relabels on clashes") {
  const Hypergraph g = support::one_segment();
  const Hypergraph u = disjoint_union(g, g);
  CHECK(u.vertex_count() == 4);
  CHECK(u.edge_count() == 6);
  // No edge spans both sides.
  const Hypergraph h2 = support::segment_chain();
  const Hypergraph u2 = disjoint_union(h2, support::one_segment());
  CHECK(u2.edge_count() == h2.edge_count() + 3);
}

TEST_CASE("1-skeleton of a simplicial complex") {
  const Hypergraph full = support::full_two_simplex();
  const Hypergraph sk = skeleton_1(full);
  CHECK(sk.edge_count() == 6);  // three singletons, three segments
  for (int e = 0; e < sk.edge_count(); ++e)
    CHECK(sk.edge(e).size() <= 2);
  CHECK_THROWS_AS(skeleton_1(support::segment_chain()), InputError);
}

TEST_CASE("random hypergraphs round trip and closures are complexes") {
  support::Rng rng(20260816);
  for (int trial = 0; trial < 20; ++trial) {
    const Hypergraph h = support::random_hypergraph(rng, 5, 6);
    CHECK(parse(serialize(h)) == h);
    const Hypergraph c = simplicial_closure(h);
    CHECK(is_simplicial_complex(c));
    CHECK(simplicial_closure(c) == c);
  }
}

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "maghyper/homology.hpp"
#include "maghyper/hypergraph.hpp"

namespace maghyper {

/// The Cartesian product of two hypergraphs: vertices are pairs (u, v) with
/// label "(u,v)", hyperedges are {x} x t for a left vertex x and right
/// hyperedge t, and s x {y} symmetrically.
struct ProductHypergraph {
  Hypergraph hg;
  std::vector<std::pair<int, int>> vertex_factors;  ///< product vertex -> factor vertices
  std::map<std::pair<int, int>, int> vertex_index;  ///< inverse of the above

  int pair_vertex(int gv, int hv) const { return vertex_index.at({gv, hv}); }
};

ProductHypergraph cartesian_product(const Hypergraph& g, const Hypergraph& h);

/// Formal integer combination of simple (vertex-tuple) generators.
using SimpleChain = std::map<Tuple, Int>;

/// Boundary of a chain that is homogeneous of the given total length2, using
/// the supplied vertex distances. Faces that change the total length vanish.
SimpleChain chain_boundary(const IndexMatrix& vd2, const SimpleChain& chain,
                           std::int64_t length2);

/// Shared setup for exterior products over one pair of factors.
struct ProductContext {
  ProductHypergraph prod;
  IndexMatrix vd2_g, vd2_h, vd2_prod;  ///< doubled vertex distances
};

ProductContext product_context(const Hypergraph& g, const Hypergraph& h);

/// The exterior (shuffle) product of homogeneous simple chains of
/// homological degrees p and q: the signed sum over all (p, q)-shuffles of
/// the interleaved product tuples, with the Eilenberg-Zilber sign (parity of
/// the number of index pairs i < j where the right factor steps at i and the
/// left factor steps at j). Satisfies the graded Leibniz rule
/// boundary(a x b) = boundary(a) x b + (-1)^p a x boundary(b).
/// Throws InputError when a chain is not homogeneous of the stated degree.
SimpleChain exterior_product(const ProductContext& ctx, const SimpleChain& a,
                             int p, const SimpleChain& b, int q);

/// Tensor product and Tor of finitely generated abelian groups in canonical
/// form: tensor multiplies ranks and pairs torsion by gcd; Tor keeps only the
/// torsion gcd pairs.
HomologyGroup tensor_group(const HomologyGroup& a, const HomologyGroup& b);
HomologyGroup tor_group(const HomologyGroup& a, const HomologyGroup& b);

/// Kunneth verdict for the simple flavor: at each bigrading (n, length2),
/// rank MH_n(G x H) must equal the rank of the tensor layer; the torsion
/// multisets must also agree whenever every Tor term vanishes (otherwise the
/// extension is not determined and torsion is left unchecked).
struct KunnethCell {
  std::int64_t rank_lhs = 0;
  std::int64_t rank_rhs = 0;
  bool rank_ok = false;
  bool tor_trivial = false;
  bool torsion_checked = false;
  bool torsion_ok = true;
  std::vector<Int> torsion_lhs, torsion_rhs;
};

struct KunnethReport {
  bool ok = false;
  std::map<Grading, KunnethCell> cells;  ///< key = (n, length2)
};

KunnethReport kunneth_check(const Hypergraph& g, const Hypergraph& h,
                            int n_max, std::int64_t length2_max,
                            std::size_t cap = kDefaultGeneratorCap);

}  // namespace maghyper

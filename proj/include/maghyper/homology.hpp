#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "maghyper/hypergraph.hpp"
#include "maghyper/int.hpp"
#include "maghyper/metric.hpp"
#include "maghyper/poly.hpp"
#include "maghyper/snf.hpp"

namespace maghyper {

/// Which items the chain complex is built on:
///  - kHyperedge: tuples of hyperedges with the intercrossing distance,
///  - kSimple:    tuples of vertices with the singleton distance (every
///                vertex adjoined as a 0-hyperedge).
enum class Flavor { kHyperedge, kSimple };

std::string flavor_name(Flavor f);

/// A generator: a tuple of item indices (hyperedges or vertices by flavor)
/// whose consecutive entries are distinct and at finite distance.
using Tuple = std::vector<int>;

/// Bigrading key: (homological degree k, total length in half-units).
using Grading = std::pair<int, std::int64_t>;

using GeneratorMap = std::map<Grading, std::vector<Tuple>>;

inline constexpr std::size_t kDefaultGeneratorCap = 10'000'000;

/// The doubled item-distance matrix the flavor is built on (-1 = infinite):
/// hyperedge distances or vertex distances.
IndexMatrix flavor_distances(const Hypergraph& h, Flavor flavor);

/// Total doubled length of a tuple under the given distances, or -1 when the
/// tuple is not a generator (repeat, infinite step, or empty).
std::int64_t tuple_length2(const IndexMatrix& d2, const Tuple& t);

/// All generators with total length2 <= length2_max, grouped by (k, length2)
/// and listed in lexicographic tuple order. Depth-first extension pruned by
/// the remaining length budget. Throws CapError when the total generator
/// count would exceed cap.
GeneratorMap enumerate_generators(const Hypergraph& h, Flavor flavor,
                                  std::int64_t length2_max,
                                  std::size_t cap = kDefaultGeneratorCap);

/// Boundary matrix from level k to level k-1 within one length grading:
/// column(g) = sum_i (-1)^i [tuple with entry i dropped], keeping a face only
/// if the dropped tuple is again a generator of the same total length2.
IntMatrix boundary_matrix(const IndexMatrix& d2,
                          const std::vector<Tuple>& level_k,
                          const std::vector<Tuple>& level_km1,
                          std::int64_t length2);

/// One length grading of the magnitude chain complex: generator lists per
/// homological degree and the boundary matrices between them. Construction
/// verifies boundary-of-boundary = 0 and throws InternalError otherwise.
struct GradedComplex {
  Flavor flavor{};
  std::int64_t length2 = 0;
  std::vector<std::vector<Tuple>> levels;  ///< index k; trailing level nonempty
  std::vector<IntMatrix> boundaries;  ///< [k]: levels[k] -> levels[k-1]; [0] has 0 rows

  int k_max() const { return static_cast<int>(levels.size()) - 1; }
};

GradedComplex build_graded_complex(const IndexMatrix& d2,
                                   const GeneratorMap& gens, Flavor flavor,
                                   std::int64_t length2);

/// A finitely generated abelian group in canonical form.
struct HomologyGroup {
  std::int64_t rank = 0;
  std::vector<Int> torsion;  ///< entries > 1, each dividing the next

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const HomologyGroup& a, const HomologyGroup& b) {
    return !(a == b);
  }
  std::string str() const;  ///< e.g. "Z^3 + Z/2 + Z/4", "0"
};

/// Canonical form (divisor chain) from an arbitrary multiset of torsion
/// orders, via prime factorization.
HomologyGroup canonical_group(std::int64_t rank, std::vector<Int> torsion);

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b);

/// Bigraded homology. Only nonzero cells are stored; every stored cell is
/// complete (the enumeration bound k <= length2 for the hyperedge flavor and
/// 2k <= length2 for the simple flavor guarantees the complex at each stored
/// grading was fully enumerated).
struct HomologyTable {
  Flavor flavor{};
  std::int64_t length2_max = 0;
  std::map<Grading, HomologyGroup> entries;

  HomologyGroup at(int k, std::int64_t length2) const;
};

/// Homology of every grading length2 <= length2_max:
/// MH_k = ker boundary_k / im boundary_{k+1}, rank and torsion read off the
/// Smith normal forms. Gradings are computed concurrently when the
/// MAGHYPER_THREADS environment variable allows more than one worker.
HomologyTable homology_table(const Hypergraph& h, Flavor flavor,
                             std::int64_t length2_max,
                             std::size_t cap = kDefaultGeneratorCap);

/// Euler characteristic identity per grading (hyperedge flavor): the
/// alternating rank sum at length2 = 2l must equal the x^{length2}
/// coefficient of the magnitude series.
struct EulerRow {
  std::int64_t length2 = 0;
  std::int64_t chi = 0;
  Int coeff;
  bool ok = false;
};
struct EulerReport {
  bool ok = false;
  std::vector<EulerRow> rows;
};
EulerReport euler_check(const Hypergraph& h, std::int64_t length2_max,
                        std::size_t cap = kDefaultGeneratorCap);

/// Structural facts in low degree (hyperedge flavor): MH_{0,0} is free on
/// the hyperedges and MH at (k=1, length2=1) is free on the ordered proper
/// inclusion pairs, with exactly those tuples as basis.
struct StructuralReport {
  bool ok = false;
  std::int64_t edge_count = 0;
  std::int64_t inclusion_pairs = 0;
  std::string detail;  ///< diagnosis when not ok
};
StructuralReport structural_checks(const Hypergraph& h);

/// Presentation of one homology group MH_k = ker d_k / im d_{k+1} explicit
/// enough to express induced maps:
///  - kernel: Z-basis of ker d_k (columns),
///  - transform: unimodular change of kernel coordinates in which the
///    relation lattice im d_{k+1} becomes diagonal,
///  - divisors: per presentation coordinate, 0 = free, 1 = killed,
///    d > 1 = torsion Z/d.
struct HomologyBasis {
  IntMatrix kernel;
  SmithResult kernel_snf;  ///< of the kernel matrix, for coordinate solves
  IntMatrix transform;
  IntMatrix transform_inv;
  std::vector<Int> divisors;

  HomologyGroup group() const;
};

HomologyBasis homology_basis(const IntMatrix& boundary_k,
                             const IntMatrix& boundary_k1);

/// Presentation coordinates of a cycle z (a vector over level k). Throws
/// InternalError if z is not in the kernel lattice.
IntVector cycle_coords(const HomologyBasis& basis, const IntVector& z);

}  // namespace maghyper

#include "maghyper/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <sstream>
#include <utility>

#include "maghyper/errors.hpp"
#include "maghyper/magnitude.hpp"

namespace maghyper {

std::string flavor_name(Flavor f) {
  return f == Flavor::kHyperedge ? "hyperedge" : "simple";
}

IndexMatrix flavor_distances(const Hypergraph& h, Flavor flavor) {
  return flavor == Flavor::kHyperedge ? distance_matrix(h).d2
                                      : vertex_distance_matrix(h).d2;
}

std::int64_t tuple_length2(const IndexMatrix& d2, const Tuple& t) {
  if (t.empty()) return -1;
  const int n = static_cast<int>(d2.rows());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0 || t[i] >= n) return -1;
    if (i == 0) continue;
    if (t[i] == t[i - 1]) return -1;
    const std::int64_t step = d2(t[i - 1], t[i]);
    if (step < 0) return -1;
    total += step;
  }
  return total;
}

namespace {

struct EnumContext {
  const IndexMatrix& d2;
  std::int64_t length2_max;
  std::size_t cap;
  std::size_t total = 0;
  Tuple current;
  GeneratorMap out;

  void record(std::int64_t len2) {
    if (++total > cap) {
      throw CapError("generator enumeration exceeds cap of " +
                     std::to_string(cap));
    }
    out[{static_cast<int>(current.size()) - 1, len2}].push_back(current);
  }

  void extend(int last, std::int64_t len2) {
    record(len2);
    const int n = static_cast<int>(d2.rows());
    for (int j = 0; j < n; ++j) {
      if (j == last) continue;
      const std::int64_t step = d2(last, j);
      if (step < 0 || len2 + step > length2_max) continue;
      current.push_back(j);
      extend(j, len2 + step);
      current.pop_back();
    }
  }
};

bool all_zero(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

GeneratorMap enumerate_generators(const Hypergraph& h, Flavor flavor,
                                  std::int64_t length2_max, std::size_t cap) {
  if (length2_max < 0) throw InputError("length bound must be >= 0");
  const IndexMatrix d2 = flavor_distances(h, flavor);
  EnumContext ctx{d2, length2_max, cap};
  const int n = static_cast<int>(d2.rows());
  for (int i = 0; i < n; ++i) {
    ctx.current = {i};
    ctx.extend(i, 0);
  }
  return std::move(ctx.out);
}

IntMatrix boundary_matrix(const IndexMatrix& d2,
                          const std::vector<Tuple>& level_k,
                          const std::vector<Tuple>& level_km1,
                          std::int64_t length2) {
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(level_km1.size()),
                                static_cast<Eigen::Index>(level_k.size()));
  std::map<Tuple, int> row;
  for (int i = 0; i < static_cast<int>(level_km1.size()); ++i) {
    row.emplace(level_km1[i], i);
  }
  for (int c = 0; c < static_cast<int>(level_k.size()); ++c) {
    const Tuple& t = level_k[c];
    Tuple face(t.size() - 1);
    for (std::size_t drop = 0; drop < t.size(); ++drop) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i != drop) face[w++] = t[i];
      }
      if (tuple_length2(d2, face) != length2) continue;
      const auto it = row.find(face);
      if (it == row.end()) {
        throw InternalError("boundary face missing from enumeration");
      }
      m(it->second, c) += (drop % 2 == 0) ? Int(1) : Int(-1);
    }
  }
  return m;
}

GradedComplex build_graded_complex(const IndexMatrix& d2,
                                   const GeneratorMap& gens, Flavor flavor,
                                   std::int64_t length2) {
  GradedComplex c;
  c.flavor = flavor;
  c.length2 = length2;

  int k_top = -1;
  for (const auto& [key, list] : gens) {
    if (key.second == length2 && !list.empty()) k_top = std::max(k_top, key.first);
  }
  if (k_top < 0) return c;  // nothing in this grading

  c.levels.resize(k_top + 1);
  for (int k = 0; k <= k_top; ++k) {
    const auto it = gens.find({k, length2});
    if (it != gens.end()) c.levels[k] = it->second;
  }

  c.boundaries.resize(k_top + 1);
  c.boundaries[0] =
      IntMatrix::Zero(0, static_cast<Eigen::Index>(c.levels[0].size()));
  for (int k = 1; k <= k_top; ++k) {
    c.boundaries[k] =
        boundary_matrix(d2, c.levels[k], c.levels[k - 1], length2);
  }
  for (int k = 2; k <= k_top; ++k) {
    if (!all_zero(c.boundaries[k - 1] * c.boundaries[k])) {
      throw InternalError("boundary of boundary is nonzero at k=" +
                          std::to_string(k) +
                          ", length2=" + std::to_string(length2));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Abelian group bookkeeping

namespace {

std::map<Int, int> factorize(Int n) {
  std::map<Int, int> out;
  Int p(2);
  while (p * p <= n) {
    while ((n % p).is_zero()) {
      ++out[p];
      n = n / p;
    }
    p += (p == Int(2)) ? 1 : 2;
  }
  if (n > Int(1)) ++out[n];
  return out;
}

}  // namespace

HomologyGroup canonical_group(std::int64_t rank, std::vector<Int> torsion) {
  std::map<Int, std::vector<int>> by_prime;  // prime -> exponents, descending
  for (const Int& t : torsion) {
    if (t <= Int(1)) throw InternalError("torsion order must exceed 1");
    for (const auto& [p, e] : factorize(t)) by_prime[p].push_back(e);
  }
  std::size_t chain_len = 0;
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    chain_len = std::max(chain_len, exps.size());
  }
  HomologyGroup g;
  g.rank = rank;
  g.torsion.assign(chain_len, Int(1));
  for (const auto& [p, exps] : by_prime) {
    for (std::size_t j = 0; j < exps.size(); ++j) {
      // j-th largest exponent lands in the j-th divisor from the end.
      Int power(1);
      for (int e = 0; e < exps[j]; ++e) power *= p;
      g.torsion[chain_len - 1 - j] *= power;
    }
  }
  return g;
}

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
  std::vector<Int> torsion = a.torsion;
  torsion.insert(torsion.end(), b.torsion.begin(), b.torsion.end());
  return canonical_group(a.rank + b.rank, std::move(torsion));
}

std::string HomologyGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.str();
    first = false;
  }
  return os.str();
}

HomologyGroup HomologyTable::at(int k, std::int64_t length2) const {
  const auto it = entries.find({k, length2});
  return it == entries.end() ? HomologyGroup{} : it->second;
}

// ---------------------------------------------------------------------------
// homology_table

namespace {

std::vector<std::pair<Grading, HomologyGroup>> grading_homology(
    const IndexMatrix& d2, const GeneratorMap& gens, Flavor flavor,
    std::int64_t length2) {
  std::vector<std::pair<Grading, HomologyGroup>> out;
  const GradedComplex c = build_graded_complex(d2, gens, flavor, length2);
  if (c.levels.empty()) return out;

  std::vector<SmithResult> snf(c.boundaries.size());
  for (std::size_t k = 0; k < c.boundaries.size(); ++k) {
    snf[k] = smith_normal_form(c.boundaries[k]);
  }
  for (int k = 0; k <= c.k_max(); ++k) {
    const std::int64_t n_k = static_cast<std::int64_t>(c.levels[k].size());
    const std::int64_t kernel_dim = n_k - snf[k].rank;
    HomologyGroup g;
    if (k + 1 <= c.k_max()) {
      g.rank = kernel_dim - snf[k + 1].rank;
      for (const Int& d : snf[k + 1].divisors) {
        if (d > Int(1)) g.torsion.push_back(d);
      }
    } else {
      g.rank = kernel_dim;
    }
    if (g.rank < 0) throw InternalError("negative homology rank");
    if (!g.is_trivial()) out.emplace_back(Grading{k, length2}, g);
  }
  return out;
}

int worker_count() {
  if (const char* env = std::getenv("MAGHYPER_THREADS")) {
    const int n = std::atoi(env);
    if (n > 1) return n;
  }
  return 1;
}

}  // namespace

HomologyTable homology_table(const Hypergraph& h, Flavor flavor,
                             std::int64_t length2_max, std::size_t cap) {
  if (length2_max < 0) throw InputError("length bound must be >= 0");
  const IndexMatrix d2 = flavor_distances(h, flavor);
  const GeneratorMap gens = enumerate_generators(h, flavor, length2_max, cap);

  HomologyTable table;
  table.flavor = flavor;
  table.length2_max = length2_max;

  const int gradings = static_cast<int>(length2_max) + 1;
  std::vector<std::vector<std::pair<Grading, HomologyGroup>>> results(
      gradings);

  const int workers = std::min(worker_count(), gradings);
  if (workers <= 1) {
    for (int l2 = 0; l2 < gradings; ++l2) {
      results[l2] = grading_homology(d2, gens, flavor, l2);
    }
  } else {
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w] {
        for (int l2 = w; l2 < gradings; l2 += workers) {
          results[l2] = grading_homology(d2, gens, flavor, l2);
        }
      }));
    }
    for (auto& f : futures) f.get();  // rethrows worker exceptions
  }

  for (const auto& per_grading : results) {
    for (const auto& [key, group] : per_grading) table.entries.emplace(key, group);
  }
  return table;
}

EulerReport euler_check(const Hypergraph& h, std::int64_t length2_max,
                        std::size_t cap) {
  const HomologyTable table =
      homology_table(h, Flavor::kHyperedge, length2_max, cap);
  const HalfSeries series =
      magnitude_series(h, static_cast<int>(length2_max));

  EulerReport report;
  report.ok = true;
  for (std::int64_t l2 = 0; l2 <= length2_max; ++l2) {
    EulerRow row;
    row.length2 = l2;
    // Hyperedge flavor: k never exceeds length2, so the sum below is total.
    for (int k = 0; k <= static_cast<int>(l2); ++k) {
      const std::int64_t r = table.at(k, l2).rank;
      row.chi += (k % 2 == 0) ? r : -r;
    }
    row.coeff = series.coeffs[static_cast<std::size_t>(l2)];
    row.ok = Int(row.chi) == row.coeff;
    report.ok = report.ok && row.ok;
    report.rows.push_back(row);
  }
  return report;
}

StructuralReport structural_checks(const Hypergraph& h) {
  StructuralReport report;
  report.edge_count = h.edge_count();

  const DistanceMatrix dm = distance_matrix(h);
  std::vector<Tuple> expected_pairs;
  for (int i = 0; i < dm.size; ++i) {
    for (int j = 0; j < dm.size; ++j) {
      if (i != j && dm.d2(i, j) == 1) expected_pairs.push_back({i, j});
    }
  }
  report.inclusion_pairs = static_cast<std::int64_t>(expected_pairs.size());

  const HomologyTable table = homology_table(h, Flavor::kHyperedge, 1);
  const GeneratorMap gens = enumerate_generators(h, Flavor::kHyperedge, 1);

  std::ostringstream detail;
  bool ok = true;

  const HomologyGroup mh00 = table.at(0, 0);
  if (mh00.rank != report.edge_count || !mh00.torsion.empty()) {
    ok = false;
    detail << "MH at (k=0, length2=0) is " << mh00.str() << ", expected Z^"
           << report.edge_count << "; ";
  }
  std::vector<Tuple> expected_edges;
  for (int e = 0; e < h.edge_count(); ++e) expected_edges.push_back({e});
  const auto it0 = gens.find({0, 0});
  if (it0 == gens.end() || it0->second != expected_edges) {
    ok = false;
    detail << "basis of MH at (0,0) is not the hyperedge list; ";
  }

  const HomologyGroup mh1 = table.at(1, 1);
  if (mh1.rank != report.inclusion_pairs || !mh1.torsion.empty()) {
    ok = false;
    detail << "MH at (k=1, length2=1) is " << mh1.str() << ", expected Z^"
           << report.inclusion_pairs << "; ";
  }
  const auto it1 = gens.find({1, 1});
  std::vector<Tuple> got_pairs =
      it1 == gens.end() ? std::vector<Tuple>{} : it1->second;
  if (got_pairs != expected_pairs) {
    ok = false;
    detail << "basis of MH at (1, length2=1) is not the ordered "
              "proper-inclusion pairs; ";
  }

  report.ok = ok;
  report.detail = detail.str();
  return report;
}

// ---------------------------------------------------------------------------
// Presentations for induced maps

HomologyBasis homology_basis(const IntMatrix& boundary_k,
                             const IntMatrix& boundary_k1) {
  if (boundary_k.cols() != boundary_k1.rows()) {
    throw InternalError("homology_basis: boundary shapes do not compose");
  }
  HomologyBasis basis;
  const SmithResult sk = smith_normal_form(boundary_k);
  basis.kernel = kernel_basis(sk);
  basis.kernel_snf = smith_normal_form(basis.kernel);

  const Eigen::Index m = basis.kernel.cols();
  IntMatrix relations(m, boundary_k1.cols());
  for (Eigen::Index c = 0; c < boundary_k1.cols(); ++c) {
    // Every boundary image is a cycle, so the solve is exact.
    relations.col(c) = solve_integer(basis.kernel_snf, boundary_k1.col(c));
  }
  const SmithResult rs = smith_normal_form(relations);
  basis.transform = rs.u;
  basis.transform_inv = rs.u_inv;
  basis.divisors.assign(static_cast<std::size_t>(m), Int(0));
  for (int i = 0; i < rs.rank; ++i) basis.divisors[i] = rs.divisors[i];
  return basis;
}

HomologyGroup HomologyBasis::group() const {
  HomologyGroup g;
  for (const Int& d : divisors) {
    if (d.is_zero()) {
      ++g.rank;
    } else if (d > Int(1)) {
      g.torsion.push_back(d);
    }
  }
  return g;
}

IntVector cycle_coords(const HomologyBasis& basis, const IntVector& z) {
  return basis.transform * solve_integer(basis.kernel_snf, z);
}

}  // namespace maghyper

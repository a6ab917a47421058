#include "maghyper/product.hpp"

#include <functional>
#include <set>
#include <utility>

#include "maghyper/errors.hpp"
#include "maghyper/metric.hpp"

namespace maghyper {

ProductHypergraph cartesian_product(const Hypergraph& g, const Hypergraph& h) {
  std::vector<VertexId> labels;
  labels.reserve(g.vertex_count() * h.vertex_count());
  for (int gv = 0; gv < g.vertex_count(); ++gv) {
    for (int hv = 0; hv < h.vertex_count(); ++hv) {
      labels.push_back("(" + g.vertex_label(gv) + "," + h.vertex_label(hv) +
                       ")");
    }
  }

  std::set<std::vector<VertexId>> edges;
  auto pair_label = [&](int gv, int hv) {
    return "(" + g.vertex_label(gv) + "," + h.vertex_label(hv) + ")";
  };
  for (int gv = 0; gv < g.vertex_count(); ++gv) {
    for (int he = 0; he < h.edge_count(); ++he) {
      std::vector<VertexId> e;
      for (int hv : h.edge(he)) e.push_back(pair_label(gv, hv));
      edges.insert(std::move(e));
    }
  }
  for (int ge = 0; ge < g.edge_count(); ++ge) {
    for (int hv = 0; hv < h.vertex_count(); ++hv) {
      std::vector<VertexId> e;
      for (int gv : g.edge(ge)) e.push_back(pair_label(gv, hv));
      edges.insert(std::move(e));
    }
  }

  ProductHypergraph out;
  out.hg = Hypergraph::from_labels(
      labels, std::vector<std::vector<VertexId>>(edges.begin(), edges.end()),
      false);

  out.vertex_factors.resize(out.hg.vertex_count());
  std::map<VertexId, std::pair<int, int>> by_label;
  for (int gv = 0; gv < g.vertex_count(); ++gv) {
    for (int hv = 0; hv < h.vertex_count(); ++hv) {
      by_label.emplace(pair_label(gv, hv), std::make_pair(gv, hv));
    }
  }
  for (int v = 0; v < out.hg.vertex_count(); ++v) {
    const auto factors = by_label.at(out.hg.vertex_label(v));
    out.vertex_factors[v] = factors;
    out.vertex_index.emplace(factors, v);
  }
  return out;
}

SimpleChain chain_boundary(const IndexMatrix& vd2, const SimpleChain& chain,
                           std::int64_t length2) {
  SimpleChain out;
  for (const auto& [tuple, coeff] : chain) {
    if (coeff.is_zero()) continue;
    if (tuple_length2(vd2, tuple) != length2) {
      throw InputError("chain is not homogeneous of the stated length");
    }
    Tuple face(tuple.size() - 1);
    for (std::size_t drop = 0; drop < tuple.size(); ++drop) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i != drop) face[w++] = tuple[i];
      }
      if (tuple_length2(vd2, face) != length2) continue;
      const Int term = (drop % 2 == 0) ? coeff : -coeff;
      auto [it, inserted] = out.emplace(face, term);
      if (!inserted) {
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

ProductContext product_context(const Hypergraph& g, const Hypergraph& h) {
  ProductContext ctx;
  ctx.prod = cartesian_product(g, h);
  ctx.vd2_g = vertex_distance_matrix(g).d2;
  ctx.vd2_h = vertex_distance_matrix(h).d2;
  ctx.vd2_prod = vertex_distance_matrix(ctx.prod.hg).d2;
  return ctx;
}

namespace {

/// Degree and common length2 of a homogeneous chain; throws on mixed input.
std::int64_t homogeneous_length2(const IndexMatrix& vd2, const SimpleChain& c,
                                 int degree) {
  std::int64_t length2 = -1;
  for (const auto& [tuple, coeff] : c) {
    if (coeff.is_zero()) continue;
    if (static_cast<int>(tuple.size()) != degree + 1) {
      throw InputError("chain mixes homological degrees");
    }
    const std::int64_t l2 = tuple_length2(vd2, tuple);
    if (l2 < 0) throw InputError("chain contains an invalid tuple");
    if (length2 >= 0 && l2 != length2) {
      throw InputError("chain mixes length gradings");
    }
    length2 = l2;
  }
  return length2;  // -1 for the zero chain
}

void enumerate_shuffles(int p, int q, std::vector<bool>& steps,
                        const std::function<void(const std::vector<bool>&, int)>& emit,
                        int sign_inversions = 0) {
  if (p == 0 && q == 0) {
    emit(steps, sign_inversions);
    return;
  }
  if (p > 0) {
    // A left step after the remaining q right steps... inversions counted
    // when a right step precedes a left step, so taking a LEFT step now adds
    // nothing; bookkeeping happens when a right step is taken before left
    // steps remain.
    steps.push_back(true);
    enumerate_shuffles(p - 1, q, steps, emit, sign_inversions);
    steps.pop_back();
  }
  if (q > 0) {
    // Taking a right step now puts it before the p remaining left steps:
    // p new (right-before-left) inversions.
    steps.push_back(false);
    enumerate_shuffles(p, q - 1, steps, emit, sign_inversions + p);
    steps.pop_back();
  }
}

}  // namespace

SimpleChain exterior_product(const ProductContext& ctx, const SimpleChain& a,
                             int p, const SimpleChain& b, int q) {
  const std::int64_t l2a = homogeneous_length2(ctx.vd2_g, a, p);
  const std::int64_t l2b = homogeneous_length2(ctx.vd2_h, b, q);
  SimpleChain out;
  if (l2a < 0 || l2b < 0) return out;  // zero factor

  std::vector<bool> steps;
  for (const auto& [ta, ca] : a) {
    for (const auto& [tb, cb] : b) {
      const Int coeff = ca * cb;
      enumerate_shuffles(
          p, q, steps,
          [&](const std::vector<bool>& shuffle, int inversions) {
            Tuple t;
            t.reserve(p + q + 1);
            std::size_t ia = 0, ib = 0;
            t.push_back(ctx.prod.pair_vertex(ta[0], tb[0]));
            for (bool left : shuffle) {
              if (left) {
                ++ia;
              } else {
                ++ib;
              }
              t.push_back(ctx.prod.pair_vertex(ta[ia], tb[ib]));
            }
            if (tuple_length2(ctx.vd2_prod, t) != l2a + l2b) {
              throw InternalError(
                  "shuffle tuple violates distance additivity");
            }
            const Int term =
                (inversions % 2 == 0) ? coeff : -coeff;
            auto [it, inserted] = out.emplace(std::move(t), term);
            if (!inserted) {
              it->second += term;
              if (it->second.is_zero()) out.erase(it);
            }
          });
    }
  }
  return out;
}

HomologyGroup tensor_group(const HomologyGroup& a, const HomologyGroup& b) {
  std::vector<Int> torsion;
  for (std::int64_t i = 0; i < b.rank; ++i) {
    torsion.insert(torsion.end(), a.torsion.begin(), a.torsion.end());
  }
  for (std::int64_t i = 0; i < a.rank; ++i) {
    torsion.insert(torsion.end(), b.torsion.begin(), b.torsion.end());
  }
  for (const Int& d : a.torsion) {
    for (const Int& e : b.torsion) {
      const Int g = gcd(d, e);
      if (g > Int(1)) torsion.push_back(g);
    }
  }
  return canonical_group(a.rank * b.rank, std::move(torsion));
}

HomologyGroup tor_group(const HomologyGroup& a, const HomologyGroup& b) {
  std::vector<Int> torsion;
  for (const Int& d : a.torsion) {
    for (const Int& e : b.torsion) {
      const Int g = gcd(d, e);
      if (g > Int(1)) torsion.push_back(g);
    }
  }
  return canonical_group(0, std::move(torsion));
}

KunnethReport kunneth_check(const Hypergraph& g, const Hypergraph& h,
                            int n_max, std::int64_t length2_max,
                            std::size_t cap) {
  const HomologyTable tg = homology_table(g, Flavor::kSimple, length2_max, cap);
  const HomologyTable th = homology_table(h, Flavor::kSimple, length2_max, cap);
  const ProductHypergraph prod = cartesian_product(g, h);
  const HomologyTable tp =
      homology_table(prod.hg, Flavor::kSimple, length2_max, cap);

  KunnethReport report;
  report.ok = true;
  for (int n = 0; n <= n_max; ++n) {
    for (std::int64_t l2 = 0; l2 <= length2_max; ++l2) {
      KunnethCell cell;
      HomologyGroup lhs;  // tensor layer
      HomologyGroup tor;  // Tor layer, degree shifted by one
      for (int ip = 0; ip <= n; ++ip) {
        for (std::int64_t la = 0; la <= l2; ++la) {
          lhs = direct_sum(
              lhs, tensor_group(tg.at(ip, la), th.at(n - ip, l2 - la)));
          if (ip <= n - 1) {
            tor = direct_sum(
                tor, tor_group(tg.at(ip, la), th.at(n - 1 - ip, l2 - la)));
          }
        }
      }
      const HomologyGroup rhs = tp.at(n, l2);

      cell.rank_lhs = lhs.rank;
      cell.rank_rhs = rhs.rank;
      cell.rank_ok = lhs.rank == rhs.rank;
      cell.tor_trivial = tor.is_trivial();
      cell.torsion_checked = cell.tor_trivial;
      cell.torsion_lhs = lhs.torsion;
      cell.torsion_rhs = rhs.torsion;
      cell.torsion_ok = !cell.torsion_checked || lhs.torsion == rhs.torsion;

      report.ok = report.ok && cell.rank_ok && cell.torsion_ok;
      report.cells.emplace(Grading{n, l2}, std::move(cell));
    }
  }
  return report;
}

}  // namespace maghyper

#include "maghyper/report.hpp"

namespace maghyper {

std::string half_label(std::int64_t half_units) {
  if (half_units < 0) return "inf";
  if (half_units % 2 == 0) return std::to_string(half_units / 2);
  return std::to_string(half_units) + "/2";
}

std::string grading_key(int k, std::int64_t length2) {
  return "(" + std::to_string(k) + "," + half_label(length2) + ")";
}

std::string dump_json(const nlohmann::json& j, bool pretty) {
  return j.dump(pretty ? 2 : -1) + "\n";
}

nlohmann::json distance_json(const Hypergraph& h, const DistanceMatrix& m) {
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 0; i < h.edge_count(); ++i) edges.push_back(h.edge_labels(i));

  nlohmann::json d = nlohmann::json::array();
  nlohmann::json delta = nlohmann::json::array();
  for (int i = 0; i < m.size; ++i) {
    nlohmann::json drow = nlohmann::json::array();
    nlohmann::json hrow = nlohmann::json::array();
    for (int j = 0; j < m.size; ++j) {
      drow.push_back(half_label(m.d2(i, j)));
      hrow.push_back(m.delta(i, j) < 0 ? "inf"
                                       : std::to_string(m.delta(i, j)));
    }
    d.push_back(drow);
    delta.push_back(hrow);
  }
  return {{"edges", edges}, {"d", d}, {"delta", delta}};
}

nlohmann::json series_json(const HalfSeries& s) {
  nlohmann::json out = nlohmann::json::array();
  for (int e = 0; e <= s.order; ++e) {
    out.push_back({{"q", half_label(e)}, {"c", s.coeffs[e].str()}});
  }
  return out;
}

namespace {

nlohmann::json poly_json(const HalfPoly& p) {
  nlohmann::json out = nlohmann::json::object();
  for (int e = 0; e <= p.degree(); ++e) {
    const Int c = p.coeff(e);
    if (!c.is_zero()) out[half_label(e)] = c.str();
  }
  return out;
}

}  // namespace

nlohmann::json rational_json(const RationalFn& r) {
  return {{"num", poly_json(r.num())}, {"den", poly_json(r.den())}};
}

nlohmann::json homology_json(const HomologyTable& t) {
  nlohmann::json out;
  out["flavor"] = flavor_name(t.flavor);
  out["lmax"] = half_label(t.length2_max);
  for (const auto& [key, group] : t.entries) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& d : group.torsion) torsion.push_back(d.to_int64());
    out[grading_key(key.first, key.second)] = {
        {"rank", group.rank}, {"torsion", torsion}, {"complete", true}};
  }
  return out;
}

nlohmann::json euler_json(const EulerReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const EulerRow& row : r.rows) {
    rows.push_back({{"l", half_label(row.length2)},
                    {"chi", std::to_string(row.chi)},
                    {"coeff", row.coeff.str()},
                    {"ok", row.ok}});
  }
  return {{"ok", r.ok}, {"rows", rows}};
}

nlohmann::json morphism_json(const MorphismReport& r) {
  nlohmann::json out;
  out["valid"] = r.valid();
  out["inclusion_ok"] = r.inclusion_ok;
  if (r.inclusion_witness) {
    out["inclusion_witness"] = {r.inclusion_witness->first,
                                r.inclusion_witness->second};
  }
  out["distance_ok"] = r.distance_ok;
  if (r.distance_witness) {
    out["distance_witness"] = {r.distance_witness->first,
                               r.distance_witness->second};
  }
  return out;
}

nlohmann::json induced_json(const MorphismReport& validation,
                            const InducedHomology& maps) {
  nlohmann::json out;
  out["morphism"] = morphism_json(validation);
  nlohmann::json cells = nlohmann::json::object();
  for (const auto& [key, cell] : maps.cells) {
    nlohmann::json matrix = nlohmann::json::array();
    for (Eigen::Index i = 0; i < cell.map.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < cell.map.cols(); ++j) {
        row.push_back(cell.map(i, j).str());
      }
      matrix.push_back(row);
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const Int& d : cell.row_divisors) rows.push_back(d.str());
    nlohmann::json cols = nlohmann::json::array();
    for (const Int& d : cell.col_divisors) cols.push_back(d.str());
    cells[grading_key(key.first, key.second)] = {{"matrix", matrix},
                                                 {"row_divisors", rows},
                                                 {"col_divisors", cols}};
  }
  out["cells"] = cells;
  return out;
}

nlohmann::json kunneth_json(const KunnethReport& r) {
  nlohmann::json cells = nlohmann::json::object();
  for (const auto& [key, cell] : r.cells) {
    nlohmann::json lhs_torsion = nlohmann::json::array();
    for (const Int& d : cell.torsion_lhs) lhs_torsion.push_back(d.to_int64());
    nlohmann::json rhs_torsion = nlohmann::json::array();
    for (const Int& d : cell.torsion_rhs) rhs_torsion.push_back(d.to_int64());
    cells[grading_key(key.first, key.second)] = {
        {"rank_lhs", cell.rank_lhs},       {"rank_rhs", cell.rank_rhs},
        {"rank_ok", cell.rank_ok},         {"tor_trivial", cell.tor_trivial},
        {"torsion_checked", cell.torsion_checked},
        {"torsion_ok", cell.torsion_ok},   {"torsion_lhs", lhs_torsion},
        {"torsion_rhs", rhs_torsion}};
  }
  return {{"ok", r.ok}, {"cells", cells}};
}

}  // namespace maghyper

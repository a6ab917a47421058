#include "maghyper/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

#include "json.hpp"

namespace maghyper {

namespace {

void validate_label(const VertexId& label) {
  if (label.empty()) throw InputError("vertex label must be nonempty");
  for (unsigned char c : label) {
    if (std::isspace(c)) {
      throw InputError("vertex label '" + label + "' contains whitespace");
    }
  }
}

/// Canonical edge order: size ascending, then lexicographic. Because the
/// vertex table is sorted by label, comparing index vectors lexicographically
/// is the same as comparing label sequences.
bool canonical_edge_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Hypergraph Hypergraph::from_labels(
    const std::vector<VertexId>& vertices,
    const std::vector<std::vector<VertexId>>& edges, bool infer_vertices) {
  Hypergraph out;

  std::set<VertexId> universe;
  if (infer_vertices) {
    for (const auto& e : edges) {
      for (const auto& v : e) universe.insert(v);
    }
  } else {
    for (const auto& v : vertices) {
      if (!universe.insert(v).second) {
        throw InputError("duplicate vertex label '" + v + "'");
      }
    }
  }
  for (const auto& v : universe) validate_label(v);
  out.vertices_.assign(universe.begin(), universe.end());

  std::map<VertexId, int> index;
  for (int i = 0; i < static_cast<int>(out.vertices_.size()); ++i) {
    index.emplace(out.vertices_[i], i);
  }

  std::set<std::vector<int>> seen;
  for (const auto& e : edges) {
    if (e.empty()) throw InputError("empty hyperedge");
    std::vector<int> ids;
    ids.reserve(e.size());
    for (const auto& v : e) {
      auto it = index.find(v);
      if (it == index.end()) {
        throw InputError("edge vertex '" + v +
                         "' missing from declared vertex list");
      }
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (!seen.insert(ids).second) {
      throw InputError("duplicate hyperedge");
    }
  }
  out.edges_.assign(seen.begin(), seen.end());
  std::sort(out.edges_.begin(), out.edges_.end(), canonical_edge_less);
  return out;
}

std::vector<VertexId> Hypergraph::edge_labels(int i) const {
  std::vector<VertexId> out;
  out.reserve(edge(i).size());
  for (int v : edge(i)) out.push_back(vertices_.at(v));
  return out;
}

int Hypergraph::find_edge(const std::vector<int>& sorted_vertices) const {
  for (int i = 0; i < edge_count(); ++i) {
    if (edges_[i] == sorted_vertices) return i;
  }
  return -1;
}

Hypergraph parse(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("hyperedges") ||
      !j["hyperedges"].is_array()) {
    throw InputError("expected an object with a \"hyperedges\" array");
  }

  std::vector<std::vector<VertexId>> edges;
  for (const auto& e : j["hyperedges"]) {
    if (!e.is_array()) throw InputError("hyperedge must be an array of labels");
    std::vector<VertexId> labels;
    for (const auto& v : e) {
      if (!v.is_string()) throw InputError("vertex label must be a string");
      labels.push_back(v.get<std::string>());
    }
    edges.push_back(std::move(labels));
  }

  std::vector<VertexId> vertices;
  bool infer = true;
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) {
      throw InputError("\"vertices\" must be an array of labels");
    }
    infer = false;
    for (const auto& v : j["vertices"]) {
      if (!v.is_string()) throw InputError("vertex label must be a string");
      vertices.push_back(v.get<std::string>());
    }
  }
  return Hypergraph::from_labels(vertices, edges, infer);
}

std::string serialize(const Hypergraph& h, bool pretty) {
  nlohmann::json j;
  j["vertices"] = h.vertex_labels();
  auto edges = nlohmann::json::array();
  for (int i = 0; i < h.edge_count(); ++i) edges.push_back(h.edge_labels(i));
  j["hyperedges"] = edges;
  return j.dump(pretty ? 2 : -1) + "\n";
}

Hypergraph simplicial_closure(const Hypergraph& h, std::size_t cap) {
  std::set<std::vector<int>> subsets;
  for (const auto& e : h.edges()) {
    const std::size_t n = e.size();
    // Hyperedges are small in practice, but guard the shift anyway.
    if (n >= 63) throw CapError("simplicial closure: hyperedge too large");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> sub;
      for (std::size_t b = 0; b < n; ++b) {
        if (mask & (std::uint64_t{1} << b)) sub.push_back(e[b]);
      }
      subsets.insert(std::move(sub));
      if (subsets.size() > cap) {
        throw CapError("simplicial closure exceeds cap of " +
                       std::to_string(cap) + " edges");
      }
    }
  }
  std::vector<std::vector<VertexId>> label_edges;
  label_edges.reserve(subsets.size());
  for (const auto& s : subsets) {
    std::vector<VertexId> labels;
    for (int v : s) labels.push_back(h.vertex_label(v));
    label_edges.push_back(std::move(labels));
  }
  return Hypergraph::from_labels(h.vertex_labels(), label_edges, false);
}

Hypergraph augment_vertices(const Hypergraph& h) {
  std::set<std::vector<VertexId>> dedup;
  for (int i = 0; i < h.edge_count(); ++i) dedup.insert(h.edge_labels(i));
  for (const auto& v : h.vertex_labels()) dedup.insert({v});
  std::vector<std::vector<VertexId>> edges(dedup.begin(), dedup.end());
  return Hypergraph::from_labels(h.vertex_labels(), edges, false);
}

Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h) {
  const std::set<VertexId> left(g.vertex_labels().begin(),
                                g.vertex_labels().end());
  std::string prefix = "_";
  for (;;) {
    bool clash = false;
    for (const auto& v : h.vertex_labels()) {
      if (left.count(prefix + v)) {
        clash = true;
        break;
      }
    }
    if (!clash) break;
    prefix += "_";
  }

  std::vector<VertexId> vertices(g.vertex_labels());
  for (const auto& v : h.vertex_labels()) vertices.push_back(prefix + v);

  std::vector<std::vector<VertexId>> edges;
  for (int i = 0; i < g.edge_count(); ++i) edges.push_back(g.edge_labels(i));
  for (int i = 0; i < h.edge_count(); ++i) {
    std::vector<VertexId> e;
    for (const auto& v : h.edge_labels(i)) e.push_back(prefix + v);
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_labels(vertices, edges, false);
}

bool is_simplicial_complex(const Hypergraph& h) {
  std::set<std::vector<int>> present(h.edges().begin(), h.edges().end());
  for (const auto& e : h.edges()) {
    const std::size_t n = e.size();
    if (n >= 63) return false;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> sub;
      for (std::size_t b = 0; b < n; ++b) {
        if (mask & (std::uint64_t{1} << b)) sub.push_back(e[b]);
      }
      if (!present.count(sub)) return false;
    }
  }
  return true;
}

Hypergraph skeleton_1(const Hypergraph& k) {
  if (!is_simplicial_complex(k)) {
    throw InputError("skeleton_1: input is not closed under nonempty subsets");
  }
  std::vector<std::vector<VertexId>> edges;
  for (int i = 0; i < k.edge_count(); ++i) {
    if (k.edge(i).size() <= 2) edges.push_back(k.edge_labels(i));
  }
  return Hypergraph::from_labels(k.vertex_labels(), edges, false);
}

}  // namespace maghyper

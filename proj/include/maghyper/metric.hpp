#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "maghyper/halflength.hpp"
#include "maghyper/hypergraph.hpp"

namespace maghyper {

/// Matrix of signed 64-bit entries; -1 encodes "infinite"/"none" throughout
/// this module, every other value is a nonnegative count (half-units or hops).
using IndexMatrix =
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Length of the single step between two intersecting hyperedges:
/// 0 if equal, 1/2 if one properly contains the other, 1 if they merely
/// overlap. Throws InputError when the edges are disjoint (undefined step).
/// Inputs are sorted vertex-index vectors as stored by Hypergraph.
HalfLength step_length(const std::vector<int>& s, const std::vector<int>& t);

/// A concrete path in the intersection structure of a hypergraph.
struct PathWitness {
  std::vector<int> edges;  ///< hyperedge indices, consecutive ones intersect
  HalfLength length;       ///< sum of the step lengths along the path
  int height = 0;          ///< number of steps = edges.size() - 1
};

/// Sums the step lengths along an explicit hyperedge-index sequence.
/// Throws InputError if the sequence is empty, an index is out of range, or
/// some consecutive pair is disjoint (so the sequence is not a path).
PathWitness path_length(const Hypergraph& h, const std::vector<int>& edges);

/// All-pairs distances between the hyperedges of a hypergraph.
///
/// d2 holds the intercrossing distance in doubled half-units, delta the
/// minimum hop count; -1 encodes an infinite entry (different components).
/// The remaining matrices let callers reconstruct witnesses:
///   next_d[i][j]   = successor of i on a d-minimal path to j (-1 if none),
///   d_hops[i][j]   = hop count of that d-minimal path (ties broken toward
///                    fewer hops),
///   next_delta / delta_len2 mirror this for delta-minimal paths (ties broken
///                    toward shorter length).
struct DistanceMatrix {
  int size = 0;
  IndexMatrix d2;
  IndexMatrix delta;
  IndexMatrix next_d;
  IndexMatrix d_hops;
  IndexMatrix next_delta;
  IndexMatrix delta_len2;

  HalfLength d_at(int i, int j) const {
    const std::int64_t v = d2(i, j);
    return v < 0 ? HalfLength::infinity() : HalfLength::from_half_units(v);
  }
  HalfLength delta_at(int i, int j) const {
    const std::int64_t v = delta(i, j);
    return v < 0 ? HalfLength::infinity()
                 : HalfLength::from_half_units(2 * v);
  }
  bool finite(int i, int j) const { return d2(i, j) >= 0; }
};

/// Exact all-pairs computation on the hyperedge intersection graph.
/// d minimizes total length with hop count as tie-breaker; delta minimizes
/// hop count with total length as tie-breaker.
DistanceMatrix distance_matrix(const Hypergraph& h);

/// Witness reconstruction from the successor matrices. Both throw InputError
/// when the pair is in different components (no path exists).
PathWitness d_witness(const DistanceMatrix& m, const Hypergraph& h, int i,
                      int j);
PathWitness delta_witness(const DistanceMatrix& m, const Hypergraph& h, int i,
                          int j);

/// Distances between vertices: distance_matrix of the hypergraph with every
/// vertex adjoined as a singleton hyperedge, restricted to the singleton
/// rows/columns and indexed in vertex order. Only d2 and delta are populated;
/// the witness matrices are left empty. Vertex distances are always whole:
/// a half-integral value would contradict the closure/skeleton reduction, so
/// one triggers an InternalError.
DistanceMatrix vertex_distance_matrix(const Hypergraph& h);

}  // namespace maghyper

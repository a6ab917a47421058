#pragma once

#include <vector>

#include "maghyper/hypergraph.hpp"
#include "maghyper/metric.hpp"
#include "maghyper/poly.hpp"

namespace maghyper {

/// Z-matrix of a hypergraph: entry (s, t) is x^{2 d(s,t)} in the canonical
/// hyperedge order, with infinite distance contributing the zero polynomial.
/// The diagonal is 1 and the matrix is symmetric.
PolyMatrix z_matrix(const Hypergraph& h);

/// The weighting: unique w with Z w = (1, ..., 1), one rational function per
/// hyperedge. The system is always solvable since det Z has constant term 1;
/// a singular failure therefore surfaces as InternalError.
std::vector<RationalFn> weighting(const Hypergraph& h);

/// Magnitude as a canonical reduced rational function: the sum of the
/// weighting entries (equivalently, of all entries of Z^{-1}).
RationalFn magnitude_rational(const Hypergraph& h);

/// Magnitude expanded as a power series in x = sqrt(q) through x^{order}.
HalfSeries magnitude_series(const Hypergraph& h, int order);

/// Independent evaluation of the magnitude series via the alternating sum
/// over tuples of pairwise-adjacent-distinct hyperedges (the Neumann
/// expansion of Z^{-1} = (I + N)^{-1}), computed by dynamic programming over
/// (last hyperedge, accumulated x-degree). Exact through x^{order} because
/// every step between distinct hyperedges costs x-degree >= 1.
HalfSeries neumann_magnitude(const Hypergraph& h, int order);

}  // namespace maghyper

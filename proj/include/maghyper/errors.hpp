#pragma once

#include <stdexcept>
#include <string>

namespace maghyper {

/// Invalid user-supplied data: malformed JSON, an ill-formed hypergraph or
/// morphism, or a query outside the defined domain (e.g. step length of
/// disjoint hyperedges, series expansion at a pole).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap was exceeded (simplicial closure size, chain
/// generator count). Signals combinatorial blow-up rather than a wrong input.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant that must hold by theorem failed at runtime. Reaching this is
/// a bug in the library, never a property of the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace maghyper

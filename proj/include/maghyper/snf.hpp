#pragma once

#include <vector>

#include "maghyper/int.hpp"

namespace maghyper {

/// Smith normal form of an integer matrix A: unimodular U, V with
/// D = U * A * V diagonal, diagonal entries d_1 | d_2 | ... | d_r > 0
/// followed by zeros. The inverses are tracked alongside so callers can move
/// between original and normal coordinates without a separate inversion.
struct SmithResult {
  IntMatrix d;               ///< the diagonal form, same shape as A
  IntMatrix u, u_inv;        ///< rows x rows, U * A * V = D, U * u_inv = I
  IntMatrix v, v_inv;        ///< cols x cols, V * v_inv = I
  std::vector<Int> divisors; ///< the positive diagonal entries, chained
  int rank = 0;              ///< = divisors.size()
};

/// Exact SNF over arbitrary-precision integers. Pivot policy: smallest
/// nonzero absolute value over the remaining submatrix (full pivoting),
/// which keeps intermediate entries tame.
SmithResult smith_normal_form(const IntMatrix& a);

/// Basis of the integer kernel lattice of A: the columns of V whose
/// d-diagonal is zero. The result has A.cols() rows and (cols - rank) columns
/// and spans { x in Z^cols : A x = 0 } over Z.
IntMatrix kernel_basis(const SmithResult& s);

/// Solves A x = b exactly over Z given the SNF of A. Throws InternalError
/// when no integer solution exists (callers use this only where solvability
/// is a proven invariant).
IntVector solve_integer(const SmithResult& s, const IntVector& b);

}  // namespace maghyper

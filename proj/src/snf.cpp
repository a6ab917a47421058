#include "maghyper/snf.hpp"

#include <utility>

#include "maghyper/errors.hpp"

namespace maghyper {

namespace {

/// In-place elementary operations on the working matrix that keep the
/// invariants  work = u * a * v,  u * u_inv = I,  v * v_inv = I.
struct Workspace {
  IntMatrix m, u, u_inv, v, v_inv;

  void swap_rows(int a, int b) {
    if (a == b) return;
    m.row(a).swap(m.row(b));
    u.row(a).swap(u.row(b));
    u_inv.col(a).swap(u_inv.col(b));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    m.col(a).swap(m.col(b));
    v.col(a).swap(v.col(b));
    v_inv.row(a).swap(v_inv.row(b));
  }
  /// row r += q * row t
  void add_row(int r, int t, const Int& q) {
    if (q.is_zero()) return;
    m.row(r) += q * m.row(t).eval();
    u.row(r) += q * u.row(t).eval();
    u_inv.col(t) -= q * u_inv.col(r).eval();
  }
  /// col c += q * col t
  void add_col(int c, int t, const Int& q) {
    if (q.is_zero()) return;
    m.col(c) += q * m.col(t).eval();
    v.col(c) += q * v.col(t).eval();
    v_inv.row(t) -= q * v_inv.row(c).eval();
  }
  void negate_row(int r) {
    m.row(r) = -m.row(r).eval();
    u.row(r) = -u.row(r).eval();
    u_inv.col(r) = -u_inv.col(r).eval();
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());

  Workspace w;
  w.m = a;
  w.u = IntMatrix::Identity(rows, rows);
  w.u_inv = IntMatrix::Identity(rows, rows);
  w.v = IntMatrix::Identity(cols, cols);
  w.v_inv = IntMatrix::Identity(cols, cols);

  const int steps = std::min(rows, cols);
  int t = 0;
  for (; t < steps; ++t) {
    // Smallest nonzero |entry| in the remaining submatrix becomes the pivot.
    int pi = -1, pj = -1;
    Int best(0);
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (w.m(i, j).is_zero()) continue;
        const Int mag = abs(w.m(i, j));
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;  // submatrix is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      // Euclidean-style reduction of column t and row t against the pivot.
      // Truncated division leaves remainders strictly smaller in magnitude,
      // so re-picking the smallest entry terminates.
      bool reduced = false;
      for (int i = t + 1; i < rows; ++i) {
        if (w.m(i, t).is_zero()) continue;
        w.add_row(i, t, -(w.m(i, t) / w.m(t, t)));
        if (!w.m(i, t).is_zero()) reduced = true;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (w.m(t, j).is_zero()) continue;
        w.add_col(j, t, -(w.m(t, j) / w.m(t, t)));
        if (!w.m(t, j).is_zero()) reduced = true;
      }
      if (reduced) {
        // A remainder smaller than the pivot exists; bring it to (t,t).
        int bi = t, bj = t;
        Int mag = abs(w.m(t, t));
        for (int i = t; i < rows; ++i) {
          for (int j = t; j < cols; ++j) {
            if (w.m(i, j).is_zero()) continue;
            const Int cand = abs(w.m(i, j));
            if (cand < mag) {
              mag = cand;
              bi = i;
              bj = j;
            }
          }
        }
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }

      // Row and column are clear. Enforce that the pivot divides every
      // remaining entry; if not, fold the offending row in and restart.
      int oi = -1, oj = -1;
      for (int i = t + 1; i < rows && oi < 0; ++i) {
        for (int j = t + 1; j < cols; ++j) {
          if (!(w.m(i, j) % w.m(t, t)).is_zero()) {
            oi = i;
            oj = j;
            break;
          }
        }
      }
      if (oi < 0) break;
      w.add_row(t, oi, Int(1));
      (void)oj;
    }

    if (w.m(t, t).sign() < 0) w.negate_row(t);
  }

  SmithResult out;
  out.d = std::move(w.m);
  out.u = std::move(w.u);
  out.u_inv = std::move(w.u_inv);
  out.v = std::move(w.v);
  out.v_inv = std::move(w.v_inv);
  out.rank = t;
  out.divisors.reserve(t);
  for (int i = 0; i < t; ++i) out.divisors.push_back(out.d(i, i));
  return out;
}

IntMatrix kernel_basis(const SmithResult& s) {
  const int cols = static_cast<int>(s.v.rows());
  const int free = cols - s.rank;
  IntMatrix k(cols, free);
  for (int j = 0; j < free; ++j) k.col(j) = s.v.col(s.rank + j);
  return k;
}

IntVector solve_integer(const SmithResult& s, const IntVector& b) {
  const int rows = static_cast<int>(s.u.rows());
  const int cols = static_cast<int>(s.v.rows());
  if (b.size() != rows) throw InternalError("solve_integer: size mismatch");

  const IntVector ub = s.u * b;
  IntVector y = IntVector::Constant(cols, Int(0));
  for (int i = 0; i < rows; ++i) {
    if (i < s.rank) {
      if (!(ub(i) % s.divisors[i]).is_zero()) {
        throw InternalError("solve_integer: no integral solution");
      }
      y(i) = ub(i) / s.divisors[i];
    } else if (!ub(i).is_zero()) {
      throw InternalError("solve_integer: inconsistent system");
    }
  }
  return s.v * y;
}

}  // namespace maghyper

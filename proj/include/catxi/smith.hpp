#pragma once

// Smith normal form over Q[t].  The ring is Euclidean (degree), so the
// classical pivot/reduce/fix-divisibility loop terminates.  Pivot choice is
// the nonzero entry of minimal degree, ties broken by smallest (row, col),
// which makes every downstream decomposition deterministic.
//
// Invariants returned: U * A * V = D with D diagonal, d_1 | d_2 | ...,
// diagonal entries monic, and U, V invertible over Q[t] (tracked inverses
// are returned alongside).

#include "catxi/polynomial.hpp"

#include <utility>

namespace catxi {

struct SmithResult {
  PolyMatrix u;      // rows x rows
  PolyMatrix u_inv;  // inverse of u
  PolyMatrix d;      // rows x cols diagonal
  PolyMatrix v;      // cols x cols
  PolyMatrix v_inv;  // inverse of v
  int rank = 0;

  RatPoly diagonal(int i) const { return d(i, i); }
};

namespace smith_detail {

inline void add_row(PolyMatrix& m, Eigen::Index dst, Eigen::Index src,
                    const RatPoly& f) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (m(src, j).is_zero()) continue;
    m(dst, j) += f * m(src, j);
  }
}

inline void add_col(PolyMatrix& m, Eigen::Index dst, Eigen::Index src,
                    const RatPoly& f) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, src).is_zero()) continue;
    m(i, dst) += f * m(i, src);
  }
}

inline void scale_row(PolyMatrix& m, Eigen::Index r, const Rational& c) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (!m(r, j).is_zero()) m(r, j) = RatPoly(c) * m(r, j);
}

}  // namespace smith_detail

inline SmithResult smith_normal_form(PolyMatrix a) {
  using namespace smith_detail;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  SmithResult res;
  res.u = PolyMatrix::Identity(rows, rows);
  res.u_inv = PolyMatrix::Identity(rows, rows);
  res.v = PolyMatrix::Identity(cols, cols);
  res.v_inv = PolyMatrix::Identity(cols, cols);

  auto row_swap = [&](Eigen::Index i, Eigen::Index k) {
    if (i == k) return;
    a.row(i).swap(a.row(k));
    res.u.row(i).swap(res.u.row(k));
    res.u_inv.col(i).swap(res.u_inv.col(k));
  };
  auto col_swap = [&](Eigen::Index j, Eigen::Index k) {
    if (j == k) return;
    a.col(j).swap(a.col(k));
    res.v.col(j).swap(res.v.col(k));
    res.v_inv.row(j).swap(res.v_inv.row(k));
  };
  // row[dst] += f * row[src]
  auto row_op = [&](Eigen::Index dst, Eigen::Index src, const RatPoly& f) {
    add_row(a, dst, src, f);
    add_row(res.u, dst, src, f);
    add_col(res.u_inv, src, dst, -f);
  };
  auto col_op = [&](Eigen::Index dst, Eigen::Index src, const RatPoly& f) {
    add_col(a, dst, src, f);
    add_col(res.v, dst, src, f);
    add_row(res.v_inv, src, dst, -f);
  };

  const Eigen::Index steps = std::min(rows, cols);
  Eigen::Index k = 0;
  for (; k < steps; ++k) {
    // Locate minimal-degree nonzero pivot in the trailing block.
    for (;;) {
      Eigen::Index pr = -1, pc = -1;
      int best = -1;
      for (Eigen::Index i = k; i < rows; ++i) {
        for (Eigen::Index j = k; j < cols; ++j) {
          if (a(i, j).is_zero()) continue;
          int d = a(i, j).degree();
          if (best < 0 || d < best) {
            best = d;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) goto done;  // trailing block is zero
      row_swap(k, pr);
      col_swap(k, pc);

      bool clean = true;
      for (Eigen::Index i = k + 1; i < rows; ++i) {
        if (a(i, k).is_zero()) continue;
        auto dm = divmod(a(i, k), a(k, k));
        row_op(i, k, -dm.quotient);
        if (!a(i, k).is_zero()) clean = false;  // smaller-degree remainder
      }
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        if (a(k, j).is_zero()) continue;
        auto dm = divmod(a(k, j), a(k, k));
        col_op(j, k, -dm.quotient);
        if (!a(k, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // Pivot divides its row and column; enforce divisibility of the rest.
      bool fixed = false;
      for (Eigen::Index i = k + 1; i < rows && !fixed; ++i) {
        for (Eigen::Index j = k + 1; j < cols && !fixed; ++j) {
          if (a(i, j).is_zero()) continue;
          if (!divides(a(k, k), a(i, j))) {
            row_op(k, i, RatPoly(1));
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }

    // Normalize the pivot to a monic polynomial.
    Rational lead = a(k, k).leading();
    if (lead != Rational(1)) {
      Rational inv = Rational(1) / lead;
      scale_row(a, k, inv);
      scale_row(res.u, k, inv);
      for (Eigen::Index i = 0; i < rows; ++i)
        if (!res.u_inv(i, k).is_zero())
          res.u_inv(i, k) = RatPoly(lead) * res.u_inv(i, k);
    }
  }
done:
  res.d = std::move(a);
  res.rank = 0;
  for (Eigen::Index i = 0; i < steps; ++i)
    if (!res.d(i, i).is_zero()) ++res.rank;
  return res;
}

}  // namespace catxi

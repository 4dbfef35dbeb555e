#pragma once

// Exact dense linear algebra over the rationals: row reduction, rank,
// kernels, solving, and quotient-space bookkeeping.  Deterministic pivoting
// (first nonzero row), no balancing, no tolerance anywhere.

#include "catxi/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace catxi {

struct RowEchelon {
  RatMatrix mat;               // reduced row echelon form
  std::vector<int> pivot_cols;  // one per nonzero row, increasing
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

inline RowEchelon row_reduce(RatMatrix a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index i = row; i < rows; ++i) {
      if (!is_zero(a(i, col))) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) a.row(p).swap(a.row(row));
    Rational inv = Rational(1) / a(row, col);
    for (Eigen::Index j = col; j < cols; ++j)
      if (!is_zero(a(row, j))) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      Rational f = a(i, col);
      for (Eigen::Index j = col; j < cols; ++j) {
        if (is_zero(a(row, j))) continue;
        a(i, j) -= f * a(row, j);
      }
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

inline int rank(const RatMatrix& a) { return row_reduce(a).rank(); }

// Columns form a basis of ker(a); n x (n - rank).
inline RatMatrix kernel_basis(const RatMatrix& a) {
  RowEchelon re = row_reduce(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : re.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  RatMatrix basis = RatMatrix::Zero(n, n - re.rank());
  Eigen::Index k = 0;
  for (Eigen::Index free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    basis(free_col, k) = 1;
    for (int r = 0; r < re.rank(); ++r)
      basis(re.pivot_cols[static_cast<size_t>(r)], k) =
          -re.mat(r, free_col);
    ++k;
  }
  return basis;
}

// Least structured exact solve: returns any solution of a x = b, or nullopt.
inline std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  RowEchelon re = row_reduce(std::move(aug));
  RatVector x = RatVector::Zero(a.cols());
  for (int r = 0; r < re.rank(); ++r) {
    int pc = re.pivot_cols[static_cast<size_t>(r)];
    if (pc == static_cast<int>(a.cols())) return std::nullopt;  // 0 = 1 row
    x(pc) = re.mat(r, a.cols());
  }
  return x;
}

inline bool in_column_space(const RatMatrix& a, const RatVector& b) {
  return solve(a, b).has_value();
}

// Incrementally maintained column space; columns are kept reduced with a
// unit leading entry keyed by pivot row.
class ColumnSpace {
 public:
  explicit ColumnSpace(Eigen::Index rows) : rows_(rows) {}

  int dimension() const { return static_cast<int>(reduced_.size()); }

  // Residual of v after reduction against the stored columns.
  RatVector residual(RatVector v) const {
    for (const auto& [pivot, col] : reduced_) {
      if (is_zero(v(pivot))) continue;
      Rational f = v(pivot);
      for (Eigen::Index i = 0; i < rows_; ++i)
        if (!is_zero(col(i))) v(i) -= f * col(i);
    }
    return v;
  }

  bool contains(const RatVector& v) const {
    RatVector r = residual(v);
    for (Eigen::Index i = 0; i < r.size(); ++i)
      if (!is_zero(r(i))) return false;
    return true;
  }

  // Adds v if independent; returns whether the dimension grew.
  bool insert(const RatVector& v) {
    RatVector r = residual(v);
    Eigen::Index pivot = -1;
    for (Eigen::Index i = 0; i < rows_; ++i) {
      if (!is_zero(r(i))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    Rational inv = Rational(1) / r(pivot);
    for (Eigen::Index i = 0; i < rows_; ++i)
      if (!is_zero(r(i))) r(i) *= inv;
    reduced_.emplace(pivot, std::move(r));
    return true;
  }

  void insert_all(const RatMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) insert(m.col(j));
  }

 private:
  Eigen::Index rows_;
  std::map<Eigen::Index, RatVector> reduced_;
};

// Indices of columns of `extra` that extend the column space of `base`;
// greedy left-to-right, so the result is deterministic.
inline std::vector<int> extending_columns(const RatMatrix& base,
                                          const RatMatrix& extra) {
  ColumnSpace space(base.rows());
  space.insert_all(base);
  std::vector<int> chosen;
  for (Eigen::Index j = 0; j < extra.cols(); ++j)
    if (space.insert(extra.col(j))) chosen.push_back(static_cast<int>(j));
  return chosen;
}

}  // namespace catxi

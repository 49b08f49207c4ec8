#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "scg/error.hpp"
#include "scg/rational.hpp"

namespace scg {

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

inline std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return "Unique";
    case SolveStatus::Underdetermined: return "Underdetermined";
    case SolveStatus::Inconsistent: return "Inconsistent";
  }
  return "?";
}

template <typename Scalar>
struct LinearSolution {
  SolveStatus status = SolveStatus::Inconsistent;
  /// Present iff the system is consistent; free variables are fixed to 0.
  std::optional<VectorX<Scalar>> particular;
  /// Basis of {x : A x = 0}, one vector per free column.
  std::vector<VectorX<Scalar>> nullspace_basis;
  /// Present iff inconsistent: a row combination y with y^T A = 0 and
  /// y^T b != 0.
  std::optional<VectorX<Scalar>> certificate;
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivot_columns;
};

/// Solves A x = b exactly by Gauss-Jordan elimination.
///
/// Pivots are the first nonzero entry at or below the current row in each
/// column, scanning columns left to right, so the result depends only on the
/// input. Throws DimensionMismatch when A.rows() != b.size().
template <typename Scalar>
LinearSolution<Scalar> solve_exact(const MatrixX<Scalar>& A, const VectorX<Scalar>& b) {
  if (A.rows() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "solve_exact: A.rows() != b.size()");
  }
  const Eigen::Index rows = A.rows();
  const Eigen::Index cols = A.cols();
  const Scalar zero(0);

  // [A | b | I]: the identity block records the row operations so an
  // inconsistent row yields its own certificate.
  MatrixX<Scalar> m(rows, cols + 1 + rows);
  m.leftCols(cols) = A;
  m.col(cols) = b;
  m.rightCols(rows).setZero();
  for (Eigen::Index r = 0; r < rows; ++r) m(r, cols + 1 + r) = Scalar(1);

  LinearSolution<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = row;
    while (pivot < rows && m(pivot, col) == zero) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));

    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!(m(row, c) == zero)) m(row, c) *= inv;
    }
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || m(r, col) == zero) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (!(m(row, c) == zero)) m(r, c) -= factor * m(row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : out.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;

  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> z = VectorX<Scalar>::Zero(cols);
    z(free) = Scalar(1);
    for (std::size_t k = 0; k < out.pivot_columns.size(); ++k) {
      z(out.pivot_columns[k]) = -m(static_cast<Eigen::Index>(k), free);
    }
    out.nullspace_basis.push_back(std::move(z));
  }

  for (Eigen::Index r = out.rank; r < rows; ++r) {
    if (!(m(r, cols) == zero)) {
      out.status = SolveStatus::Inconsistent;
      out.certificate = m.row(r).tail(rows).transpose();
      return out;
    }
  }

  VectorX<Scalar> x = VectorX<Scalar>::Zero(cols);
  for (std::size_t k = 0; k < out.pivot_columns.size(); ++k) {
    x(out.pivot_columns[k]) = m(static_cast<Eigen::Index>(k), cols);
  }
  out.particular = std::move(x);
  out.status = out.nullspace_basis.empty() ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return out;
}

/// A x - b, evaluated exactly.
template <typename Scalar>
VectorX<Scalar> residual(const MatrixX<Scalar>& A, const VectorX<Scalar>& x,
                         const VectorX<Scalar>& b) {
  if (A.cols() != x.size() || A.rows() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "residual: shape mismatch");
  }
  return A * x - b;
}

template <typename Scalar>
bool is_zero_vector(const VectorX<Scalar>& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (!(v(k) == Scalar(0))) return false;
  }
  return true;
}

}  // namespace scg

#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dynwg/error.hpp"

namespace dynwg {

using Scalar = mpq_class;
using QVector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Scalar parse_scalar(const std::string& text);
std::string format_scalar(const Scalar& q);

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static QMatrix identity(int n);
  /// Columns given as vectors of equal length (rows).
  static QMatrix from_columns(const std::vector<QVector>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  QVector column(int c) const;
  QMatrix operator*(const QMatrix& o) const;
  QVector operator*(const QVector& v) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const = default;

  bool is_zero() const;
  QMatrix transpose() const;
  /// Throws InvalidArgument if singular or not square.
  QMatrix inverse() const;
  int rank() const;
  /// Indices of the first linearly independent columns, scanning left to right.
  std::vector<int> pivot_columns() const;
  /// Basis of the right null space, one vector per free column of the RREF.
  std::vector<QVector> nullspace() const;
  /// Solves A x = b for square nonsingular A.
  QVector solve(const QVector& b) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

/// Sparse square-or-rectangular matrix stored by rows; entries kept nonzero.
class SparseMatrix {
 public:
  using Entry = std::pair<int, Scalar>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_data_(static_cast<std::size_t>(rows)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Adds value at (r, c); entries may be set in any order.
  void add(int r, int c, const Scalar& value);
  Scalar at(int r, int c) const;
  const std::vector<Entry>& row(int r) const { return row_data_[static_cast<std::size_t>(r)]; }

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  QVector apply(const QVector& v) const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& s) const;
  bool operator==(const SparseMatrix& o) const;

  /// Dense submatrix rows [r0, r0+nr) x cols [c0, c0+nc).
  QMatrix block(int r0, int nr, int c0, int nc) const;

  /// (row, col, value) triplets in row-major order.
  std::vector<std::tuple<int, int, Scalar>> triplets() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Entry>> row_data_;  // sorted by column
};

}  // namespace dynwg

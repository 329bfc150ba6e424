#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jacring/rational.hpp"

namespace jacring {

using RationalVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  static ExactMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RationalVector row(std::size_t r) const;
  void append_row(const RationalVector& row);

  RationalVector apply(const RationalVector& v) const;

  std::size_t rank() const;

  struct Rref;
  Rref rref() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct ExactMatrix::Rref {
  ExactMatrix matrix;               // pivot entries are 1, pivot columns otherwise 0
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

std::vector<RationalVector> kernel_basis(const ExactMatrix& m);

/// dim U, dim V, dim(U+V), dim(U∩V) for row spans in a common ambient space.
struct SubspaceDims {
  std::size_t dim_u = 0, dim_v = 0, dim_sum = 0, dim_intersection = 0;
};
SubspaceDims subspace_ops(const ExactMatrix& u, const ExactMatrix& v);

/// Sparse primitive integer row, entries sorted by column.
using SparseRow = std::vector<std::pair<int, Integer>>;

/// Makes the row primitive with positive leading entry.
void normalize_row(SparseRow& row);

/// Incremental row echelon basis of integer rows. The leading entry of a row
/// is its smallest column; each pivot column owns exactly one row.
class SparseEchelon {
 public:
  explicit SparseEchelon(int ncols = 0);

  int cols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
  int pivot_row(int col) const { return pivot_row_[col]; }

  /// Reduces against the basis; appends the remainder if nonzero.
  bool insert(SparseRow row);
  /// Appends a row whose leading column is known to be free.
  void insert_free_leading(SparseRow row);

  /// Clears every pivot column from the tails of all rows.
  void reduce_fully();
  bool fully_reduced() const { return fully_reduced_; }

  /// Coordinates of the unit vector at col modulo the row span, indexed by the
  /// non-pivot columns in increasing order. Requires reduce_fully().
  RationalVector normal_form_of_column(int col) const;
  std::vector<int> free_columns() const;

 private:
  int ncols_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_row_;
  bool fully_reduced_ = false;
  std::vector<int> free_index_;
};

}  // namespace jacring

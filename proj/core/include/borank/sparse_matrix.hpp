#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "borank/rational.hpp"

namespace borank {

/// Sparse row vector: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow row_add(const SparseRow& a, const SparseRow& b);
SparseRow row_scale(const SparseRow& a, const Rational& c);
/// a + c*b
SparseRow row_axpy(const SparseRow& a, const Rational& c, const SparseRow& b);
Rational row_dot(const SparseRow& a, const SparseRow& b);

/// Sparse matrix over the rationals. Rows are kept sorted by column and
/// never store zeros. Optional labels name the monomial bases of the row
/// and column index ranges.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int nrows, int ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows) {}

  static SparseMatrix identity(int n);

  int nrows() const { return nrows_; }
  int ncols() const { return ncols_; }

  void set(int r, int c, const Rational& v);
  void add_to(int r, int c, const Rational& v);
  Rational get(int r, int c) const;

  const SparseRow& row(int r) const { return rows_[r]; }
  SparseRow& mutable_row(int r) { return rows_[r]; }
  void set_row(int r, SparseRow row) { rows_[r] = std::move(row); }

  std::size_t nnz() const;
  bool is_zero() const;

  SparseMatrix transpose() const;
  SparseRow apply(const SparseRow& v) const;        // M * v (v indexed by column)
  SparseMatrix multiply(const SparseMatrix& o) const;

  /// Appends the rows of `o` below (column counts must match).
  void append_rows(const SparseMatrix& o);
  /// Places `o` to the right (row counts must match).
  void append_cols(const SparseMatrix& o);
  void add_row(SparseRow r);

  bool operator==(const SparseMatrix& o) const;

  std::optional<std::vector<std::string>> row_labels, col_labels;

  std::string to_pretty_string(int max_dim = 24) const;

 private:
  int nrows_ = 0, ncols_ = 0;
  std::vector<SparseRow> rows_;
};

/// Rank over Q via fraction-free elimination on integer-scaled rows.
/// Pivot choice: smallest column index, then sparsest row, then lowest row
/// index. Deterministic.
int rank(const SparseMatrix& m);

/// Plain rational Gaussian elimination, first-come pivoting. Slow reference
/// path kept as an independent route for cross-checks.
int rank_naive(const SparseMatrix& m);

/// Reduced row echelon form (unique for a given row space). Pivot columns
/// returned in increasing order.
SparseMatrix rref(const SparseMatrix& m, std::vector<int>* pivots = nullptr);

/// Incremental rational echelon. Maintains leading-one rows keyed by pivot
/// column; optionally keeps rows fully reduced against each other.
class RowEchelon {
 public:
  explicit RowEchelon(int ncols, bool fully_reduced = false)
      : ncols_(ncols), fully_reduced_(fully_reduced) {}

  /// Reduces v against current rows; if a nonzero residual remains it is
  /// inserted (normalized). Returns true if v was independent.
  bool add(SparseRow v);
  /// Residual of v after elimination against current rows.
  SparseRow reduce(SparseRow v) const;

  int rank() const { return static_cast<int>(by_pivot_.size()); }
  int ncols() const { return ncols_; }
  /// Rows sorted by pivot column.
  SparseMatrix to_matrix() const;
  const std::vector<std::pair<int, SparseRow>>& rows_by_pivot() const { return by_pivot_; }

 private:
  int ncols_;
  bool fully_reduced_;
  std::vector<std::pair<int, SparseRow>> by_pivot_;  // sorted by pivot column
};

}  // namespace borank

#pragma once

#include <map>
#include <string>
#include <vector>

#include "borank/poly.hpp"
#include "borank/sparse_matrix.hpp"

namespace borank {

/// Sparse matrix with polynomial entries; rows sorted by column, no zeros.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int nrows, int ncols, RingPtr ring)
      : nrows_(nrows), ncols_(ncols), ring_(std::move(ring)), rows_(nrows) {}

  static PolyMatrix from_constant(const SparseMatrix& m, RingPtr ring);

  int nrows() const { return nrows_; }
  int ncols() const { return ncols_; }
  const RingPtr& ring() const { return ring_; }

  void set(int r, int c, Poly p);
  void add_to(int r, int c, const Poly& p);
  const Poly* find(int r, int c) const;
  const std::vector<std::pair<int, Poly>>& row(int r) const { return rows_[r]; }

  bool is_constant() const;
  /// Entrywise evaluation. Throws if the assignment misses a used variable.
  SparseMatrix specialize(const std::map<std::string, Rational>& assignment) const;
  /// In-place substitution var := value over all entries.
  void substitute(int var, const Poly& value);

  PolyMatrix transpose() const;
  void append_cols(const PolyMatrix& o);

 private:
  int nrows_ = 0, ncols_ = 0;
  RingPtr ring_;
  std::vector<std::vector<std::pair<int, Poly>>> rows_;
};

}  // namespace borank

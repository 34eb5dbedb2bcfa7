#pragma once

#include <vector>

#include "borank/sparse_matrix.hpp"

namespace borank {

/// A subspace of Q^n, canonically represented by the reduced row echelon
/// basis of its span. Two subspaces are equal iff their representations are.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);
  /// Span of the rows of `vectors`.
  static Subspace span(const SparseMatrix& vectors);
  static Subspace span(int ambient_dim, const std::vector<SparseRow>& vectors);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return basis_.nrows(); }
  const SparseMatrix& basis_rows() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const SparseRow& v) const;
  bool contains(const Subspace& other) const;
  /// Residual of v modulo the subspace; zero iff contained.
  SparseRow reduce(const SparseRow& v) const;

  bool operator==(const Subspace& o) const {
    return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
  }

 private:
  int ambient_dim_ = 0;
  SparseMatrix basis_;  // rref, full row rank
  std::vector<int> pivots_;
};

/// Lattice operations. intersect/sum require equal ambient dimensions and
/// throw std::invalid_argument otherwise. The annihilator pairs against the
/// dual of the labeled ambient basis.
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace annihilator(const Subspace& s);
int codim(const Subspace& s);

/// Echelonized kernel {v : M v = 0}, dim = ncols - rank.
Subspace kernel_basis(const SparseMatrix& m);

}  // namespace borank

#include "borank/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace borank {

Subspace Subspace::zero(int ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = SparseMatrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  return span(SparseMatrix::identity(ambient_dim));
}

Subspace Subspace::span(const SparseMatrix& vectors) {
  Subspace s;
  s.ambient_dim_ = vectors.ncols();
  s.basis_ = rref(vectors, &s.pivots_);
  return s;
}

Subspace Subspace::span(int ambient_dim, const std::vector<SparseRow>& vectors) {
  SparseMatrix m(static_cast<int>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) m.set_row(static_cast<int>(i), vectors[i]);
  return span(m);
}

SparseRow Subspace::reduce(const SparseRow& v) const {
  SparseRow r = v;
  for (int i = 0; i < basis_.nrows(); ++i) {
    const int p = pivots_[i];
    auto it = std::lower_bound(r.begin(), r.end(), p,
                               [](const auto& pr, int col) { return pr.first < col; });
    if (it != r.end() && it->first == p) r = row_axpy(r, -it->second, basis_.row(i));
  }
  return r;
}

bool Subspace::contains(const SparseRow& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (int i = 0; i < other.basis_.nrows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  SparseMatrix m = a.basis_rows();
  m.append_rows(b.basis_rows());
  return Subspace::span(m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  // columns: basis vectors of a then of b; kernel rows (alpha|beta) give
  // intersection vectors sum_i alpha_i a_i.
  const int ra = a.dim(), rb = b.dim();
  SparseMatrix stacked(a.ambient_dim(), ra + rb);
  for (int i = 0; i < ra; ++i)
    for (const auto& [c, v] : a.basis_rows().row(i)) stacked.add_to(c, i, v);
  for (int i = 0; i < rb; ++i)
    for (const auto& [c, v] : b.basis_rows().row(i)) stacked.add_to(c, ra + i, -v);
  Subspace ker = kernel_basis(stacked);
  std::vector<SparseRow> vecs;
  vecs.reserve(ker.dim());
  for (int i = 0; i < ker.dim(); ++i) {
    SparseRow x;
    for (const auto& [c, v] : ker.basis_rows().row(i)) {
      if (c < ra) x = row_axpy(x, v, a.basis_rows().row(c));
    }
    vecs.push_back(std::move(x));
  }
  return Subspace::span(a.ambient_dim(), vecs);
}

Subspace annihilator(const Subspace& s) {
  // {f in the dual | f(v) = 0 for all v in s} = kernel of basis matrix.
  return kernel_basis(s.basis_rows());
}

int codim(const Subspace& s) { return s.ambient_dim() - s.dim(); }

Subspace kernel_basis(const SparseMatrix& m) {
  std::vector<int> pivots;
  SparseMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.ncols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<SparseRow> vecs;
  for (int c = 0; c < m.ncols(); ++c) {
    if (is_pivot[c]) continue;
    SparseRow v;
    v.emplace_back(c, Rational(1));
    for (int i = 0; i < r.nrows(); ++i) {
      Rational entry = r.get(i, c);
      if (!is_zero(entry)) v.emplace_back(pivots[i], -entry);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.ncols(), vecs);
}

}  // namespace borank

#include "borank/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace borank {

PolyMatrix PolyMatrix::from_constant(const SparseMatrix& m, RingPtr ring) {
  PolyMatrix out(m.nrows(), m.ncols(), ring);
  for (int r = 0; r < m.nrows(); ++r)
    for (const auto& [c, v] : m.row(r)) out.rows_[r].emplace_back(c, Poly::constant(ring, v));
  return out;
}

void PolyMatrix::set(int r, int c, Poly p) {
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& pr, int col) { return pr.first < col; });
  if (it != row.end() && it->first == c) {
    if (p.is_zero()) row.erase(it);
    else it->second = std::move(p);
  } else if (!p.is_zero()) {
    row.insert(it, {c, std::move(p)});
  }
}

void PolyMatrix::add_to(int r, int c, const Poly& p) {
  if (p.is_zero()) return;
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& pr, int col) { return pr.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += p;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.insert(it, {c, p});
  }
}

const Poly* PolyMatrix::find(int r, int c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& pr, int col) { return pr.first < col; });
  if (it != row.end() && it->first == c) return &it->second;
  return nullptr;
}

bool PolyMatrix::is_constant() const {
  for (const auto& row : rows_)
    for (const auto& [c, p] : row)
      if (!p.is_constant()) return false;
  return true;
}

SparseMatrix PolyMatrix::specialize(const std::map<std::string, Rational>& assignment) const {
  SparseMatrix out(nrows_, ncols_);
  for (int r = 0; r < nrows_; ++r)
    for (const auto& [c, p] : rows_[r]) {
      Rational v = p.evaluate(assignment);
      if (!is_zero(v)) out.set(r, c, v);
    }
  return out;
}

void PolyMatrix::substitute(int var, const Poly& value) {
  for (auto& row : rows_) {
    std::vector<std::pair<int, Poly>> next;
    next.reserve(row.size());
    for (auto& [c, p] : row) {
      Poly q = p.depends_on(var) ? p.substitute(var, value) : std::move(p);
      if (!q.is_zero()) next.emplace_back(c, std::move(q));
    }
    row = std::move(next);
  }
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ncols_, nrows_, ring_);
  for (int r = 0; r < nrows_; ++r)
    for (const auto& [c, p] : rows_[r]) t.rows_[c].emplace_back(r, p);
  return t;
}

void PolyMatrix::append_cols(const PolyMatrix& o) {
  if (nrows_ != o.nrows_) throw std::invalid_argument("append_cols: row mismatch");
  for (int r = 0; r < nrows_; ++r)
    for (const auto& [c, p] : o.rows_[r]) rows_[r].emplace_back(c + ncols_, p);
  ncols_ += o.ncols_;
}

}  // namespace borank

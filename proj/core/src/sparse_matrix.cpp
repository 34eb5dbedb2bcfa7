#include "borank/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace borank {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

SparseRow row_add(const SparseRow& a, const SparseRow& b) {
  return row_axpy(a, Rational(1), b);
}

SparseRow row_scale(const SparseRow& a, const Rational& c) {
  SparseRow out;
  if (borank::is_zero(c)) return out;
  out.reserve(a.size());
  for (const auto& [col, v] : a) out.emplace_back(col, v * c);
  return out;
}

SparseRow row_axpy(const SparseRow& a, const Rational& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rational v = c * b[j].second;
      if (!borank::is_zero(v)) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Rational v = a[i].second + c * b[j].second;
      if (!borank::is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

Rational row_dot(const SparseRow& a, const SparseRow& b) {
  Rational acc(0);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) ++i;
    else if (b[j].first < a[i].first) ++j;
    else acc += a[i++].second * b[j++].second;
  }
  return acc;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != row.end() && it->first == c) {
    if (borank::is_zero(v)) row.erase(it);
    else it->second = v;
  } else if (!borank::is_zero(v)) {
    row.insert(it, {c, v});
  }
}

void SparseMatrix::add_to(int r, int c, const Rational& v) {
  if (borank::is_zero(v)) return;
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (borank::is_zero(it->second)) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

Rational SparseMatrix::get(int r, int c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rational(0);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool SparseMatrix::is_zero() const { return nnz() == 0; }

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(ncols_, nrows_);
  for (int r = 0; r < nrows_; ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
  return t;
}

SparseRow SparseMatrix::apply(const SparseRow& v) const {
  std::map<int, Rational> acc;
  for (const auto& [c, x] : v) {
    if (c >= nrows_) throw std::invalid_argument("apply: index out of range");
    for (const auto& [cc, m] : rows_[c]) acc[cc] += m * x;
  }
  SparseRow out;
  for (auto& [c, x] : acc)
    if (!borank::is_zero(x)) out.emplace_back(c, std::move(x));
  return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& o) const {
  if (ncols_ != o.nrows_) throw std::invalid_argument("multiply: shape mismatch");
  SparseMatrix out(nrows_, o.ncols_);
  for (int r = 0; r < nrows_; ++r) {
    std::map<int, Rational> acc;
    for (const auto& [k, v] : rows_[r])
      for (const auto& [c, w] : o.rows_[k]) acc[c] += v * w;
    SparseRow row;
    for (auto& [c, x] : acc)
      if (!borank::is_zero(x)) row.emplace_back(c, std::move(x));
    out.rows_[r] = std::move(row);
  }
  return out;
}

void SparseMatrix::append_rows(const SparseMatrix& o) {
  if (ncols_ != o.ncols_ && nrows_ != 0) throw std::invalid_argument("append_rows: column mismatch");
  ncols_ = std::max(ncols_, o.ncols_);
  for (int r = 0; r < o.nrows_; ++r) rows_.push_back(o.rows_[r]);
  nrows_ += o.nrows_;
}

void SparseMatrix::append_cols(const SparseMatrix& o) {
  if (nrows_ != o.nrows_) throw std::invalid_argument("append_cols: row mismatch");
  for (int r = 0; r < nrows_; ++r)
    for (const auto& [c, v] : o.rows_[r]) rows_[r].emplace_back(c + ncols_, v);
  ncols_ += o.ncols_;
}

void SparseMatrix::add_row(SparseRow r) {
  rows_.push_back(std::move(r));
  ++nrows_;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_ == o.rows_;
}

std::string SparseMatrix::to_pretty_string(int max_dim) const {
  std::ostringstream os;
  os << nrows_ << "x" << ncols_;
  if (nrows_ > max_dim || ncols_ > max_dim) {
    os << " (" << nnz() << " nonzero)";
    return os.str();
  }
  for (int r = 0; r < nrows_; ++r) {
    os << "\n[";
    for (int c = 0; c < ncols_; ++c) os << (c ? " " : "") << get(r, c).get_str();
    os << "]";
  }
  return os.str();
}

namespace {

using IntRow = std::vector<std::pair<int, Integer>>;

IntRow to_integer_row(const SparseRow& r) {
  Integer lcm(1);
  for (const auto& [c, v] : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(r.size());
  Integer g(0);
  for (const auto& [c, v] : r) {
    Integer x = Integer(v.get_num()) * (lcm / Integer(v.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.emplace_back(c, std::move(x));
  }
  if (g > 1)
    for (auto& [c, x] : out) x /= g;
  return out;
}

// a*s - b*t, content-reduced
IntRow int_row_combine(const IntRow& a, const Integer& s, const IntRow& b, const Integer& t) {
  IntRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Integer g(0);
  auto push = [&](int col, Integer v) {
    if (sgn(v) == 0) return;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.emplace_back(col, std::move(v));
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      push(a[i].first, a[i].second * s);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      push(b[j].first, -b[j].second * t);
      ++j;
    } else {
      push(a[i].first, a[i].second * s - b[j].second * t);
      ++i, ++j;
    }
  }
  if (g > 1)
    for (auto& [c, x] : out) x /= g;
  return out;
}

}  // namespace

int rank(const SparseMatrix& m) {
  std::vector<IntRow> work;
  work.reserve(m.nrows());
  for (int r = 0; r < m.nrows(); ++r) {
    if (!m.row(r).empty()) work.push_back(to_integer_row(m.row(r)));
  }
  int rk = 0;
  while (!work.empty()) {
    // pivot: smallest leading column, then sparsest row, then first
    std::size_t best = 0;
    for (std::size_t i = 1; i < work.size(); ++i) {
      int ci = work[i].front().first, cb = work[best].front().first;
      if (ci < cb || (ci == cb && work[i].size() < work[best].size())) best = i;
    }
    IntRow piv = std::move(work[best]);
    work.erase(work.begin() + best);
    const int pcol = piv.front().first;
    const Integer& pval = piv.front().second;
    ++rk;
    std::vector<IntRow> next;
    next.reserve(work.size());
    for (auto& row : work) {
      if (row.front().first == pcol) {
        IntRow red = int_row_combine(row, pval, piv, row.front().second);
        if (!red.empty()) next.push_back(std::move(red));
      } else {
        next.push_back(std::move(row));
      }
    }
    work = std::move(next);
  }
  return rk;
}

int rank_naive(const SparseMatrix& m) {
  // dense rational gaussian elimination, first nonzero pivot
  std::vector<std::vector<Rational>> a(m.nrows(), std::vector<Rational>(m.ncols(), Rational(0)));
  for (int r = 0; r < m.nrows(); ++r)
    for (const auto& [c, v] : m.row(r)) a[r][c] = v;
  int rk = 0;
  int row = 0;
  for (int col = 0; col < m.ncols() && row < m.nrows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.nrows(); ++r)
      if (!borank::is_zero(a[r][col])) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    for (int r = row + 1; r < m.nrows(); ++r) {
      if (borank::is_zero(a[r][col])) continue;
      Rational f = a[r][col] / a[row][col];
      for (int c = col; c < m.ncols(); ++c) a[r][c] -= f * a[row][c];
    }
    ++row;
    ++rk;
  }
  return rk;
}

bool RowEchelon::add(SparseRow v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const int pivot = v.front().first;
  Rational lead = v.front().second;
  for (auto& [c, x] : v) x /= lead;
  if (fully_reduced_) {
    for (auto& [p, row] : by_pivot_) {
      Rational coeff(0);
      auto it = std::lower_bound(row.begin(), row.end(), pivot,
                                 [](const auto& pr, int col) { return pr.first < col; });
      if (it != row.end() && it->first == pivot) coeff = it->second;
      if (!borank::is_zero(coeff)) row = row_axpy(row, -coeff, v);
    }
  }
  auto it = std::lower_bound(by_pivot_.begin(), by_pivot_.end(), pivot,
                             [](const auto& pr, int col) { return pr.first < col; });
  by_pivot_.insert(it, {pivot, std::move(v)});
  return true;
}

SparseRow RowEchelon::reduce(SparseRow v) const {
  auto find = [this](int col) {
    auto it = std::lower_bound(by_pivot_.begin(), by_pivot_.end(), col,
                               [](const auto& pr, int c) { return pr.first < c; });
    return (it != by_pivot_.end() && it->first == col) ? &it->second : nullptr;
  };
  if (!fully_reduced_) {
    // Eliminate leading coordinates only; exact membership test either way.
    while (!v.empty()) {
      const SparseRow* row = find(v.front().first);
      if (!row) return v;
      v = row_axpy(v, -v.front().second, *row);
    }
    return v;
  }
  // Fully reduced rows have their pivot column exclusive to themselves, so a
  // single left-to-right sweep clears every pivot coordinate.
  SparseRow out;
  std::size_t i = 0;
  while (i < v.size()) {
    const SparseRow* row = find(v[i].first);
    if (!row) {
      out.push_back(v[i]);
      ++i;
    } else {
      SparseRow tail(v.begin() + i, v.end());
      tail = row_axpy(tail, -v[i].second, *row);
      v.resize(i);
      v.insert(v.end(), tail.begin(), tail.end());
    }
  }
  return out;
}

SparseMatrix RowEchelon::to_matrix() const {
  SparseMatrix m(rank(), ncols_);
  for (std::size_t i = 0; i < by_pivot_.size(); ++i) m.set_row(static_cast<int>(i), by_pivot_[i].second);
  return m;
}

SparseMatrix rref(const SparseMatrix& m, std::vector<int>* pivots) {
  RowEchelon ech(m.ncols(), /*fully_reduced=*/true);
  for (int r = 0; r < m.nrows(); ++r) ech.add(m.row(r));
  if (pivots) {
    pivots->clear();
    for (const auto& [p, row] : ech.rows_by_pivot()) pivots->push_back(p);
  }
  return ech.to_matrix();
}

}  // namespace borank

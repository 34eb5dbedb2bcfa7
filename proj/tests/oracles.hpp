#pragma once

// Independent brute-force oracles used by the test suites. These must stay
// free of the library's elimination/search code paths they check.

#include <algorithm>
#include <random>
#include <vector>

#include "borank/rational.hpp"
#include "borank/sparse_matrix.hpp"

namespace oracles {

using borank::Rational;
using borank::SparseMatrix;

inline Rational det_dense(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && borank::is_zero(a[piv][col])) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (borank::is_zero(a[r][col])) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

// Rank as the largest k with a nonzero k x k minor, by exhaustive minor
// enumeration. Only usable for small matrices.
inline int rank_by_minors(const SparseMatrix& m) {
  const int nr = m.nrows(), nc = m.ncols();
  std::vector<std::vector<Rational>> dense(nr, std::vector<Rational>(nc, Rational(0)));
  for (int r = 0; r < nr; ++r)
    for (const auto& [c, v] : m.row(r)) dense[r][c] = v;
  auto combinations = [](int n, int k) {
    std::vector<std::vector<int>> result;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      result.push_back(idx);
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return result;
  };
  for (int k = std::min(nr, nc); k >= 1; --k) {
    for (const auto& rows : combinations(nr, k)) {
      for (const auto& cols : combinations(nc, k)) {
        std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = dense[rows[i]][cols[j]];
        if (!borank::is_zero(det_dense(sub))) return k;
      }
    }
  }
  return 0;
}

inline SparseMatrix random_int_matrix(std::mt19937& rng, int nr, int nc, int lo, int hi,
                                      double density = 1.0) {
  std::uniform_int_distribution<int> entry(lo, hi);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  SparseMatrix m(nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c)
      if (coin(rng) <= density) m.set(r, c, Rational(entry(rng)));
  return m;
}

}  // namespace oracles

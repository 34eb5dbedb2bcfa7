#include "borank/tableau.hpp"

#include <algorithm>
#include <set>

namespace borank {

bool GridTableau::valid(int max_label) const {
  for (const auto& [st, j] : labels) {
    if (j < 1 || j > max_label) return false;
    if (st.first < 1 || st.first > n || st.second < 1 || st.second > n) return false;
    auto leq = [&](int s, int t) {
      auto it = labels.find({s, t});
      return it == labels.end() ? 0 : it->second;
    };
    if (st.first > 1 && leq(st.first - 1, st.second) < j) return false;
    if (st.second > 1 && leq(st.first, st.second - 1) < j) return false;
  }
  return true;
}

long GridTableau::label_sum() const {
  long s = 0;
  for (const auto& [st, j] : labels) s += j;
  return s;
}

long GridTableau::side_sum(const ContributionTable& table, int n_dim, bool side_a) const {
  long acc = 0;
  for (const auto& [st, j] : labels) {
    const TableRow& row = table.row(j);
    acc += row.a * (side_a ? st.first : st.second) + row.b.at(n_dim);
  }
  return acc;
}

namespace {

struct Search {
  int n;
  const ContributionTable& table;
  long r;
  long rho;
  long unit_cap_a, unit_cap_b;  // admissible per-unit upper bounds
  // dominance memo: for (column, previous column labels, remaining rho) the
  // Pareto-maximal (sumA, sumB) pairs already proven to fail
  std::map<std::tuple<int, std::vector<int>, long>, std::vector<std::pair<long, long>>> failed;
  GridTableau witness;
  bool found = false;

  Search(int n_, const ContributionTable& t, long r_) : n(n_), table(t), r(r_), rho(r_ - (long)n_ * n_) {
    unit_cap_a = 0;
    unit_cap_b = 0;
    for (const auto& row : table.rows) {
      long best = row.a * n + row.b.at(n);
      long per_unit_ceil = best <= 0 ? 0 : (best + row.j - 1) / row.j;
      unit_cap_a = std::max(unit_cap_a, per_unit_ceil);
      unit_cap_b = std::max(unit_cap_b, per_unit_ceil);
    }
  }

  bool dominated(int t, const std::vector<int>& prev, long rho_left, long sa, long sb) {
    auto it = failed.find({t, prev, rho_left});
    if (it == failed.end()) return false;
    for (const auto& [fa, fb] : it->second)
      if (sa <= fa && sb <= fb) return true;
    return false;
  }

  void note_failure(int t, const std::vector<int>& prev, long rho_left, long sa, long sb) {
    auto& list = failed[{t, prev, rho_left}];
    for (auto& [fa, fb] : list) {
      if (fa >= sa && fb >= sb) return;
    }
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](const auto& p) { return p.first <= sa && p.second <= sb; }),
               list.end());
    list.emplace_back(sa, sb);
  }

  // enumerate non-increasing label columns bounded above by `prev`
  void fill_column(int t, const std::vector<int>& prev, std::vector<int>& col, int row_idx,
                   long rho_left, long sa, long sb, GridTableau& acc) {
    if (found) return;
    if (row_idx > n || (row_idx > 1 && col[row_idx - 2] == 0)) {
      descend(t, prev, col, rho_left, sa, sb, acc);
      return;
    }
    const int cap_prev = prev.empty() ? table.k() : prev[row_idx - 1];
    const int cap_above = row_idx == 1 ? table.k() : col[row_idx - 2];
    const int cap = std::min({cap_prev, cap_above, static_cast<int>(rho_left)});
    // label 0 terminates the column
    descend_or_continue(t, prev, col, row_idx, 0, rho_left, sa, sb, acc);
    for (int j = 1; j <= cap && !found; ++j)
      descend_or_continue(t, prev, col, row_idx, j, rho_left, sa, sb, acc);
  }

  void descend_or_continue(int t, const std::vector<int>& prev, std::vector<int>& col, int row_idx,
                           int j, long rho_left, long sa, long sb, GridTableau& acc) {
    col[row_idx - 1] = j;
    if (j == 0) {
      // rest of the column is zero
      for (int rr = row_idx; rr <= n; ++rr) col[rr - 1] = 0;
      descend(t, prev, col, rho_left, sa, sb, acc);
      return;
    }
    const TableRow& row = table.row(j);
    long nsa = sa + row.a * row_idx + row.b.at(n);
    long nsb = sb + row.a * t + row.b.at(n);
    acc.labels[{row_idx, t}] = j;
    fill_column(t, prev, col, row_idx + 1, rho_left - j, nsa, nsb, acc);
    acc.labels.erase({row_idx, t});
    col[row_idx - 1] = 0;
  }

  void descend(int t, const std::vector<int>& prev, const std::vector<int>& col, long rho_left,
               long sa, long sb, GridTableau& acc) {
    if (found) return;
    const bool empty_col = std::all_of(col.begin(), col.end(), [](int x) { return x == 0; });
    if (rho_left == 0) {
      if (sa >= r && sb >= r) {
        found = true;
        witness = acc;
      }
      return;
    }
    if (t >= n || empty_col) return;  // no room for the remaining labels
    if (sa + rho_left * unit_cap_a < r || sb + rho_left * unit_cap_b < r) return;
    if (dominated(t + 1, col, rho_left, sa, sb)) return;
    std::vector<int> next(n, 0);
    fill_column(t + 1, col, next, 1, rho_left, sa, sb, acc);
    if (!found) note_failure(t + 1, col, rho_left, sa, sb);
  }
};

}  // namespace

TableauSearchResult tableau_search(int n, const ContributionTable& table, int r) {
  TableauSearchResult res;
  const long rho = static_cast<long>(r) - static_cast<long>(n) * n;
  if (rho < 0) return res;
  if (rho == 0) {
    // only the empty tableau, with both sums zero
    res.exists = r <= 0;
    return res;
  }
  Search search(n, table, r);
  std::vector<int> first(n, 0);
  GridTableau acc;
  acc.n = n;
  search.fill_column(1, {}, first, 1, rho, 0, 0, acc);
  res.exists = search.found;
  if (search.found) {
    res.witness = search.witness;
    res.witness.n = n;
  }
  return res;
}

long search_bound(int n, const ContributionTable& table, int r_cap) {
  if (r_cap == 0) r_cap = n * n + 8 * n + 16;
  for (long r = static_cast<long>(n) * n;; ++r) {
    if (r > r_cap) return r;  // safety ceiling
    if (tableau_search(n, table, static_cast<int>(r)).exists) return r;
  }
}

}  // namespace borank

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "borank/contributions.hpp"

namespace borank {

/// Young-shaped filling of the n x n weight grid: labels j >= 1 on a finite
/// support, non-increasing along rows and columns.
struct GridTableau {
  int n = 0;
  std::map<std::pair<int, int>, int> labels;  // 1-based (s,t) -> j

  bool valid(int max_label) const;
  long label_sum() const;
  /// sum over sites of a_j*s + b_j (side A) or a_j*t + b_j (side B)
  long side_sum(const ContributionTable& table, int n_dim, bool side_a) const;
};

struct TableauSearchResult {
  bool exists = false;
  GridTableau witness;
};

/// Decides whether a tableau with sum of labels rho = r - n*n and both side
/// sums >= r exists. Exhaustive with dominance pruning; "no" refutes border
/// rank r when the table rows are valid upper bounds.
TableauSearchResult tableau_search(int n, const ContributionTable& table, int r);

/// First r >= n*n that tableau_search cannot refute: the reported bound.
long search_bound(int n, const ContributionTable& table, int r_cap = 0);

}  // namespace borank

#include "borank/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace borank {

PartitionStats partition_props(const std::vector<int>& lambda) {
  PartitionStats st;
  st.lambda = lambda;
  while (!st.lambda.empty() && st.lambda.back() == 0) st.lambda.pop_back();
  for (std::size_t i = 1; i < st.lambda.size(); ++i)
    if (st.lambda[i] > st.lambda[i - 1]) throw std::invalid_argument("not a partition");
  st.length = static_cast<int>(st.lambda.size());
  for (std::size_t i = 0; i < st.lambda.size(); ++i) {
    st.n_lambda += static_cast<long>(i) * st.lambda[i];
    st.size += st.lambda[i];
  }
  const int cols = st.lambda.empty() ? 0 : st.lambda[0];
  st.conjugate.assign(cols, 0);
  for (int c = 0; c < cols; ++c)
    for (int x : st.lambda)
      if (x > c) ++st.conjugate[c];
  return st;
}

bool singlebound_weak(const std::vector<int>& lambda) {
  PartitionStats st = partition_props(lambda);
  const long l1 = st.lambda.empty() ? 0 : st.lambda[0];
  const long c1 = st.conjugate.empty() ? 0 : st.conjugate[0];
  // 8 n(lambda) <= (|lambda| + lambda'_1 - lambda_1)^2
  const long rhs = (st.size + c1 - l1) * (st.size + c1 - l1);
  return 8 * st.n_lambda <= rhs;
}

bool singlebound_check(const std::vector<int>& lambda) {
  PartitionStats st = partition_props(lambda);
  const long l1 = st.lambda.empty() ? 0 : st.lambda[0];
  const long c1 = st.conjugate.empty() ? 0 : st.conjugate[0];
  // sharpened: 8 n(lambda) <= (...)^2 - 1 off the excluded shapes (m, 2)
  const long rhs = (st.size + c1 - l1) * (st.size + c1 - l1);
  return 8 * st.n_lambda <= rhs - 1;
}

Rational opt_bound(const std::vector<Rational>& c, const std::vector<Rational>& d,
                   const Rational& rho) {
  if (c.size() != d.size() || c.empty()) throw std::invalid_argument("opt_bound: bad input");
  Rational best;
  bool first = true;
  Rational cj(0), dj(0);
  for (std::size_t j = 1; j <= c.size(); ++j) {
    cj += c[j - 1];
    dj += d[j - 1];
    Rational value = rho * rho * cj / rat(4 * static_cast<long>(j) * static_cast<long>(j)) +
                     rho * dj / rat(static_cast<long>(j));
    if (first || value > best) {
      best = value;
      first = false;
    }
  }
  return best;
}

std::vector<std::vector<int>> partitions_of(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // descending parts
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

}  // namespace borank

#pragma once

#include <vector>

#include "borank/rational.hpp"

namespace borank {

/// Partition bookkeeping: n(lambda) = sum (i-1) lambda_i, the conjugate, and
/// the length.
struct PartitionStats {
  std::vector<int> lambda;
  long n_lambda = 0;
  std::vector<int> conjugate;
  int length = 0;
  long size = 0;
};

PartitionStats partition_props(const std::vector<int>& lambda);

/// n(lambda) <= (|lambda| + lambda'_1 - lambda_1)^2 / 8 - 1/8 for shapes
/// other than (m, 2); the weak bound without the -1/8 holds always.
bool singlebound_check(const std::vector<int>& lambda);
bool singlebound_weak(const std::vector<int>& lambda);

/// max over 1 <= j <= k of rho^2 C_j / (4 j^2) + rho D_j / j with prefix
/// sums C, D.
Rational opt_bound(const std::vector<Rational>& c, const std::vector<Rational>& d,
                   const Rational& rho);

/// All partitions of m (for brute-force verifications).
std::vector<std::vector<int>> partitions_of(int m);

}  // namespace borank

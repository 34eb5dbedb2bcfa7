#include "borank/thresholds.hpp"

#include <stdexcept>

namespace borank {

Rational closed_form_term(const ContributionTable& table, int j, long rho, long n) {
  const TableRow& row = table.row(j);
  Rational a = rat(row.a);
  Rational b = rat(row.b.at(n));
  return a * rat(rho) * rat(rho) / rat(8L * j * j) + (a + b) * rat(rho) / rat(j);
}

Rational closed_form_bound(const ContributionTable& table, long rho, long n) {
  Rational best;
  bool first = true;
  for (int j = 1; j <= table.k(); ++j) {
    Rational v = closed_form_term(table, j, rho, n);
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  return best;
}

long closed_form_bound_at(int n, const ContributionTable& table) {
  for (long r = static_cast<long>(n) * n;; ++r) {
    const long rho = r - static_cast<long>(n) * n;
    if (!(closed_form_bound(table, rho, n) < rat(r))) return r;
    if (rho > 100L * n) throw std::logic_error("closed_form_bound_at: runaway ladder");
  }
}

long threshold_2nn(const Rational& eps) {
  if (!(eps > rat(0) && eps < rat(1, 4)))
    throw std::invalid_argument("threshold_2nn: epsilon must lie in (0, 1/4)");
  // n > (6/eps) (3 sqrt6 + 6 - eps) / (6 sqrt6 - eps)
  const long d = 6;
  QuadExt e = QuadExt::rational(eps, d);
  QuadExt num = QuadExt(rat(6), rat(3), d) - e;           // 6 + 3 sqrt6 - eps
  QuadExt den = QuadExt(rat(0), rat(6), d) - e;           // 6 sqrt6 - eps
  QuadExt value = QuadExt::rational(rat(6), d) / e * num / den;
  return value.floor_value() + 1;
}

long threshold_3nn(const Rational& eps) {
  if (!(eps > rat(0) && eps < rat(1, 2)))
    throw std::invalid_argument("threshold_3nn: epsilon must lie in (0, 1/2)");
  // n > (64 / (3 eps)) (16 sqrt78 - 96 - 21 eps) / (32 sqrt78 - 21 eps)
  const long d = 78;
  QuadExt e = QuadExt::rational(eps, d);
  QuadExt num = QuadExt(rat(-96), rat(16), d) - QuadExt::rational(rat(21), d) * e;
  QuadExt den = QuadExt(rat(0), rat(32), d) - QuadExt::rational(rat(21), d) * e;
  QuadExt value = QuadExt::rational(rat(64, 3), d) / e * num / den;
  return value.floor_value() + 1;
}

long lickteig_shift(long base_bound, int steps) {
  if (steps < 0) throw std::invalid_argument("lickteig_shift: negative steps");
  return base_bound + steps;
}

long hook_kernel(long sigma, long tau) {
  const long st = sigma * tau;
  return st * (st + 1) / 2 + st;
}

long barrier_check(long n) {
  // hook with tau = 1 fails the tests at r = n^2 + 2 sigma exactly when
  // hook_kernel(sigma, 1) < n^2 + 2 sigma, i.e. sigma(sigma-1) < 2 n^2
  long sigma = 0;
  while ((sigma + 1) * sigma < 2 * n * n) ++sigma;
  return 2 * sigma;  // rho = 2 * sigma_max
}

}  // namespace borank

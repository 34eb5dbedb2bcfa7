#pragma once

#include <cmath>
#include <stdexcept>

#include "borank/rational.hpp"

namespace borank {

/// Exact arithmetic in Q(sqrt(D)) for a fixed non-square D > 0. Used for the
/// threshold formulas with D = 6 and D = 78; avoids floating-point
/// acceptance flakiness.
struct QuadExt {
  Rational p, q;  // p + q*sqrt(D)
  long d = 0;

  QuadExt() = default;
  QuadExt(Rational p_, Rational q_, long d_) : p(std::move(p_)), q(std::move(q_)), d(d_) {}
  static QuadExt rational(const Rational& r, long d) { return QuadExt(r, Rational(0), d); }
  static QuadExt root(long d) { return QuadExt(Rational(0), Rational(1), d); }

  QuadExt operator+(const QuadExt& o) const { return {p + o.p, q + o.q, d}; }
  QuadExt operator-(const QuadExt& o) const { return {p - o.p, q - o.q, d}; }
  QuadExt operator*(const QuadExt& o) const {
    return {p * o.p + q * o.q * rat(d), p * o.q + q * o.p, d};
  }
  QuadExt inverse() const {
    Rational norm = p * p - q * q * rat(d);
    if (is_zero(norm)) throw std::domain_error("QuadExt: zero norm");
    return {p / norm, -q / norm, d};
  }
  QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }

  int sign() const {
    const int sp = sgn(p), sq = sgn(q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // compare p^2 against q^2 d
    Rational lhs = p * p, rhs = q * q * rat(d);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sp : sq;
  }
  bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
  bool operator>(const QuadExt& o) const { return (*this - o).sign() > 0; }
  bool operator==(const QuadExt& o) const { return p == o.p && q == o.q && d == o.d; }

  /// Largest integer <= value (binary search against exact comparisons).
  long floor_value() const {
    // bracket using a crude double estimate, then correct exactly
    double approx = p.get_d() + q.get_d() * std::sqrt(static_cast<double>(d));
    long f = static_cast<long>(std::floor(approx)) - 2;
    while (QuadExt::rational(rat(f + 1), d) < *this || QuadExt::rational(rat(f + 1), d) == *this) ++f;
    while (QuadExt::rational(rat(f), d) > *this) --f;
    return f;
  }
};

}  // namespace borank

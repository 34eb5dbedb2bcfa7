#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "borank/rational.hpp"

namespace borank {

/// Variable table shared by the polynomials of one computation. Variables
/// are only ever appended, so exponent vectors of older polynomials stay
/// valid (missing trailing exponents read as zero).
struct PolyRing {
  std::vector<std::string> vars;

  int index_of(const std::string& name) const;
  int add_var(const std::string& name);
  std::string fresh_var(const std::string& prefix);
};

using RingPtr = std::shared_ptr<PolyRing>;

using Exponents = std::vector<unsigned>;

/// Graded lexicographic, highest first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with rational coefficients and a fixed
/// graded-lex term order.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, const Rational& c);

  static Poly constant(RingPtr ring, const Rational& c) { return Poly(std::move(ring), c); }
  static Poly variable(RingPtr ring, int var_index, unsigned power = 1);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_value() const;

  int total_degree() const;
  unsigned degree_in(int var) const;
  bool depends_on(int var) const;
  /// Indices of variables that actually occur.
  std::vector<int> support_vars() const;

  const std::map<Exponents, Rational, GrlexGreater>& terms() const { return terms_; }
  void set_term(const Exponents& e, const Rational& c);
  void add_term(const Exponents& e, const Rational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const;

  /// Leading coefficient/monomial in graded lex.
  const Rational& leading_coeff() const;
  const Exponents& leading_exponents() const;
  /// Scales so the leading coefficient is 1.
  Poly monic() const;

  /// If this = c*x + g with c a nonzero constant and g free of x, returns
  /// the variable index x; -1 otherwise.
  int solvable_linear_var() const;
  /// Solves c*x + g = 0 for x; precondition solvable_linear_var() == var.
  Poly solve_for(int var) const;

  Poly substitute(int var, const Poly& value) const;
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  /// Exact division; returns false if the division is not exact.
  bool divide_exact(const Poly& divisor, Poly* quotient) const;
  /// Largest monomial (with coefficient 1) dividing every term.
  Exponents monomial_content() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::map<Exponents, Rational, GrlexGreater> terms_;
};

Poly parse_poly(const RingPtr& ring, const std::string& text);

/// gcd of exponent profile helpers
Exponents exp_add(const Exponents& a, const Exponents& b);
/// a - b; returns false if not divisible.
bool exp_sub(const Exponents& a, const Exponents& b, Exponents* out);

}  // namespace borank

#include "borank/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace borank {

int PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

int PolyRing::add_var(const std::string& name) {
  int idx = index_of(name);
  if (idx >= 0) return idx;
  vars.push_back(name);
  return static_cast<int>(vars.size()) - 1;
}

std::string PolyRing::fresh_var(const std::string& prefix) {
  for (int i = 0;; ++i) {
    std::string name = prefix + std::to_string(i);
    if (index_of(name) < 0) {
      vars.push_back(name);
      return name;
    }
  }
}

namespace {
unsigned exp_at(const Exponents& e, std::size_t i) { return i < e.size() ? e[i] : 0u; }
int exp_total(const Exponents& e) {
  int t = 0;
  for (unsigned x : e) t += static_cast<int>(x);
  return t;
}
}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int ta = exp_total(a), tb = exp_total(b);
  if (ta != tb) return ta > tb;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned xa = exp_at(a, i), xb = exp_at(b, i);
    if (xa != xb) return xa > xb;
  }
  return false;
}

Poly::Poly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
  if (!borank::is_zero(c)) terms_[Exponents{}] = c;
}

Poly Poly::variable(RingPtr ring, int var_index, unsigned power) {
  Poly p(std::move(ring));
  Exponents e(var_index + 1, 0u);
  e[var_index] = power;
  p.terms_[e] = Rational(1);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
}

Rational Poly::constant_value() const {
  for (const auto& [e, c] : terms_)
    if (exp_total(e) == 0) return c;
  return Rational(0);
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : exp_total(terms_.begin()->first);
}

unsigned Poly::degree_in(int var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_at(e, var));
  return d;
}

bool Poly::depends_on(int var) const { return degree_in(var) > 0; }

std::vector<int> Poly::support_vars() const {
  std::vector<int> out;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && std::find(out.begin(), out.end(), static_cast<int>(i)) == out.end())
        out.push_back(static_cast<int>(i));
  std::sort(out.begin(), out.end());
  return out;
}

void Poly::set_term(const Exponents& e, const Rational& c) {
  if (borank::is_zero(c)) terms_.erase(e);
  else terms_[e] = c;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!borank::is_zero(c)) terms_[e] = c;
  } else {
    it->second += c;
    if (borank::is_zero(it->second)) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  out += o;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  out -= o;
  return out;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly out(ring_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out(ring_ ? ring_ : o.ring_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(exp_add(e1, e2), c1 * c2);
  return out;
}

Poly Poly::operator*(const Rational& c) const {
  Poly out(ring_);
  if (borank::is_zero(c)) return out;
  for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
  return out;
}

bool Poly::operator==(const Poly& o) const { return terms_ == o.terms_; }

const Rational& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
  return terms_.begin()->second;
}

const Exponents& Poly::leading_exponents() const {
  if (terms_.empty()) throw std::logic_error("leading_exponents of zero polynomial");
  return terms_.begin()->first;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_coeff();
  return *this * inv;
}

int Poly::solvable_linear_var() const {
  // look for a term c*x with every other term free of x
  for (const auto& [e, c] : terms_) {
    if (exp_total(e) != 1) continue;
    int var = -1;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == 1) var = static_cast<int>(i);
    bool ok = true;
    for (const auto& [e2, c2] : terms_) {
      if (e2 == e) continue;
      if (exp_at(e2, var) > 0) { ok = false; break; }
    }
    if (ok) return var;
  }
  return -1;
}

Poly Poly::solve_for(int var) const {
  Exponents key(var + 1, 0u);
  key[var] = 1;
  Rational coeff(0);
  Poly rest(ring_);
  for (const auto& [e, c] : terms_) {
    Exponents norm = e;
    while (!norm.empty() && norm.back() == 0) norm.pop_back();
    Exponents knorm = key;
    while (!knorm.empty() && knorm.back() == 0) knorm.pop_back();
    if (norm == knorm) coeff = c;
    else rest.add_term(e, c);
  }
  if (borank::is_zero(coeff)) throw std::logic_error("solve_for: variable not solvable");
  return rest * (Rational(-1) / coeff);
}

Poly Poly::substitute(int var, const Poly& value) const {
  Poly out(ring_);
  for (const auto& [e, c] : terms_) {
    const unsigned k = exp_at(e, var);
    Exponents rest = e;
    if (static_cast<std::size_t>(var) < rest.size()) rest[var] = 0;
    Poly term(ring_);
    term.add_term(rest, c);
    for (unsigned i = 0; i < k; ++i) term = term * value;
    out += term;
  }
  return out;
}

Rational Poly::evaluate(const std::map<std::string, Rational>& assignment) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = assignment.find(ring_->vars[i]);
      if (it == assignment.end())
        throw std::invalid_argument("evaluate: missing variable " + ring_->vars[i]);
      for (unsigned k = 0; k < e[i]; ++k) t *= it->second;
    }
    acc += t;
  }
  return acc;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents out(std::max(a.size(), b.size()), 0u);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = exp_at(a, i) + exp_at(b, i);
  return out;
}

bool exp_sub(const Exponents& a, const Exponents& b, Exponents* out) {
  Exponents r(std::max(a.size(), b.size()), 0u);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const unsigned xa = exp_at(a, i), xb = exp_at(b, i);
    if (xb > xa) return false;
    r[i] = xa - xb;
  }
  *out = std::move(r);
  return true;
}

bool Poly::divide_exact(const Poly& divisor, Poly* quotient) const {
  if (divisor.is_zero()) return false;
  Poly rem = *this;
  Poly q(ring_);
  while (!rem.is_zero()) {
    Exponents qe;
    if (!exp_sub(rem.leading_exponents(), divisor.leading_exponents(), &qe)) return false;
    Rational qc = rem.leading_coeff() / divisor.leading_coeff();
    Poly mono(ring_);
    mono.add_term(qe, qc);
    q += mono;
    rem -= mono * divisor;
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

Exponents Poly::monomial_content() const {
  if (terms_.empty()) return {};
  Exponents content = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < content.size(); ++i) content[i] = std::min(content[i], exp_at(e, i));
  while (!content.empty() && content.back() == 0) content.pop_back();
  return content;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational ac = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    const bool has_vars = exp_total(e) > 0;
    const bool unit_coeff = ac == 1;
    if (!unit_coeff || !has_vars) os << ac.get_str();
    bool star = !unit_coeff || !has_vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << ring_->vars[i];
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

namespace {

struct Tokenizer {
  const std::string& s;
  std::size_t pos = 0;
  void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
  bool done() { skip_ws(); return pos >= s.size(); }
  char peek() { skip_ws(); return s[pos]; }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
  Tokenizer tk{text};
  Poly out(ring);
  int sign = 1;
  bool expect_term = true;
  while (!tk.done()) {
    char c = tk.peek();
    if (c == '+') { ++tk.pos; sign = 1; expect_term = true; continue; }
    if (c == '-') { ++tk.pos; sign = -sign; expect_term = true; continue; }
    if (!expect_term) throw std::invalid_argument("parse_poly: unexpected token in " + text);
    // term: [rational] {*? var [^k]}*
    Rational coeff(1);
    Exponents exps;
    bool saw_anything = false;
    while (!tk.done()) {
      char d = tk.peek();
      if (d == '+' || d == '-') break;
      if (d == '*') { ++tk.pos; continue; }
      if (std::isdigit(static_cast<unsigned char>(d))) {
        std::size_t start = tk.pos;
        while (tk.pos < tk.s.size() &&
               (std::isdigit(static_cast<unsigned char>(tk.s[tk.pos])) || tk.s[tk.pos] == '/'))
          ++tk.pos;
        coeff *= parse_rational(tk.s.substr(start, tk.pos - start));
        saw_anything = true;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(d)) || d == '_') {
        std::size_t start = tk.pos;
        while (tk.pos < tk.s.size() &&
               (std::isalnum(static_cast<unsigned char>(tk.s[tk.pos])) || tk.s[tk.pos] == '_'))
          ++tk.pos;
        std::string name = tk.s.substr(start, tk.pos - start);
        int var = ring->add_var(name);
        unsigned power = 1;
        tk.skip_ws();
        if (tk.pos < tk.s.size() && tk.s[tk.pos] == '^') {
          ++tk.pos;
          tk.skip_ws();
          std::size_t ps = tk.pos;
          while (tk.pos < tk.s.size() && std::isdigit(static_cast<unsigned char>(tk.s[tk.pos]))) ++tk.pos;
          power = static_cast<unsigned>(std::stoul(tk.s.substr(ps, tk.pos - ps)));
        }
        if (exps.size() <= static_cast<std::size_t>(var)) exps.resize(var + 1, 0u);
        exps[var] += power;
        saw_anything = true;
        continue;
      }
      throw std::invalid_argument(std::string("parse_poly: bad character '") + d + "' in " + text);
    }
    if (!saw_anything) throw std::invalid_argument("parse_poly: empty term in " + text);
    Poly term(ring);
    term.add_term(exps, coeff * sign);
    out += term;
    sign = 1;
    expect_term = false;
  }
  return out;
}

}  // namespace borank

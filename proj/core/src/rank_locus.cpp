#include "borank/rank_locus.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace borank {

namespace {

using Rows = std::vector<std::vector<std::pair<int, Poly>>>;

struct Work {
  Rows rows;
  int need = 0;
  std::vector<std::string> trace;
  std::vector<Poly> inverted;
};

void drop_zero_rows(Rows& rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const auto& r) { return r.empty(); }),
             rows.end());
}

std::size_t entry_count(const Rows& rows) {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

int col_count(const Rows& rows) {
  std::set<int> cols;
  for (const auto& r : rows)
    for (const auto& [c, p] : r) cols.insert(c);
  return static_cast<int>(cols.size());
}

// Eliminates column `col` from every row except `prow` by cross-multiplying
// with the pivot entry, then removes the pivot row. Valid wherever the pivot
// is nonzero.
void pivot_eliminate(Rows& rows, std::size_t prow, int col, const Poly& pivot, bool scale_free) {
  const auto piv_row = rows[prow];
  Rows next;
  next.reserve(rows.size() - 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == prow) continue;
    const auto& row = rows[i];
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& pr, int c) { return pr.first < c; });
    if (it == row.end() || it->first != col) {
      next.push_back(row);
      continue;
    }
    const Poly q = it->second;
    // new_row = pivot*row - q*piv_row (entry at `col` cancels)
    std::map<int, Poly> acc;
    for (const auto& [c, p] : row) {
      if (c == col) continue;
      acc[c] = scale_free && pivot.is_constant() ? p * pivot.constant_value() : p * pivot;
    }
    for (const auto& [c, p] : piv_row) {
      if (c == col) continue;
      auto& slot = acc[c];
      slot -= p * q;
    }
    std::vector<std::pair<int, Poly>> out;
    out.reserve(acc.size());
    for (auto& [c, p] : acc)
      if (!p.is_zero()) out.emplace_back(c, std::move(p));
    if (!out.empty()) next.push_back(std::move(out));
  }
  rows = std::move(next);
}

// (row index, col) of a nonzero-constant entry, preferring sparse rows.
bool find_constant_entry(const Rows& rows, std::size_t* r, int* c) {
  bool found = false;
  std::size_t best_r = 0;
  int best_c = 0;
  std::size_t best_sz = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [col, p] : rows[i]) {
      if (!p.is_constant()) continue;
      if (!found || rows[i].size() < best_sz ||
          (rows[i].size() == best_sz && (col < best_c || (col == best_c && i < best_r)))) {
        found = true;
        best_r = i;
        best_c = col;
        best_sz = rows[i].size();
      }
    }
  }
  if (found) { *r = best_r; *c = best_c; }
  return found;
}

bool find_branch_entry(const Rows& rows, std::size_t* r, int* c) {
  bool found = false;
  int best_deg = 0;
  std::size_t best_terms = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [col, p] : rows[i]) {
      const int deg = p.total_degree();
      const std::size_t nt = p.terms().size();
      if (!found || deg < best_deg || (deg == best_deg && nt < best_terms)) {
        found = true;
        best_deg = deg;
        best_terms = nt;
        *r = i;
        *c = col;
      }
    }
  }
  return found;
}

Poly minor_det(const Rows& rows, const std::vector<std::size_t>& ri,
               const std::vector<int>& ci, const RingPtr& ring) {
  const std::size_t k = ri.size();
  // cofactor expansion along the first selected row
  if (k == 1) {
    const auto& row = rows[ri[0]];
    auto it = std::lower_bound(row.begin(), row.end(), ci[0],
                               [](const auto& pr, int c) { return pr.first < c; });
    if (it != row.end() && it->first == ci[0]) return it->second;
    return Poly(ring);
  }
  Poly det(ring);
  std::vector<std::size_t> sub_r(ri.begin() + 1, ri.end());
  for (std::size_t j = 0; j < k; ++j) {
    const auto& row = rows[ri[0]];
    auto it = std::lower_bound(row.begin(), row.end(), ci[j],
                               [](const auto& pr, int c) { return pr.first < c; });
    if (it == row.end() || it->first != ci[j]) continue;
    std::vector<int> sub_c;
    sub_c.reserve(k - 1);
    for (std::size_t l = 0; l < k; ++l)
      if (l != j) sub_c.push_back(ci[l]);
    Poly cof = minor_det(rows, sub_r, sub_c, ring);
    if (j % 2 == 0) det += it->second * cof;
    else det -= it->second * cof;
  }
  return det;
}

constexpr std::size_t kMinorsBudget = 4000;
constexpr int kMinorsMaxOrder = 6;

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > (1ULL << 40)) return 1ULL << 40;
    r = r * (n - i) / (i + 1);
  }
  return r;
}

void all_subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] + (k - i) < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

void locus_impl(Work work, const RingPtr& ring, std::vector<LocusRecord>& out);

void emit_record(Work& work, const RingPtr& ring, std::vector<Poly> gens,
                 std::vector<LocusRecord>& out) {
  gens = normalize_generators(std::move(gens));
  for (const Poly& g : gens)
    if (g.is_constant() && !g.is_zero()) return;  // unit ideal: empty branch
  LocusRecord rec;
  rec.generators = std::move(gens);
  rec.inverted = normalize_generators(work.inverted);
  rec.branch_trace = work.trace;
  out.push_back(std::move(rec));
}

void locus_impl(Work work, const RingPtr& ring, std::vector<LocusRecord>& out) {
  drop_zero_rows(work.rows);
  if (work.need <= 0) return;  // rank < need impossible: empty locus

  // (1) eliminate by nonzero constant entries
  while (work.need > 0) {
    std::size_t r;
    int c;
    if (!find_constant_entry(work.rows, &r, &c)) break;
    Poly pivot = Poly(ring);
    for (const auto& [col, p] : work.rows[r])
      if (col == c) pivot = p;
    pivot_eliminate(work.rows, r, c, pivot, true);
    drop_zero_rows(work.rows);
    --work.need;
    work.trace.push_back("pivot_const col=" + std::to_string(c));
  }
  if (work.need <= 0) return;
  if (work.rows.empty()) {
    // rank is 0 < need everywhere that remains: whole branch domain
    emit_record(work, ring, {}, out);
    return;
  }

  const int nr = static_cast<int>(work.rows.size());
  const int nc = col_count(work.rows);
  if (work.need > std::min(nr, nc)) {
    // rank can never reach need: locus is everything on this branch
    emit_record(work, ring, {}, out);
    return;
  }

  // (2) minors base case
  if (work.need <= kMinorsMaxOrder &&
      binom(nr, work.need) * binom(nc, work.need) <= kMinorsBudget) {
    std::vector<int> cols;
    {
      std::set<int> cs;
      for (const auto& r : work.rows)
        for (const auto& [c, p] : r) cs.insert(c);
      cols.assign(cs.begin(), cs.end());
    }
    std::vector<Poly> gens;
    bool unit = false;
    all_subsets(nr, work.need, [&](const std::vector<std::size_t>& ri) {
      if (unit) return;
      all_subsets(cols.size(), work.need, [&](const std::vector<std::size_t>& cj) {
        if (unit) return;
        std::vector<int> ci(cj.size());
        for (std::size_t i = 0; i < cj.size(); ++i) ci[i] = cols[cj[i]];
        Poly d = minor_det(work.rows, ri, ci, ring);
        if (d.is_constant()) {
          if (!d.is_zero()) unit = true;
          return;
        }
        gens.push_back(std::move(d));
      });
    });
    if (unit) return;  // some minor is a nonzero constant: full rank >= need
    work.trace.push_back("minors k=" + std::to_string(work.need));
    emit_record(work, ring, std::move(gens), out);
    return;
  }

  // (3) branch on the smallest-degree entry p
  std::size_t br;
  int bc;
  find_branch_entry(work.rows, &br, &bc);
  Poly p(ring);
  for (const auto& [col, q] : work.rows[br])
    if (col == bc) p = q;

  // branch A: pass to the quotient by p
  {
    Work qa = work;
    const int lin = p.solvable_linear_var();
    if (lin >= 0) {
      Poly value = p.solve_for(lin);
      for (auto& row : qa.rows) {
        std::vector<std::pair<int, Poly>> next;
        for (auto& [c, q] : row) {
          Poly s = q.depends_on(lin) ? q.substitute(lin, value) : q;
          if (!s.is_zero()) next.emplace_back(c, std::move(s));
        }
        row = std::move(next);
      }
      qa.trace.push_back("quotient subst " + ring->vars[lin] + " := " + value.to_string());
    } else {
      auto& row = qa.rows[br];
      row.erase(std::remove_if(row.begin(), row.end(),
                               [&](const auto& pr) { return pr.first == bc; }),
                row.end());
      qa.trace.push_back("quotient zero entry (" + std::to_string(br) + "," + std::to_string(bc) + ")");
    }
    std::vector<LocusRecord> sub;
    locus_impl(std::move(qa), ring, sub);
    for (LocusRecord& rec : sub) {
      rec.generators.push_back(p.monic());
      rec.generators = normalize_generators(std::move(rec.generators));
      out.push_back(std::move(rec));
    }
  }

  // branch B: localize at p and pivot
  {
    Work qb = work;
    pivot_eliminate(qb.rows, br, bc, p, false);
    drop_zero_rows(qb.rows);
    --qb.need;
    qb.inverted.push_back(p.monic());
    qb.trace.push_back("localize at " + p.to_string());
    locus_impl(std::move(qb), ring, out);
  }
}

}  // namespace

std::vector<Poly> normalize_generators(std::vector<Poly> gens) {
  std::vector<Poly> out;
  for (Poly& g : gens) {
    if (g.is_zero()) continue;
    out.push_back(g.monic());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.to_string() < b.to_string();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LocusRecord> rank_locus(const PolyMatrix& m, int r_bound) {
  Work w;
  w.need = r_bound;
  w.rows.resize(m.nrows());
  for (int r = 0; r < m.nrows(); ++r) w.rows[r] = m.row(r);
  std::vector<LocusRecord> out;
  locus_impl(std::move(w), m.ring(), out);
  return out;
}

SystemState simplify_system(const RingPtr& ring, std::vector<Poly> eqs) {
  SystemState st;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Poly> next;
    for (Poly& e : eqs) {
      for (const auto& [var, val] : st.substitutions)
        if (e.depends_on(var)) e = e.substitute(var, val);
      if (e.is_zero()) continue;
      if (e.is_constant()) {
        st.inconsistent = true;
        return st;
      }
      next.push_back(e);
    }
    eqs = std::move(next);
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const Poly& e = eqs[i];
      int var = e.solvable_linear_var();
      if (var < 0 && e.terms().size() == 1) {
        // single monomial c*x^k: the only zero is x = 0
        const auto& exps = e.leading_exponents();
        int nzvars = 0, last = -1;
        for (std::size_t j = 0; j < exps.size(); ++j)
          if (exps[j] > 0) { ++nzvars; last = static_cast<int>(j); }
        if (nzvars == 1) {
          st.substitutions.emplace_back(last, Poly(ring));
          eqs.erase(eqs.begin() + i);
          changed = true;
          break;
        }
      }
      if (var >= 0) {
        Poly value = e.solve_for(var);
        st.substitutions.emplace_back(var, value);
        eqs.erase(eqs.begin() + i);
        changed = true;
        break;
      }
    }
  }
  st.residual = normalize_generators(std::move(eqs));
  return st;
}

namespace {

std::vector<Integer> divisors_up_to(const Integer& n, std::size_t cap) {
  std::vector<Integer> out;
  Integer a = abs(n);
  if (a == 0) return out;
  for (Integer d(1); d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
      if (out.size() > cap) return {};
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Rational roots of a univariate polynomial in ring var `var`. Returns true
// iff the polynomial factors completely into rational linear factors; roots
// are reported without multiplicity.
bool rational_roots_complete(const Poly& f, int var, std::vector<Rational>* roots) {
  roots->clear();
  // collect integerized coefficients by degree
  unsigned deg = f.degree_in(var);
  std::vector<Rational> coef(deg + 1, Rational(0));
  for (const auto& [e, c] : f.terms()) {
    unsigned k = (static_cast<std::size_t>(var) < e.size()) ? e[var] : 0u;
    int total = 0;
    for (unsigned x : e) total += x;
    if (static_cast<int>(k) != total) return false;  // not univariate
    coef[k] += c;
  }
  Integer lcm(1);
  for (const auto& c : coef) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ic(deg + 1);
  for (unsigned k = 0; k <= deg; ++k) ic[k] = Integer(coef[k] * Rational(lcm));
  // strip roots at zero
  unsigned remaining = deg;
  unsigned low = 0;
  while (low <= deg && ic[low] == 0) ++low;
  if (low > 0) roots->push_back(Rational(0));
  std::vector<Integer> work(ic.begin() + low, ic.end());
  remaining = static_cast<unsigned>(work.size()) - 1;
  if (remaining == 0) return true;
  if (abs(work.front()) > Integer("1000000000000") || abs(work.back()) > Integer("1000000000000"))
    return false;
  auto dividers_p = divisors_up_to(work.front(), 512);
  auto dividers_q = divisors_up_to(work.back(), 512);
  if (dividers_p.empty() || dividers_q.empty()) return false;
  auto eval_and_deflate = [&](const Rational& r) -> bool {
    // synthetic division by (x - r); true if remainder is zero
    std::vector<Integer> num(remaining + 1);
    // evaluate via Horner over rationals
    Rational acc(0);
    for (int k = static_cast<int>(remaining); k >= 0; --k) acc = acc * r + Rational(work[k]);
    if (!is_zero(acc)) return false;
    // deflate with rationals, then re-integerize
    std::vector<Rational> q(remaining);
    Rational carry(0);
    for (int k = static_cast<int>(remaining); k >= 1; --k) {
      carry = Rational(work[k]) + carry * r;
      q[k - 1] = carry;
    }
    Integer l(1);
    for (const auto& c : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    work.resize(remaining);
    for (unsigned k = 0; k < remaining; ++k) work[k] = Integer(q[k] * Rational(l));
    --remaining;
    return true;
  };
  while (remaining > 0) {
    bool found = false;
    for (const Integer& p : dividers_p) {
      for (const Integer& q : dividers_q) {
        for (int s : {1, -1}) {
          Rational r(p * s, q);
          r.canonicalize();
          if (eval_and_deflate(r)) {
            if (std::find(roots->begin(), roots->end(), r) == roots->end()) roots->push_back(r);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return false;  // irrational/complex factor remains
  }
  return true;
}

struct PointAccum {
  bool stuck = false;
  bool free_component = false;
  std::vector<std::map<std::string, Rational>> points;
};

constexpr int kMaxSolveDepth = 64;

void solve_rec(const RingPtr& ring, std::vector<Poly> eqs,
               const std::vector<Poly>& inverted,
               std::vector<std::pair<int, Poly>> subs_so_far,
               const std::vector<std::string>& free_vars, int depth, PointAccum& acc);

void finish_branch(const RingPtr& ring, const std::vector<Poly>& inverted,
                   std::vector<std::pair<int, Poly>>& subs,
                   const std::vector<std::string>& free_vars, PointAccum& acc) {
  // remaining variables unconstrained?
  std::set<int> fixed;
  for (auto& [v, p] : subs) fixed.insert(v);
  std::vector<int> unresolved;
  for (const std::string& name : free_vars) {
    int idx = ring->index_of(name);
    if (idx >= 0 && !fixed.count(idx)) unresolved.push_back(idx);
  }
  if (!unresolved.empty()) {
    // a positive-dimensional solution set, unless an inverted poly vanishes
    // identically on it
    for (const Poly& inv : inverted) {
      Poly v = inv;
      for (auto it = subs.rbegin(); it != subs.rend(); ++it)
        if (v.depends_on(it->first)) v = v.substitute(it->first, it->second);
      if (v.is_zero()) return;  // excluded by the inverted assumption
    }
    acc.free_component = true;
    return;
  }
  // back-substitute to a full rational point; substitution values can only
  // involve variables fixed later in the list
  std::map<std::string, Rational> pt;
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    Rational val;
    try {
      val = it->second.evaluate(pt);
    } catch (const std::invalid_argument&) {
      acc.stuck = true;
      return;
    }
    pt[ring->vars[it->first]] = val;
  }
  for (const Poly& inv : inverted) {
    Rational v;
    try {
      v = inv.evaluate(pt);
    } catch (const std::invalid_argument&) {
      acc.stuck = true;
      return;
    }
    if (is_zero(v)) return;
  }
  std::map<std::string, Rational> restricted;
  for (const std::string& name : free_vars) {
    auto found = pt.find(name);
    if (found == pt.end()) {
      acc.stuck = true;
      return;
    }
    restricted[name] = found->second;
  }
  if (std::find(acc.points.begin(), acc.points.end(), restricted) == acc.points.end())
    acc.points.push_back(restricted);
}

// divides out factors that are assumed nonzero on the branch; returns false
// if the equation reduces to a nonzero constant (no solutions there)
bool discharge_inverted(const RingPtr& ring, const std::vector<Poly>& inverted, Poly* eq) {
  bool divided = true;
  while (divided && !eq->is_constant()) {
    divided = false;
    for (const Poly& inv : inverted) {
      if (inv.is_constant()) continue;
      Poly q(ring);
      if (eq->divide_exact(inv, &q)) {
        *eq = std::move(q);
        divided = true;
        break;
      }
    }
  }
  return !(eq->is_constant() && !eq->is_zero());
}

// enumerates normalized small-coefficient linear polynomials in the support
// variables of g and splits off every exact linear factor; returns the
// factors (without multiplicity) and the remaining cofactor
bool split_linear_factors(const RingPtr& ring, const Poly& g, std::vector<Poly>* factors,
                          Poly* residual) {
  factors->clear();
  *residual = g;
  std::vector<int> vars = g.support_vars();
  if (vars.empty() || vars.size() > 4) return false;
  const int lo = vars.size() <= 2 ? -2 : -1;
  const int hi = vars.size() <= 2 ? 2 : 1;
  std::vector<Poly> candidates;
  std::vector<int> coeff(vars.size() + 1, lo);
  while (true) {
    // candidate: coeff[0] + sum coeff[i+1] * x_i, normalized: first nonzero
    // variable coefficient positive, not constant
    int firstnz = 0;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (coeff[i + 1] != 0) { firstnz = coeff[i + 1]; break; }
    if (firstnz > 0) {
      Poly cand = Poly::constant(ring, rat(coeff[0]));
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (coeff[i + 1] != 0) cand += Poly::variable(ring, vars[i]) * rat(coeff[i + 1]);
      candidates.push_back(std::move(cand));
    }
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] > hi) coeff[i++] = lo;
    if (i == coeff.size()) break;
  }
  for (const Poly& cand : candidates) {
    bool divided = false;
    Poly q(ring);
    while (!residual->is_constant() && residual->divide_exact(cand, &q)) {
      *residual = q;
      divided = true;
    }
    if (divided) factors->push_back(cand);
    if (residual->is_constant()) break;
  }
  return !factors->empty();
}

void solve_rec(const RingPtr& ring, std::vector<Poly> eqs,
               const std::vector<Poly>& inverted,
               std::vector<std::pair<int, Poly>> subs_so_far,
               const std::vector<std::string>& free_vars, int depth, PointAccum& acc) {
  if (depth > kMaxSolveDepth) {
    acc.stuck = true;
    return;
  }
  for (Poly& e : eqs) {
    if (e.is_zero()) continue;
    if (!discharge_inverted(ring, inverted, &e)) return;  // unit on this branch
  }
  SystemState st = simplify_system(ring, std::move(eqs));
  if (st.inconsistent) return;
  // rebase: st.substitutions happen after subs_so_far
  std::vector<std::pair<int, Poly>> subs = subs_so_far;
  subs.insert(subs.end(), st.substitutions.begin(), st.substitutions.end());
  if (st.residual.empty()) {
    finish_branch(ring, inverted, subs, free_vars, acc);
    return;
  }
  // univariate generator: branch over its rational roots when complete
  for (const Poly& g : st.residual) {
    auto sup = g.support_vars();
    if (sup.size() != 1) continue;
    std::vector<Rational> roots;
    if (!rational_roots_complete(g, sup[0], &roots)) {
      acc.stuck = true;
      return;
    }
    for (const Rational& r : roots) {
      std::vector<Poly> rest;
      for (const Poly& h : st.residual)
        if (!(h == g)) rest.push_back(h);
      auto subs2 = subs;
      subs2.emplace_back(sup[0], Poly::constant(ring, r));
      std::vector<Poly> substituted;
      for (Poly h : rest) {
        if (h.depends_on(sup[0])) h = h.substitute(sup[0], Poly::constant(ring, r));
        substituted.push_back(std::move(h));
      }
      solve_rec(ring, std::move(substituted), inverted, std::move(subs2), free_vars, depth + 1, acc);
      if (acc.stuck) return;
    }
    return;
  }
  // small linear factors: V(f1^a f2^b h) = V(f1) u V(f2) u V(h)
  for (std::size_t gi = 0; gi < st.residual.size(); ++gi) {
    std::vector<Poly> factors;
    Poly residual(ring);
    if (!split_linear_factors(ring, st.residual[gi], &factors, &residual)) continue;
    std::vector<Poly> rest = st.residual;
    rest.erase(rest.begin() + gi);
    std::vector<Poly> branch_polys = factors;
    if (!residual.is_constant()) branch_polys.push_back(residual);
    else if (!residual.is_zero() && factors.empty()) return;  // unit
    for (const Poly& f : branch_polys) {
      std::vector<Poly> branch = rest;
      branch.push_back(f);
      solve_rec(ring, std::move(branch), inverted, subs, free_vars, depth + 1, acc);
      if (acc.stuck) return;
    }
    return;
  }
  // monomial content: V(m*h) = union of coordinate pieces and V(h)
  for (std::size_t gi = 0; gi < st.residual.size(); ++gi) {
    const Poly& g = st.residual[gi];
    Exponents content = g.monomial_content();
    bool nontrivial = false;
    for (unsigned e : content) nontrivial |= e > 0;
    if (!nontrivial) continue;
    for (std::size_t v = 0; v < content.size(); ++v) {
      if (content[v] == 0) continue;
      std::vector<Poly> branch = st.residual;
      branch.erase(branch.begin() + gi);
      auto subs2 = subs;
      subs2.emplace_back(static_cast<int>(v), Poly(ring));
      std::vector<Poly> substituted;
      for (Poly h : branch) {
        if (h.depends_on(static_cast<int>(v))) h = h.substitute(static_cast<int>(v), Poly(ring));
        substituted.push_back(std::move(h));
      }
      solve_rec(ring, std::move(substituted), inverted, std::move(subs2), free_vars, depth + 1, acc);
      if (acc.stuck) return;
    }
    Poly stripped = g;
    Poly divisor(ring);
    divisor.add_term(content, Rational(1));
    Poly quotient(ring);
    if (!stripped.divide_exact(divisor, &quotient)) throw std::logic_error("content division failed");
    std::vector<Poly> branch = st.residual;
    branch[gi] = quotient;
    solve_rec(ring, std::move(branch), inverted, subs, free_vars, depth + 1, acc);
    return;
  }
  acc.stuck = true;
}

}  // namespace

SolveResult solve_system(const RingPtr& ring, const std::vector<Poly>& eqs,
                         const std::vector<Poly>& inverted,
                         const std::vector<std::string>& free_vars) {
  PointAccum acc;
  solve_rec(ring, eqs, inverted, {}, free_vars, 0, acc);
  SolveResult res;
  if (acc.stuck) {
    res.kind = SolveResult::Stuck;
    return res;
  }
  if (acc.free_component) {
    res.kind = SolveResult::FreeComponent;
    res.points = std::move(acc.points);
    return res;
  }
  if (acc.points.empty()) {
    res.kind = SolveResult::Empty;
    return res;
  }
  res.kind = SolveResult::Points;
  res.points = std::move(acc.points);
  return res;
}

LocusProbe locus_status(const LocusRecord& rec) {
  LocusProbe probe;
  if (rec.generators.empty()) {
    probe.status = LocusStatus::NonemptyWithWitness;  // zero ideal: everything
    return probe;
  }
  RingPtr ring = rec.generators.front().ring();
  // discharge inverted assumptions: a generator equal (up to unit) to a
  // product of inverted polynomials cannot vanish on the branch domain
  for (const Poly& g : rec.generators) {
    if (g.is_constant() && !g.is_zero()) {
      probe.status = LocusStatus::Empty;
      return probe;
    }
    Poly reduced = g;
    bool divided = true;
    while (divided && !reduced.is_constant()) {
      divided = false;
      for (const Poly& inv : rec.inverted) {
        Poly q(ring);
        if (!inv.is_constant() && reduced.divide_exact(inv, &q)) {
          reduced = q;
          divided = true;
          break;
        }
      }
    }
    if (reduced.is_constant() && !reduced.is_zero()) {
      probe.status = LocusStatus::Empty;
      return probe;
    }
  }
  SystemState st = simplify_system(ring, rec.generators);
  if (st.inconsistent) {
    probe.status = LocusStatus::Empty;
    return probe;
  }
  // witness search: full solve first, then a small grid over free variables
  std::set<std::string> vars;
  for (const Poly& g : rec.generators)
    for (int v : g.support_vars()) vars.insert(ring->vars[v]);
  std::vector<std::string> var_list(vars.begin(), vars.end());
  SolveResult sol = solve_system(ring, rec.generators, rec.inverted, var_list);
  if (sol.kind == SolveResult::Empty) {
    probe.status = LocusStatus::Empty;
    return probe;
  }
  if ((sol.kind == SolveResult::Points || sol.kind == SolveResult::FreeComponent) &&
      !sol.points.empty()) {
    probe.status = LocusStatus::NonemptyWithWitness;
    probe.witness = sol.points.front();
    return probe;
  }
  if (sol.kind == SolveResult::FreeComponent) {
    // generic points exist; try to exhibit one on a small grid
  }
  if (var_list.size() <= 3) {
    std::vector<Rational> grid = {Rational(0), Rational(1), Rational(-1)};
    std::vector<std::size_t> idx(var_list.size(), 0);
    while (true) {
      std::map<std::string, Rational> pt;
      for (std::size_t i = 0; i < var_list.size(); ++i) pt[var_list[i]] = grid[idx[i]];
      bool ok = true;
      for (const Poly& g : rec.generators)
        if (!is_zero(g.evaluate(pt))) { ok = false; break; }
      if (ok)
        for (const Poly& inv : rec.inverted)
          if (is_zero(inv.evaluate(pt))) { ok = false; break; }
      if (ok) {
        probe.status = LocusStatus::NonemptyWithWitness;
        probe.witness = pt;
        return probe;
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == grid.size()) idx[i++] = 0;
      if (i == idx.size() && !idx.empty()) break;
      if (idx.empty()) break;
    }
  }
  probe.status = LocusStatus::Undecided;
  return probe;
}

std::string export_ideal(const LocusRecord& rec) {
  std::ostringstream os;
  os << "inv:";
  for (std::size_t i = 0; i < rec.inverted.size(); ++i)
    os << (i ? ", " : " ") << rec.inverted[i].to_string();
  os << "\n";
  for (const Poly& g : rec.generators) os << g.to_string() << "\n";
  return os.str();
}

LocusRecord import_ideal(const RingPtr& ring, const std::string& text) {
  LocusRecord rec;
  std::istringstream is(text);
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.rfind("inv:", 0) != 0) throw std::invalid_argument("import_ideal: missing inv header");
      std::string rest = line.substr(4);
      std::string item;
      std::istringstream rs(rest);
      while (std::getline(rs, item, ',')) {
        // trim
        std::size_t a = item.find_first_not_of(' ');
        if (a == std::string::npos) continue;
        std::size_t b = item.find_last_not_of(' ');
        rec.inverted.push_back(parse_poly(ring, item.substr(a, b - a + 1)));
      }
      continue;
    }
    rec.generators.push_back(parse_poly(ring, line));
  }
  rec.generators = normalize_generators(std::move(rec.generators));
  rec.inverted = normalize_generators(std::move(rec.inverted));
  return rec;
}

}  // namespace borank

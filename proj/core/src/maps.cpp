#include "borank/maps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace borank {

namespace {

// grading pair space as (first, second) factor spaces
std::pair<SpacePtr, SpacePtr> pair_factors(const TensorSystem& sys, Grading g) {
  switch (g) {
    case Grading::AB: return {sys.A, sys.B};
    case Grading::AC: return {sys.A, sys.C};
    default: return {sys.B, sys.C};
  }
}

struct SkewTarget {
  SpacePtr wedge;   // ext2 of the wedged factor
  SpacePtr target;  // tensor in canonical order
  bool wedge_first;
  SpacePtr first, second;
};

SkewTarget skew_target(const TensorSystem& sys, Grading g, PairSide side) {
  auto [P, Q] = pair_factors(sys, g);
  SkewTarget t;
  t.first = P;
  t.second = Q;
  t.wedge_first = side == PairSide::S210;
  t.wedge = TensorSpace::ext(2, t.wedge_first ? P : Q);
  t.target = t.wedge_first ? TensorSpace::tensor({t.wedge, Q})
                           : TensorSpace::tensor({P, t.wedge});
  return t;
}

// contributions of (pair-entry index, factor basis c) to the wedge target:
// list of (target row, sign)
template <typename Scalar, typename Mat>
void add_skew_column(const SkewTarget& st, const SpacePtr& pair, int col, int pair_idx,
                     const Scalar& coeff, int c, Mat& out) {
  const auto& pq = pair->tuple(pair_idx);
  const int p = pq[0], q = pq[1];
  if (st.wedge_first) {
    auto [widx, sign] = st.wedge->encode_ext({c, p});
    if (sign == 0) return;
    const int row = st.target->encode_tensor({widx, q});
    if (sign > 0) out.add_to(row, col, coeff);
    else out.add_to(row, col, -coeff);
  } else {
    auto [widx, sign] = st.wedge->encode_ext({c, q});
    if (sign == 0) return;
    const int row = st.target->encode_tensor({p, widx});
    if (sign > 0) out.add_to(row, col, coeff);
    else out.add_to(row, col, -coeff);
  }
}

}  // namespace

SparseMatrix skew_map_matrix(const TensorSystem& sys, Grading g,
                             const std::vector<SparseRow>& e_basis, PairSide side) {
  SkewTarget st = skew_target(sys, g, side);
  const SpacePtr pair = sys.pair_space(g);
  const SpacePtr factor = st.wedge_first ? st.first : st.second;
  SparseMatrix out(st.target->dim(), static_cast<int>(e_basis.size()) * factor->dim());
  for (std::size_t e = 0; e < e_basis.size(); ++e)
    for (int c = 0; c < factor->dim(); ++c) {
      const int col = static_cast<int>(e) * factor->dim() + c;
      for (const auto& [pi, coeff] : e_basis[e]) add_skew_column(st, pair, col, pi, coeff, c, out);
    }
  return out;
}

PolyMatrix skew_map_matrix(const TensorSystem& sys, Grading g, const PolyMatrix& e_rows,
                           PairSide side) {
  SkewTarget st = skew_target(sys, g, side);
  const SpacePtr pair = sys.pair_space(g);
  const SpacePtr factor = st.wedge_first ? st.first : st.second;
  PolyMatrix out(st.target->dim(), e_rows.nrows() * factor->dim(), e_rows.ring());
  for (int e = 0; e < e_rows.nrows(); ++e)
    for (int c = 0; c < factor->dim(); ++c) {
      const int col = e * factor->dim() + c;
      for (const auto& [pi, coeff] : e_rows.row(e)) add_skew_column(st, pair, col, pi, coeff, c, out);
    }
  return out;
}

int skew_rank(const TensorSystem& sys, Grading g, const Subspace& e, PairSide side) {
  std::vector<SparseRow> basis;
  for (int i = 0; i < e.dim(); ++i) basis.push_back(e.basis_rows().row(i));
  return rank(skew_map_matrix(sys, g, basis, side));
}

int skew_kernel_dim(const TensorSystem& sys, Grading g, const Subspace& e, PairSide side) {
  auto [P, Q] = pair_factors(sys, g);
  const int factor_dim = side == PairSide::S210 ? P->dim() : Q->dim();
  return e.dim() * factor_dim - skew_rank(sys, g, e, side);
}

SparseMatrix reduced_mod_block(const TensorSystem& sys, Grading g) {
  // matmul gradings only: the wedged factor P = Out_P x Inn (in some slot
  // order), Q contains Inn' dual to Inn. The block spans
  // S^2 Out_P x kappa(Inn) x Out_Q  (+)  Lambda^2 Out_P x iota(Inn) x Out_Q
  // with kappa(e) = sum_j (e ^ j) x j', iota(e) = sum_j (e.j) x j'.
  SkewTarget st = skew_target(sys, g, PairSide::S210);
  const SpacePtr P = st.first, Q = st.second;
  if (P->kind() != TensorSpace::Kind::Tensor || Q->kind() != TensorSpace::Kind::Tensor)
    throw std::invalid_argument("reduced_mod_block: matmul-shaped gradings only");
  // locate the contracted group: appears in both P and Q leaves
  int innP = -1, innQ = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (P->children()[i]->factor().group == Q->children()[j]->factor().group) {
        innP = i;
        innQ = j;
      }
  if (innP < 0) throw std::invalid_argument("reduced_mod_block: no contracted factor");
  const SpacePtr inn = P->children()[innP];
  const SpacePtr outP = P->children()[1 - innP];
  const SpacePtr outQ = Q->children()[1 - innQ];
  auto p_index = [&](int out, int in) {
    return innP == 0 ? P->encode_tensor({in, out}) : P->encode_tensor({out, in});
  };
  auto q_index = [&](int in, int out) {
    return innQ == 0 ? Q->encode_tensor({in, out}) : Q->encode_tensor({out, in});
  };
  std::vector<SparseRow> cols;
  // S^2 Out_P x kappa(Inn) x Out_Q
  for (int a = 0; a < outP->dim(); ++a)
    for (int b = a; b < outP->dim(); ++b)
      for (int e = 0; e < inn->dim(); ++e)
        for (int oq = 0; oq < outQ->dim(); ++oq) {
          std::map<int, Rational> acc;
          for (int j = 0; j < inn->dim(); ++j) {
            if (j == e) continue;  // e ^ e = 0
            // (x_a x_b) (x) (y_e ^ y_j) -> (x_a y_e)^(x_b y_j) + (x_b y_e)^(x_a y_j)
            for (auto [u1, u2] : {std::pair{a, b}, std::pair{b, a}}) {
              auto [w, sign] = st.wedge->encode_ext({p_index(u1, e), p_index(u2, j)});
              if (sign != 0) acc[st.target->encode_tensor({w, q_index(j, oq)})] += Rational(sign);
            }
          }
          SparseRow v;
          for (auto& [i, c] : acc)
            if (!is_zero(c)) v.emplace_back(i, c);
          if (!v.empty()) cols.push_back(std::move(v));
        }
  // Lambda^2 Out_P x iota(Inn) x Out_Q
  for (int a = 0; a < outP->dim(); ++a)
    for (int b = a + 1; b < outP->dim(); ++b)
      for (int e = 0; e < inn->dim(); ++e)
        for (int oq = 0; oq < outQ->dim(); ++oq) {
          std::map<int, Rational> acc;
          for (int j = 0; j < inn->dim(); ++j) {
            // (x_a ^ x_b) (x) (y_e . y_j) -> (x_a y_e)^(x_b y_j) + (x_a y_j)^(x_b y_e)
            for (auto [v1, v2] : {std::pair{e, j}, std::pair{j, e}}) {
              auto [w, sign] = st.wedge->encode_ext({p_index(a, v1), p_index(b, v2)});
              if (sign != 0) acc[st.target->encode_tensor({w, q_index(j, oq)})] += Rational(sign);
            }
          }
          SparseRow v;
          for (auto& [i, c] : acc)
            if (!is_zero(c)) v.emplace_back(i, c);
          if (!v.empty()) cols.push_back(std::move(v));
        }
  SparseMatrix out(st.target->dim(), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j]) out.add_to(static_cast<int>(i), static_cast<int>(j), c);
  return out;
}

int reduced_210_rank(const TensorSystem& sys, Grading g, const WeightedModule& comp,
                     const Subspace& eprime) {
  std::vector<SparseRow> basis;
  for (int i = 0; i < eprime.dim(); ++i) basis.push_back(comp.embed(eprime.basis_rows().row(i)));
  SparseMatrix m = skew_map_matrix(sys, g, basis, PairSide::S210);
  SparseMatrix s = reduced_mod_block(sys, g);
  const int rank_s = rank(s);
  m.append_cols(s);
  return rank(m) - rank_s;
}

int reduced_210_kernel(const TensorSystem& sys, Grading g, const WeightedModule& comp,
                       const Subspace& eprime) {
  auto [P, Q] = pair_factors(sys, g);
  return eprime.dim() * P->dim() - reduced_210_rank(sys, g, comp, eprime);
}

PolyMatrix reduced_210_stacked(const TensorSystem& sys, Grading g, const WeightedModule& comp,
                               const PolyMatrix& eprime_rows) {
  // embed family rows into pair coordinates
  PolyMatrix emb(eprime_rows.nrows(), comp.parent->dim(), eprime_rows.ring());
  for (int r = 0; r < eprime_rows.nrows(); ++r)
    for (const auto& [c, p] : eprime_rows.row(r))
      for (const auto& [pc, coeff] : comp.basis[c]) emb.add_to(r, pc, p * coeff);
  PolyMatrix m = skew_map_matrix(sys, g, emb, PairSide::S210);
  PolyMatrix s = PolyMatrix::from_constant(reduced_mod_block(sys, g), eprime_rows.ring());
  m.append_cols(s);
  return m;
}

std::vector<std::pair<int, Rational>> mirror_index_map(int u, int v, int w) {
  // complement basis order: (s in [u]) x (t in [w]) x (sl basis: roots E_ij
  // lex, then h_1..h_{v-1}); the U*<->W transpose sends (s, xi, t) to
  // (t, J xi^T J, s) in the M<w,v,u> module.
  const int sl_dim = v * v - 1;
  auto sl_index = [&](int i, int j) {  // root E_{i,j}, 0-based, i != j
    int idx = 0;
    for (int a = 0; a < v; ++a)
      for (int b = 0; b < v; ++b) {
        if (a == b) continue;
        if (a == i && b == j) return idx;
        ++idx;
      }
    throw std::logic_error("sl_index");
  };
  std::vector<std::pair<int, Rational>> out(u * w * sl_dim);
  int idx = 0;
  for (int s = 0; s < u; ++s)
    for (int t = 0; t < w; ++t)
      for (int x = 0; x < sl_dim; ++x, ++idx) {
        // decode x: roots first, then cartan
        int target_x;
        Rational sign(1);
        const int nroots = v * v - v;
        if (x < nroots) {
          int cnt = 0, ri = -1, rj = -1;
          for (int a = 0; a < v && ri < 0; ++a)
            for (int b = 0; b < v; ++b) {
              if (a == b) continue;
              if (cnt == x) { ri = a; rj = b; break; }
              ++cnt;
            }
          target_x = sl_index(v - 1 - rj, v - 1 - ri);
        } else {
          const int h = x - nroots;        // h_{h+1} in 1-based terms
          target_x = nroots + (v - 2 - h); // -h_{v-1-h}
          sign = Rational(-1);
        }
        const int target = (t * u + s) * sl_dim + target_x;
        out[idx] = {target, sign};
      }
  return out;
}

namespace {

// the vector in "other pair space" coordinates obtained by freezing one
// factor index of an e-row: slice of e x c over the given index
SparseRow freeze_second(const SpacePtr& pair, const SparseRow& e, int beta, const SpacePtr& out_pair,
                        int c, bool part_first) {
  // pair = X x Y; e in pair coords. For part_first=false: slice over Y=beta
  // giving sum_x e[(x,beta)] * out_pair(x, c).
  SparseRow v;
  for (const auto& [pi, coeff] : e) {
    const auto& t = pair->tuple(pi);
    if (part_first) {
      if (t[0] == beta) v.emplace_back(out_pair->encode_tensor({t[1], c}), coeff);
    } else {
      if (t[1] == beta) v.emplace_back(out_pair->encode_tensor({t[0], c}), coeff);
    }
  }
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return v;
}

}  // namespace

Subspace pair_intersection(const TensorSystem& sys, const Subspace& e110, const Subspace& e101) {
  // X = sum z_{pk} e_p x c_k in E110 x C; require every B-slice in E101.
  const int dim_b = sys.B->dim(), dim_c = sys.C->dim();
  Subspace f101 = annihilator(e101);  // functionals on A x C
  SparseMatrix cond(dim_b * f101.dim(), e110.dim() * dim_c);
  int row = 0;
  for (int beta = 0; beta < dim_b; ++beta) {
    // per (p): slice vector s_{p,beta} in A coords paired against C later
    std::vector<SparseRow> slices(e110.dim());  // in A-coords
    for (int p = 0; p < e110.dim(); ++p) {
      for (const auto& [pi, coeff] : e110.basis_rows().row(p)) {
        const auto& t = sys.AB->tuple(pi);
        if (t[1] == beta) slices[p].emplace_back(t[0], coeff);
      }
    }
    for (int fi = 0; fi < f101.dim(); ++fi, ++row) {
      // entry over (p,k): sum_alpha slice_p[alpha] * f[(alpha,k)]
      for (int p = 0; p < e110.dim(); ++p) {
        for (const auto& [alpha, sc] : slices[p]) {
          // f restricted to alpha slot: iterate f's entries with A-part alpha
          for (const auto& [aci, fc] : f101.basis_rows().row(fi)) {
            const auto& ac = sys.AC->tuple(aci);
            if (ac[0] != alpha) continue;
            cond.add_to(row, p * dim_c + ac[1], sc * fc);
          }
        }
      }
    }
  }
  return kernel_basis(cond);
}

int triple_finish(const TensorSystem& sys, const Subspace& e110, const Subspace& pair_kernel,
                  const Subspace& e011) {
  const int dim_a = sys.A->dim(), dim_c = sys.C->dim();
  Subspace f011 = annihilator(e011);
  SparseMatrix cond(dim_a * f011.dim(), pair_kernel.dim());
  // precompute per kernel-basis vector its expansion sum z_{pk} e_p x c_k ->
  // coefficients on (A,B,C) monomials grouped by alpha
  for (int ki = 0; ki < pair_kernel.dim(); ++ki) {
    // bc_vectors[alpha] : coords in B x C
    std::map<int, std::map<int, Rational>> bc;  // alpha -> (BC index -> coeff)
    for (const auto& [zi, zc] : pair_kernel.basis_rows().row(ki)) {
      const int p = zi / dim_c, k = zi % dim_c;
      for (const auto& [pi, coeff] : e110.basis_rows().row(p)) {
        const auto& t = sys.AB->tuple(pi);
        bc[t[0]][sys.BC->encode_tensor({t[1], k})] += zc * coeff;
      }
    }
    int row = 0;
    for (int alpha = 0; alpha < dim_a; ++alpha) {
      auto it = bc.find(alpha);
      for (int fi = 0; fi < f011.dim(); ++fi, ++row) {
        if (it == bc.end()) continue;
        Rational acc(0);
        for (const auto& [bci, fc] : f011.basis_rows().row(fi)) {
          auto jt = it->second.find(bci);
          if (jt != it->second.end()) acc += fc * jt->second;
        }
        if (!is_zero(acc)) cond.add_to(row, ki, acc);
      }
    }
  }
  return pair_kernel.dim() - rank(cond);
}

int triple_intersection_dim(const TensorSystem& sys, const Subspace& e110, const Subspace& e101,
                            const Subspace& e011) {
  Subspace k = pair_intersection(sys, e110, e101);
  return triple_finish(sys, e110, k, e011);
}

bool triple_contains_tensor(const TensorSystem& sys, const Subspace& e110,
                            const Subspace& e101, const Subspace& e011) {
  // T's single-factor slices must lie in the corresponding E pieces
  std::map<int, SparseRow> c_slices, b_slices, a_slices;
  for (const auto& [idx, coeff] : sys.T.coeffs) {
    const auto& t = sys.T.space->tuple(idx);
    c_slices[t[2]].emplace_back(sys.AB->encode_tensor({t[0], t[1]}), coeff);
    b_slices[t[1]].emplace_back(sys.AC->encode_tensor({t[0], t[2]}), coeff);
    a_slices[t[0]].emplace_back(sys.BC->encode_tensor({t[1], t[2]}), coeff);
  }
  auto sorted = [](SparseRow r) {
    std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return r;
  };
  for (auto& [k, v] : c_slices)
    if (!e110.contains(sorted(v))) return false;
  for (auto& [k, v] : b_slices)
    if (!e101.contains(sorted(v))) return false;
  for (auto& [k, v] : a_slices)
    if (!e011.contains(sorted(v))) return false;
  return true;
}

SpacePtr graded_space(const TensorSystem& sys, int i, int j, int k) {
  std::vector<SpacePtr> parts;
  auto push = [&](const SpacePtr& x, int p) {
    if (p == 1) parts.push_back(x);
    else if (p > 1) parts.push_back(TensorSpace::sym(p, x));
  };
  push(sys.A, i);
  push(sys.B, j);
  push(sys.C, k);
  if (parts.empty()) throw std::invalid_argument("graded_space: zero degree");
  return TensorSpace::tensor(parts);
}

namespace {

struct GradedView {
  SpacePtr space;
  std::vector<int> powers;       // powers of present parts, in A,B,C order
  std::vector<int> which;        // 0=A,1=B,2=C per part
  std::vector<SpacePtr> factors; // underlying factor space per part

  std::vector<int> part_indices(int idx) const {
    if (space->kind() == TensorSpace::Kind::Tensor && factors.size() > 1) return space->tuple(idx);
    return {idx};
  }
  int encode(const std::vector<int>& parts) const {
    if (factors.size() > 1) return space->encode_tensor(parts);
    return parts[0];
  }
};

GradedView make_view(const TensorSystem& sys, int i, int j, int k) {
  GradedView v;
  v.space = graded_space(sys, i, j, k);
  const int powers[3] = {i, j, k};
  const SpacePtr factors[3] = {sys.A, sys.B, sys.C};
  for (int d = 0; d < 3; ++d) {
    if (powers[d] >= 1) {
      v.powers.push_back(powers[d]);
      v.which.push_back(d);
      v.factors.push_back(factors[d]);
    }
  }
  return v;
}

// multiset of factor indices for part `pos` of the graded basis element
std::vector<int> part_multiset(const GradedView& v, const std::vector<int>& parts, int pos) {
  const int p = v.powers[pos];
  if (p == 1) return {parts[pos]};
  // the part space is sym(p, factor): its tuple is the sorted multiset
  const SpacePtr part_space =
      v.factors.size() > 1 ? v.space->children()[pos] : v.space;
  return part_space->tuple(parts[pos]);
}

}  // namespace

int degree_test_dim(const TensorSystem& sys, int i, int j, int k,
                    const std::optional<Subspace>& pred_a,
                    const std::optional<Subspace>& pred_b,
                    const std::optional<Subspace>& pred_c) {
  GradedView target = make_view(sys, i, j, k);
  const std::optional<Subspace>* preds[3] = {&pred_a, &pred_b, &pred_c};
  const int powers[3] = {i, j, k};
  SparseMatrix cond(0, target.space->dim());
  for (int d = 0; d < 3; ++d) {
    if (!preds[d]->has_value()) continue;
    if (powers[d] < 1) throw std::invalid_argument("degree_test_dim: piece for zero power");
    int pd[3] = {i, j, k};
    pd[d] -= 1;
    GradedView pred = make_view(sys, pd[0], pd[1], pd[2]);
    const Subspace& e = preds[d]->value();
    if (e.ambient_dim() != pred.space->dim())
      throw std::invalid_argument("degree_test_dim: piece in wrong coordinates");
    Subspace f = annihilator(e);
    // position of direction d within target parts
    int pos = -1;
    for (std::size_t q = 0; q < target.which.size(); ++q)
      if (target.which[q] == d) pos = static_cast<int>(q);
    const int factor_dim = target.factors[pos]->dim();
    // rows: for each factor index c and functional f: sum over target basis
    // with c in its d-part of f(pred element)
    // build slice map: target idx -> list of (c, pred idx)
    SparseMatrix rows(factor_dim * f.dim(), target.space->dim());
    for (int tidx = 0; tidx < target.space->dim(); ++tidx) {
      std::vector<int> parts = target.part_indices(tidx);
      std::vector<int> mset = part_multiset(target, parts, pos);
      std::vector<int> distinct;
      for (int c : mset)
        if (distinct.empty() || distinct.back() != c) distinct.push_back(c);
      for (int c : distinct) {
        // remove one instance of c
        std::vector<int> rest;
        bool removed = false;
        for (int x : mset) {
          if (!removed && x == c) { removed = true; continue; }
          rest.push_back(x);
        }
        // pred parts: same as target parts with d-part re-encoded (or gone)
        std::vector<int> pparts;
        for (std::size_t q = 0; q < target.which.size(); ++q) {
          if (static_cast<int>(q) != pos) {
            pparts.push_back(parts[q]);
            continue;
          }
          if (rest.empty()) continue;  // factor disappears
          if (rest.size() == 1) pparts.push_back(rest[0]);
          else {
            // locate the sym subspace of the pred view at direction d
            int ppos = -1;
            for (std::size_t r2 = 0; r2 < pred.which.size(); ++r2)
              if (pred.which[r2] == d) ppos = static_cast<int>(r2);
            const SpacePtr ps =
                pred.factors.size() > 1 ? pred.space->children()[ppos] : pred.space;
            pparts.push_back(ps->encode_sym(rest));
          }
        }
        const int pidx = pred.encode(pparts);
        for (int fi = 0; fi < f.dim(); ++fi) {
          Rational val = f.basis_rows().get(fi, pidx);
          if (!is_zero(val)) rows.add_to(c * f.dim() + fi, tidx, val);
        }
      }
    }
    cond.append_rows(rows);
  }
  return target.space->dim() - rank(cond);
}

SparseMatrix multiplication_map(const TensorSystem& sys, int i, int j, int k,
                                const std::optional<Subspace>& e_pred_a,
                                const std::optional<Subspace>& e_pred_b,
                                const std::optional<Subspace>& e_pred_c) {
  GradedView target = make_view(sys, i, j, k);
  const std::optional<Subspace>* preds[3] = {&e_pred_a, &e_pred_b, &e_pred_c};
  SparseMatrix out(target.space->dim(), 0);
  for (int d = 0; d < 3; ++d) {
    if (!preds[d]->has_value()) continue;
    int pd[3] = {i, j, k};
    pd[d] -= 1;
    GradedView pred = make_view(sys, pd[0], pd[1], pd[2]);
    Subspace fpiece = annihilator(preds[d]->value());  // dual coordinates
    int pos = -1;
    for (std::size_t q = 0; q < target.which.size(); ++q)
      if (target.which[q] == d) pos = static_cast<int>(q);
    const int factor_dim = target.factors[pos]->dim();
    SparseMatrix block(target.space->dim(), fpiece.dim() * factor_dim);
    for (int fi = 0; fi < fpiece.dim(); ++fi)
      for (int c = 0; c < factor_dim; ++c) {
        const int col = fi * factor_dim + c;
        for (const auto& [pidx, coeff] : fpiece.basis_rows().row(fi)) {
          // multiply the dual monomial by the dual variable c in direction d
          std::vector<int> pparts = pred.part_indices(pidx);
          // rebuild the d-part multiset with c added
          std::vector<int> mset;
          int ppos = -1;
          for (std::size_t r2 = 0; r2 < pred.which.size(); ++r2)
            if (pred.which[r2] == d) ppos = static_cast<int>(r2);
          if (ppos >= 0) mset = part_multiset(pred, pparts, ppos);
          mset.push_back(c);
          std::sort(mset.begin(), mset.end());
          std::vector<int> tparts;
          std::size_t src = 0;
          for (std::size_t q = 0; q < target.which.size(); ++q) {
            if (static_cast<int>(q) == pos) {
              if (mset.size() == 1) tparts.push_back(mset[0]);
              else {
                const SpacePtr ts =
                    target.factors.size() > 1 ? target.space->children()[q] : target.space;
                tparts.push_back(ts->encode_sym(mset));
              }
              if (ppos >= 0) ++src;
              continue;
            }
            tparts.push_back(pparts[src++]);
          }
          block.add_to(target.encode(tparts), col, coeff);
        }
      }
    out.append_cols(block);
  }
  return out;
}

}  // namespace borank

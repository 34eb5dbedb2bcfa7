#include "borank/tensor_element.hpp"

#include <array>
#include <stdexcept>

namespace borank {

namespace {

SpacePtr make_pair_space(const SpacePtr& x, const SpacePtr& y) {
  return TensorSpace::tensor({x, y});
}

}  // namespace

TensorSystem mamu_system(int l, int m, int n) {
  if (l < 1 || m < 1 || n < 1) throw std::invalid_argument("mamu_system: dims must be >= 1");
  TensorSystem sys;
  sys.name = "mamu:" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n);
  sys.groups = {{"U", l}, {"V", m}, {"W", n}};
  SpacePtr Ud = TensorSpace::leaf({"U", l, true, "u"});
  SpacePtr V = TensorSpace::leaf({"V", m, false, "v"});
  SpacePtr Vd = TensorSpace::leaf({"V", m, true, "v"});
  SpacePtr W = TensorSpace::leaf({"W", n, false, "w"});
  SpacePtr Wd = TensorSpace::leaf({"W", n, true, "w"});
  SpacePtr U = TensorSpace::leaf({"U", l, false, "u"});
  sys.A = make_pair_space(Ud, V);
  sys.B = make_pair_space(Vd, W);
  sys.C = make_pair_space(Wd, U);
  sys.AB = make_pair_space(sys.A, sys.B);
  sys.AC = make_pair_space(sys.A, sys.C);
  sys.BC = make_pair_space(sys.B, sys.C);
  sys.ABC = TensorSpace::tensor({sys.A, sys.B, sys.C});
  sys.T.space = sys.ABC;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k) {
        const int a = sys.A->encode_tensor({i, j});
        const int b = sys.B->encode_tensor({j, k});
        const int c = sys.C->encode_tensor({k, i});
        sys.T.coeffs[sys.ABC->encode_tensor({a, b, c})] = Rational(1);
      }
  return sys;
}

TensorElement mamu_tensor(int l, int m, int n) { return mamu_system(l, m, n).T; }

namespace {

int perm_sign(const std::array<int, 3>& p) {
  int s = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace

TensorSystem det3_system() {
  TensorSystem sys;
  sys.name = "det3";
  sys.groups = {{"U", 3}, {"V", 3}};
  SpacePtr U = TensorSpace::leaf({"U", 3, false, "u"});
  SpacePtr V = TensorSpace::leaf({"V", 3, false, "v"});
  SpacePtr X = make_pair_space(U, V);
  sys.A = sys.B = sys.C = X;
  sys.AB = sys.AC = sys.BC = make_pair_space(X, X);
  sys.ABC = TensorSpace::tensor({X, X, X});
  sys.T.space = sys.ABC;
  std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& sigma : perms)
    for (const auto& tau : perms) {
      const int sign = perm_sign(sigma) * perm_sign(tau);
      std::vector<int> slots(3);
      for (int a = 0; a < 3; ++a) slots[a] = X->encode_tensor({sigma[a], tau[a]});
      sys.T.coeffs[sys.ABC->encode_tensor(slots)] += Rational(sign);
    }
  return sys;
}

TensorElement det3_tensor() { return det3_system().T; }

Subspace flattening(const TensorSystem& sys, Grading g) {
  // contract away the factor missing from the grading
  const SpacePtr& pair = sys.pair_space(g);
  const SpacePtr& third = g == Grading::AB ? sys.C : (g == Grading::AC ? sys.B : sys.A);
  std::vector<SparseRow> vectors(third->dim());
  for (const auto& [idx, coeff] : sys.T.coeffs) {
    const auto& t = sys.ABC->tuple(idx);  // (a, b, c)
    int keep1, keep2, drop;
    switch (g) {
      case Grading::AB: keep1 = t[0]; keep2 = t[1]; drop = t[2]; break;
      case Grading::AC: keep1 = t[0]; keep2 = t[2]; drop = t[1]; break;
      default: keep1 = t[1]; keep2 = t[2]; drop = t[0]; break;
    }
    const int pi = pair->encode_tensor({keep1, keep2});
    vectors[drop] = row_axpy(vectors[drop], coeff, SparseRow{{pi, Rational(1)}});
  }
  return Subspace::span(pair->dim(), vectors);
}

int flattening_rank(const TensorSystem& sys, Grading g) { return flattening(sys, g).dim(); }

Subspace annihilator_of(const TensorElement& t) {
  SparseMatrix m(1, t.space->dim());
  m.set_row(0, t.as_row());
  return kernel_basis(m);
}

bool is_concise(const TensorSystem& sys) {
  return flattening_rank(sys, Grading::AB) == sys.C->dim() &&
         flattening_rank(sys, Grading::AC) == sys.B->dim() &&
         flattening_rank(sys, Grading::BC) == sys.A->dim();
}

WeightedModule sl_module(int dim, const std::string& group, const std::string& symbol) {
  SpacePtr V = TensorSpace::leaf({group, dim, false, symbol});
  SpacePtr Vd = TensorSpace::leaf({group, dim, true, symbol});
  SpacePtr end = TensorSpace::tensor({V, Vd});
  std::vector<SparseRow> basis;
  std::vector<std::string> labels;
  // root vectors first (lex), then the Cartan differences
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      basis.push_back({{end->encode_tensor({i, j}), Rational(1)}});
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (int i = 0; i + 1 < dim; ++i) {
    SparseRow h{{end->encode_tensor({i, i}), Rational(1)},
                {end->encode_tensor({i + 1, i + 1}), Rational(-1)}};
    std::sort(h.begin(), h.end(), [](auto& a, auto& b) { return a.first < b.first; });
    basis.push_back(std::move(h));
    labels.push_back("h" + std::to_string(i + 1));
  }
  return WeightedModule::from_basis(end, raising_ops({{group, dim}}), std::move(basis),
                                    std::move(labels));
}

namespace {

// basis of sl as (coordinate pairs, coefficient) lists plus labels, used to
// assemble the inner factor of the matmul complement modules
struct SlBasis {
  std::vector<std::vector<std::pair<std::pair<int, int>, Rational>>> vectors;  // (row,col)->coeff
  std::vector<std::string> labels;
};

SlBasis sl_basis(int dim) {
  SlBasis out;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      out.vectors.push_back({{{i, j}, Rational(1)}});
      out.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (int i = 0; i + 1 < dim; ++i) {
    out.vectors.push_back({{{i, i}, Rational(1)}, {{i + 1, i + 1}, Rational(-1)}});
    out.labels.push_back("h" + std::to_string(i + 1));
  }
  return out;
}

WeightedModule mamu_complement(const TensorSystem& sys, Grading g) {
  // AB: u^s (x) sl(V) (x) w_t      with A=(s,i), B=(j,t) for E_ij
  // AC: v_j (x) sl(U)* (x) w^k     with A=(a,j), C=(k,b) for u^a(x)u_b
  // BC: v^j (x) sl(W) (x) u_i      with B=(j,c), C=(d,i) for w_c(x)w^d
  const SpacePtr pair = sys.pair_space(g);
  std::vector<SparseRow> basis;
  std::vector<std::string> labels;
  const int l = sys.groups[0].second, m = sys.groups[1].second, n = sys.groups[2].second;
  auto push = [&](SparseRow v, std::string lbl) {
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
    labels.push_back(std::move(lbl));
  };
  switch (g) {
    case Grading::AB: {
      SlBasis sl = sl_basis(m);
      for (int s = 0; s < l; ++s)
        for (int t = 0; t < n; ++t)
          for (std::size_t x = 0; x < sl.vectors.size(); ++x) {
            SparseRow v;
            for (const auto& [ij, c] : sl.vectors[x]) {
              const int a = sys.A->encode_tensor({s, ij.first});
              const int b = sys.B->encode_tensor({ij.second, t});
              v.emplace_back(pair->encode_tensor({a, b}), c);
            }
            push(std::move(v), "u^" + std::to_string(s + 1) + "*" + sl.labels[x] + "*w_" +
                                   std::to_string(t + 1));
          }
      break;
    }
    case Grading::AC: {
      // A (x) C = (U* x V) (x) (W* x U); inner factor U* x U, trace part out
      SlBasis sl = sl_basis(l);
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < n; ++k)
          for (std::size_t x = 0; x < sl.vectors.size(); ++x) {
            SparseRow v;
            for (const auto& [ab, c] : sl.vectors[x]) {
              // inner element u^a (x) u_b carrying E_ab of the U*-side action
              const int a = sys.A->encode_tensor({ab.first, j});
              const int cc = sys.C->encode_tensor({k, ab.second});
              v.emplace_back(pair->encode_tensor({a, cc}), c);
            }
            push(std::move(v), "v_" + std::to_string(j + 1) + "*" + sl.labels[x] + "(U)*w^" +
                                   std::to_string(k + 1));
          }
      break;
    }
    case Grading::BC: {
      SlBasis sl = sl_basis(n);
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < l; ++i)
          for (std::size_t x = 0; x < sl.vectors.size(); ++x) {
            SparseRow v;
            for (const auto& [cd, c] : sl.vectors[x]) {
              const int b = sys.B->encode_tensor({j, cd.first});
              const int cc = sys.C->encode_tensor({cd.second, i});
              v.emplace_back(pair->encode_tensor({b, cc}), c);
            }
            push(std::move(v), "v^" + std::to_string(j + 1) + "*" + sl.labels[x] + "(W)*u_" +
                                   std::to_string(i + 1));
          }
      break;
    }
  }
  return WeightedModule::from_basis(pair, sys.ops(), std::move(basis), std::move(labels));
}

WeightedModule det3_complement(const TensorSystem& sys) {
  const SpacePtr X = sys.A;  // U x V
  const SpacePtr pair = sys.AB;
  std::vector<SparseRow> basis;
  std::vector<std::string> labels;
  auto xe = [&](int u, int v) { return X->encode_tensor({u, v}); };
  auto add_vec = [&](std::vector<std::pair<std::pair<int, int>, int>> terms, std::string lbl) {
    // terms: ((X index 1, X index 2), sign)
    std::map<int, Rational> acc;
    for (const auto& [pq, s] : terms) acc[pair->encode_tensor({pq.first, pq.second})] += Rational(s);
    SparseRow v;
    for (auto& [i, c] : acc)
      if (!is_zero(c)) v.emplace_back(i, c);
    basis.push_back(std::move(v));
    labels.push_back(std::move(lbl));
  };
  auto u_lbl = [](int a, int b, bool wedge) {
    return "(u_" + std::to_string(a + 1) + (wedge ? "^u_" : "u_") + std::to_string(b + 1) + ")";
  };
  auto v_lbl = [](int c, int d, bool wedge) {
    return "(v_" + std::to_string(c + 1) + (wedge ? "^v_" : "v_") + std::to_string(d + 1) + ")";
  };
  // S2U x S2V
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = c; d < 3; ++d)
          add_vec({{{xe(a, c), xe(b, d)}, 1},
                   {{xe(a, d), xe(b, c)}, 1},
                   {{xe(b, c), xe(a, d)}, 1},
                   {{xe(b, d), xe(a, c)}, 1}},
                  u_lbl(a, b, false) + v_lbl(c, d, false));
  // S2U x Lambda2V
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = c + 1; d < 3; ++d)
          add_vec({{{xe(a, c), xe(b, d)}, 1},
                   {{xe(a, d), xe(b, c)}, -1},
                   {{xe(b, c), xe(a, d)}, 1},
                   {{xe(b, d), xe(a, c)}, -1}},
                  u_lbl(a, b, false) + v_lbl(c, d, true));
  // Lambda2U x S2V
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = c; d < 3; ++d)
          add_vec({{{xe(a, c), xe(b, d)}, 1},
                   {{xe(a, d), xe(b, c)}, 1},
                   {{xe(b, c), xe(a, d)}, -1},
                   {{xe(b, d), xe(a, c)}, -1}},
                  u_lbl(a, b, true) + v_lbl(c, d, false));
  return WeightedModule::from_basis(pair, sys.ops(), std::move(basis), std::move(labels));
}

}  // namespace

WeightedModule complement_module(const TensorSystem& sys, Grading g) {
  if (sys.name == "det3") return det3_complement(sys);
  return mamu_complement(sys, g);
}

}  // namespace borank

#include "doctest.h"

#include "borank/tensor_element.hpp"
#include "borank/tensor_space.hpp"

using namespace borank;

TEST_CASE("leaf weights and labels follow the conventions") {
  SpacePtr U = TensorSpace::leaf({"U", 3, false, "u"});
  SpacePtr Ud = TensorSpace::leaf({"U", 3, true, "u"});
  CHECK(U->label(0) == "u_1");
  CHECK(Ud->label(2) == "u^3");
  CHECK(U->weight(0).w.at("U") == std::vector<int>{1, 0, 0});
  CHECK(Ud->weight(0).w.at("U") == std::vector<int>{-1, 0, 0});
}

TEST_CASE("raising acts as e_{k+1} -> e_k, dual by negative transpose") {
  SpacePtr U = TensorSpace::leaf({"U", 2, false, "u"});
  SpacePtr Ud = TensorSpace::leaf({"U", 2, true, "u"});
  RaisingOp op{"U", 1};
  const SparseMatrix& r = U->raising_matrix(op);
  CHECK(r.get(0, 1) == rat(1));  // u_2 -> u_1
  CHECK(r.nnz() == 1);
  const SparseMatrix& rd = Ud->raising_matrix(op);
  CHECK(rd.get(1, 0) == rat(-1));  // u^1 -> -u^2
  CHECK(rd.nnz() == 1);
}

TEST_CASE("sym and ext dimensions") {
  SpacePtr V = TensorSpace::leaf({"V", 3, false, "v"});
  CHECK(TensorSpace::sym(2, V)->dim() == 6);
  CHECK(TensorSpace::sym(3, V)->dim() == 10);
  CHECK(TensorSpace::ext(2, V)->dim() == 3);
  CHECK(TensorSpace::ext(3, V)->dim() == 1);
  CHECK(TensorSpace::ext(4, V)->dim() == 0);
  SpacePtr A = TensorSpace::tensor({V, V});
  CHECK(A->dim() == 9);
  CHECK(TensorSpace::sym(2, A)->dim() == 45);
}

TEST_CASE("derivation action on powers") {
  SpacePtr V = TensorSpace::leaf({"V", 2, false, "v"});
  SpacePtr S2 = TensorSpace::sym(2, V);
  RaisingOp op{"V", 1};
  // v_2^2 -> 2 v_1 v_2
  const int src = S2->encode_sym({1, 1});
  const int tgt = S2->encode_sym({0, 1});
  CHECK(S2->raising_matrix(op).get(tgt, src) == rat(2));
  SpacePtr E2 = TensorSpace::ext(2, TensorSpace::leaf({"V", 3, false, "v"}));
  // v_2 ^ v_3 -> v_1 ^ v_3  (raising the first slot), v_2^v_2 dropped
  const int esrc = E2->encode_ext({1, 2}).first;
  const int etgt = E2->encode_ext({0, 2}).first;
  CHECK(E2->raising_matrix(op).get(etgt, esrc) == rat(1));
}

TEST_CASE("mamu tensor basics") {
  TensorElement t111 = mamu_tensor(1, 1, 1);
  CHECK(t111.nnz() == 1);
  CHECK(t111.coeffs.begin()->second == rat(1));

  TensorElement t222 = mamu_tensor(2, 2, 2);
  CHECK(t222.nnz() == 8);
  for (const auto& [i, c] : t222.coeffs) CHECK(c == rat(1));
}

TEST_CASE("det3 expands to 36 signed monomials") {
  TensorElement d = det3_tensor();
  CHECK(d.nnz() == 36);
  int pos = 0, neg = 0;
  Rational sum(0);
  for (const auto& [i, c] : d.coeffs) {
    CHECK((c == rat(1) || c == rat(-1)));
    (c == rat(1) ? pos : neg) += 1;
    sum += c;
  }
  CHECK(pos == 18);
  CHECK(neg == 18);
  CHECK(is_zero(sum));
}

TEST_CASE("det3 contracted on the diagonal gives 6 det(X)") {
  // independent oracle: cofactor-expansion determinant of a random matrix
  TensorSystem sys = det3_system();
  const SpacePtr X = sys.A;
  std::vector<std::vector<Rational>> x = {
      {rat(2), rat(-1), rat(3)}, {rat(0), rat(1), rat(4)}, {rat(5), rat(1), rat(-2)}};
  auto det3x3 = [&](const std::vector<std::vector<Rational>>& m) -> Rational {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  Rational acc(0);
  for (const auto& [idx, c] : sys.T.coeffs) {
    const auto& t = sys.ABC->tuple(idx);
    Rational prod = c;
    for (int slot = 0; slot < 3; ++slot) {
      const auto& uv = X->tuple(t[slot]);
      prod *= x[uv[0]][uv[1]];
    }
    acc += prod;
  }
  Rational expected = rat(6) * det3x3(x);
  CHECK(acc == expected);
}

TEST_CASE("mamu flattening is U* x Id_V x W of dimension wu") {
  TensorSystem sys = mamu_system(2, 3, 4);
  Subspace f = flattening(sys, Grading::AB);
  CHECK(f.dim() == 2 * 4);  // u*w
  // each generator contracts to u^i (x) Id_V (x) w_k
  // check one explicitly: sum_j (u^1 v_j) (x) (v^j w_1)
  SparseRow v;
  for (int j = 0; j < 3; ++j) {
    int a = sys.A->encode_tensor({0, j});
    int b = sys.B->encode_tensor({j, 0});
    v.emplace_back(sys.AB->encode_tensor({a, b}), rat(1));
  }
  std::sort(v.begin(), v.end(), [](auto& p, auto& q) { return p.first < q.first; });
  CHECK(f.contains(v));
}

TEST_CASE("det3 flattening is Lambda^2 U x Lambda^2 V of dimension 9") {
  TensorSystem sys = det3_system();
  Subspace f = flattening(sys, Grading::AB);
  CHECK(f.dim() == 9);
  // the honest wedge embedding of (u_2^u_3) x (v_2^v_3) lies inside
  const SpacePtr X = sys.A;
  SparseRow v;
  auto add = [&](int ui, int vi, int uj, int vj, int s) {
    int p = X->encode_tensor({ui, vi});
    int q = X->encode_tensor({uj, vj});
    v = row_axpy(v, rat(s), SparseRow{{sys.AB->encode_tensor({p, q}), rat(1)}});
  };
  add(1, 1, 2, 2, 1);
  add(1, 2, 2, 1, -1);
  add(2, 1, 1, 2, -1);
  add(2, 2, 1, 1, 1);
  CHECK(f.contains(v));
}

TEST_CASE("conciseness of the target tensors, rank-one is not concise") {
  CHECK(is_concise(mamu_system(2, 2, 2)));
  CHECK(is_concise(mamu_system(2, 2, 3)));
  CHECK(is_concise(det3_system()));
  // rank-one tensor in the 2x2x2 ambient
  TensorSystem sys = mamu_system(2, 2, 2);
  TensorSystem rank1 = sys;
  rank1.T.coeffs.clear();
  rank1.T.coeffs[sys.ABC->encode_tensor({0, 0, 0})] = rat(1);
  CHECK(!is_concise(rank1));
}

TEST_CASE("x^2_1 (x) y^2_1 is a highest weight vector for M<2>") {
  TensorSystem sys = mamu_system(2, 2, 2);
  // x^2_1 = u^2 v_1 -> A index (1,0); y^2_1 = v^2 w_1 -> B index (1,0)
  const int a = sys.A->encode_tensor({1, 0});
  const int b = sys.B->encode_tensor({1, 0});
  const int idx = sys.AB->encode_tensor({a, b});
  for (const RaisingOp& op : sys.ops()) {
    const SparseMatrix& r = sys.AB->raising_matrix(op);
    CHECK(r.transpose().row(idx).empty());  // column idx is zero
  }
}

TEST_CASE("annihilator of T has codimension 1") {
  TensorSystem sys = mamu_system(2, 2, 2);
  Subspace ann = annihilator_of(sys.T);
  CHECK(codim(ann) == 1);
}

#include "doctest.h"

#include <random>
#include <set>

#include "borank/engine.hpp"
#include "borank/maps.hpp"
#include "oracles.hpp"

using namespace borank;

namespace {

std::shared_ptr<WeightedModule> shared_comp(const TensorSystem& sys, Grading g) {
  return std::make_shared<WeightedModule>(complement_module(sys, g));
}

// full E_110 = flattening (+) embedded E' in pair coordinates
Subspace full_e(const TensorSystem& sys, Grading g, const WeightedModule& comp,
                const Subspace& eprime) {
  Subspace flat = flattening(sys, g);
  SparseMatrix rows = flat.basis_rows();
  for (int i = 0; i < eprime.dim(); ++i) rows.add_row(comp.embed(eprime.basis_rows().row(i)));
  return Subspace::span(rows);
}

Subspace family_subspace(const std::vector<BorelFixedFamily>& fams, int i) {
  return fams[static_cast<std::size_t>(i)].as_subspace();
}

}  // namespace

TEST_CASE("skew map on a rank-one E has a one-dimensional kernel") {
  // E = span{a1 (x) b1}: kernel of E x A -> Λ²A x B is a1 (x) (a1 (x) b1)
  TensorSystem sys = mamu_system(2, 2, 2);
  SparseRow e{{sys.AB->encode_tensor({0, 0}), rat(1)}};
  Subspace s = Subspace::span(sys.AB->dim(), {e});
  CHECK(skew_kernel_dim(sys, Grading::AB, s, PairSide::S210) == 1);
}

TEST_CASE("M<2> candidates: skew ranks and the reduced kernels {6,5,4}") {
  TensorSystem sys = mamu_system(2, 2, 2);
  auto comp = shared_comp(sys, Grading::AB);
  auto fams = enumerate_borel_fixed(comp, 2);
  REQUIRE(fams.size() == 3);

  std::vector<int> reduced, full_kernels, full_ranks;
  for (const auto& f : fams) {
    Subspace eprime = f.as_subspace();
    reduced.push_back(reduced_210_kernel(sys, Grading::AB, *comp, eprime));
    Subspace e110 = full_e(sys, Grading::AB, *comp, eprime);
    CHECK(e110.dim() == 6);
    full_kernels.push_back(skew_kernel_dim(sys, Grading::AB, e110, PairSide::S210));
    full_ranks.push_back(skew_rank(sys, Grading::AB, e110, PairSide::S210));
  }
  // kernel equality between the reduced map and the full skew map
  CHECK(reduced == full_kernels);
  std::vector<int> sorted_red = reduced;
  std::sort(sorted_red.begin(), sorted_red.end());
  CHECK(sorted_red == std::vector<int>{4, 5, 6});
  // the sl(V)-lowered candidate has skew rank 19 on its 24-dim domain
  bool saw_19 = false;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    if (full_kernels[i] == 5) {
      CHECK(full_ranks[i] == 19);
      saw_19 = true;
    }
  }
  CHECK(saw_19);
}

TEST_CASE("M<223>: the unique (210)-passer has kernel 9 and (120)-kernel 7") {
  TensorSystem sys = mamu_system(2, 2, 3);
  auto comp = shared_comp(sys, Grading::AB);
  auto fams = enumerate_borel_fixed(comp, 3);
  REQUIRE(fams.size() == 5);
  int passers = 0;
  for (const auto& f : fams) {
    Subspace eprime = f.as_subspace();
    Subspace e110 = full_e(sys, Grading::AB, *comp, eprime);
    const int k210 = skew_kernel_dim(sys, Grading::AB, e110, PairSide::S210);
    CHECK(k210 == reduced_210_kernel(sys, Grading::AB, *comp, eprime));
    if (k210 >= 9) {
      ++passers;
      CHECK(k210 == 9);
      // the paper reports 7 here; the exact value is 8 (see the decisions
      // ledger), confirmed below by an independent polarization route, and
      // either way the candidate fails the (120) test at r = 9
      const int k120 = skew_kernel_dim(sys, Grading::AB, e110, PairSide::S120);
      CHECK(k120 == 8);
      CHECK(k120 < 9);
      std::optional<Subspace> none;
      CHECK(degree_test_dim(sys, 1, 2, 0, none, e110, none) == k120);
    }
  }
  CHECK(passers == 1);
}

TEST_CASE("M<233>: all ten candidates fail; reduced ranks include 14 and 12") {
  TensorSystem sys = mamu_system(3, 2, 3);
  auto comp = shared_comp(sys, Grading::AB);
  auto fams = enumerate_borel_fixed(comp, 4);
  REQUIRE(fams.size() == 10);
  const int r = 13;
  std::set<int> failing_side_ranks;
  int both_pass = 0;
  const int domain = 4 * sys.A->dim();  // 24
  for (const auto& f : fams) {
    Subspace eprime = f.as_subspace();
    Subspace e110 = full_e(sys, Grading::AB, *comp, eprime);
    const int k210 = skew_kernel_dim(sys, Grading::AB, e110, PairSide::S210);
    const int k120 = skew_kernel_dim(sys, Grading::AB, e110, PairSide::S120);
    CHECK(k210 == reduced_210_kernel(sys, Grading::AB, *comp, eprime));
    if (k210 >= r && k120 >= r) ++both_pass;
    // reduced-map rank of whichever side fails (threshold: rank <= 11 passes)
    if (k210 < r) failing_side_ranks.insert(domain - k210);
    if (k120 < r) failing_side_ranks.insert(domain - k120);
  }
  CHECK(both_pass == 0);
  CHECK(failing_side_ranks.count(14) == 1);
  CHECK(failing_side_ranks.count(12) == 1);
  for (int rk : failing_side_ranks) CHECK(rk >= 12);
}

TEST_CASE("Prop 7.1 equality on random Borel-fixed subspaces") {
  // reduced kernel == full skew kernel for random discrete candidates
  for (auto [l, m, n, d] : {std::tuple{2, 2, 2, 3}, std::tuple{3, 3, 3, 2}}) {
    TensorSystem sys = mamu_system(l, m, n);
    auto comp = shared_comp(sys, Grading::AB);
    auto fams = enumerate_borel_fixed(comp, d);
    int checked = 0;
    for (const auto& f : fams) {
      if (!f.discrete() && f.params.size() > 2) continue;
      std::map<std::string, Rational> pt;
      for (const auto& p : f.params) pt[p] = rat(3);
      bool ok = true;
      for (const Poly& eq : f.closure_eqs)
        if (!is_zero(eq.evaluate(pt))) ok = false;
      if (!ok) continue;
      Subspace eprime = f.specialize(pt);
      if (!f.is_raising_stable(eprime)) continue;
      Subspace e110 = full_e(sys, Grading::AB, *comp, eprime);
      CHECK(reduced_210_kernel(sys, Grading::AB, *comp, eprime) ==
            skew_kernel_dim(sys, Grading::AB, e110, PairSide::S210));
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("U* <-> W mirror: (120) kernel equals (210) kernel of the transpose") {
  TensorSystem sys = mamu_system(3, 2, 3);
  auto comp = shared_comp(sys, Grading::AB);
  auto mirror = mirror_index_map(3, 2, 3);
  auto fams = enumerate_borel_fixed(comp, 4);
  for (const auto& f : fams) {
    Subspace eprime = f.as_subspace();
    // transported subspace in the mirrored system (same dims here)
    std::vector<SparseRow> rows;
    for (int i = 0; i < eprime.dim(); ++i) {
      SparseRow v;
      for (const auto& [c, val] : eprime.basis_rows().row(i)) {
        auto [tc, sign] = mirror[c];
        v.emplace_back(tc, val * sign);
      }
      std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
      rows.push_back(std::move(v));
    }
    Subspace mirrored = Subspace::span(comp->dim(), rows);
    Subspace e110 = full_e(sys, Grading::AB, *comp, eprime);
    Subspace e110_m = full_e(sys, Grading::AB, *comp, mirrored);
    CHECK(skew_kernel_dim(sys, Grading::AB, e110, PairSide::S120) ==
          skew_kernel_dim(sys, Grading::AB, e110_m, PairSide::S210));
  }
}

TEST_CASE("equivariance of the skew map") {
  // raising on the target commutes with raising on the source through the map
  TensorSystem sys = mamu_system(2, 2, 2);
  SpacePtr pair = sys.AB;
  // basis E = whole pair space; matrix of skew in those coordinates
  std::vector<SparseRow> basis(pair->dim());
  for (int i = 0; i < pair->dim(); ++i) basis[i] = {{i, rat(1)}};
  SparseMatrix skew = skew_map_matrix(sys, Grading::AB, basis, PairSide::S210);
  SpacePtr domain = TensorSpace::tensor({pair, sys.A});
  SpacePtr wedge = TensorSpace::ext(2, sys.A);
  SpacePtr target = TensorSpace::tensor({wedge, sys.B});
  REQUIRE(skew.nrows() == target->dim());
  REQUIRE(skew.ncols() == domain->dim());
  for (const RaisingOp& op : sys.ops()) {
    SparseMatrix lhs = skew.multiply(domain->raising_matrix(op));
    SparseMatrix rhs = target->raising_matrix(op).multiply(skew);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("triple intersection equals codim of the (111) image") {
  // transpose-kernel duality on random small candidates
  std::mt19937 rng(424242);
  TensorSystem sys = mamu_system(2, 2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    auto rand_subspace = [&](const SpacePtr& space, int d) {
      SparseMatrix m = oracles::random_int_matrix(rng, d, space->dim(), -2, 2, 0.35);
      return Subspace::span(m);
    };
    Subspace e110 = rand_subspace(sys.AB, 5);
    Subspace e101 = rand_subspace(sys.AC, 5);
    Subspace e011 = rand_subspace(sys.BC, 5);
    const int staged = triple_intersection_dim(sys, e110, e101, e011);
    // direction-d predecessor at (1,1,1) is the piece at the grading with
    // d removed: A-dir gets E011, B-dir E101, C-dir E110
    const int dual = degree_test_dim(sys, 1, 1, 1, e011, e101, e110);
    CHECK(staged == dual);
    // primal route: codim of the image of the multiplication map
    SparseMatrix primal = multiplication_map(sys, 1, 1, 1, e011, e101, e110);
    CHECK(staged == sys.ABC->dim() - rank(primal));
  }
}

TEST_CASE("degree test consistency: (2,1,0) with only F110 reproduces the skew kernel") {
  TensorSystem sys = mamu_system(2, 2, 2);
  auto comp = shared_comp(sys, Grading::AB);
  auto fams = enumerate_borel_fixed(comp, 2);
  for (const auto& f : fams) {
    Subspace e110 = full_e(sys, Grading::AB, *comp, f.as_subspace());
    std::optional<Subspace> none;
    const int dual = degree_test_dim(sys, 2, 1, 0, e110, none, none);
    CHECK(dual == skew_kernel_dim(sys, Grading::AB, e110, PairSide::S210));
    // and the primal multiplication-map route agrees
    SparseMatrix primal = multiplication_map(sys, 2, 1, 0, e110, none, none);
    SpacePtr target = graded_space(sys, 2, 1, 0);
    CHECK(dual == target->dim() - rank(primal));
  }
}

TEST_CASE("(2,0,0) with the full S2A* present fails for any positive r") {
  TensorSystem sys = mamu_system(2, 2, 2);
  // E_200 = 0 so F_200 = S2A*: the (3,0,0)-type map is surjective
  Subspace zero = Subspace::zero(TensorSpace::sym(2, sys.A)->dim());
  std::optional<Subspace> none;
  CHECK(degree_test_dim(sys, 3, 0, 0, zero, none, none) == 0);
}

TEST_CASE("diagonal unit tensor: coordinate-point ideal passes everything") {
  // T = sum_i a_i x b_i x c_i for r <= dims: E pieces span the diagonal
  for (int dims : {3, 4}) {
    for (int r = 2; r <= dims; ++r) {
      TensorSystem sys = mamu_system(1, 1, 1);  // placeholder spaces rebuilt below
      SpacePtr A = TensorSpace::leaf({"U", dims, false, "a"});
      sys.name = "diag";
      sys.groups = {{"U", dims}};
      sys.A = sys.B = sys.C = A;
      sys.AB = sys.AC = sys.BC = TensorSpace::tensor({A, A});
      sys.ABC = TensorSpace::tensor({A, A, A});
      sys.T.space = sys.ABC;
      sys.T.coeffs.clear();
      for (int i = 0; i < r; ++i) sys.T.coeffs[sys.ABC->encode_tensor({i, i, i})] = rat(1);
      // diagonal E pieces: span{a_i x a_i} for i < r
      std::vector<SparseRow> diag;
      for (int i = 0; i < r; ++i) diag.push_back({{sys.AB->encode_tensor({i, i}), rat(1)}});
      Subspace e = Subspace::span(sys.AB->dim(), diag);
      CHECK(triple_intersection_dim(sys, e, e, e) == r);
      CHECK(triple_contains_tensor(sys, e, e, e));
      // mixed-degree codim is exactly r for the coordinate-point ideal
      std::vector<SparseRow> diag2;
      SpacePtr s2 = TensorSpace::sym(2, A);
      for (int i = 0; i < r; ++i) diag2.push_back({{s2->encode_sym({i, i}), rat(1)}});
      Subspace e2 = Subspace::span(s2->dim(), diag2);
      std::optional<Subspace> none;
      CHECK(degree_test_dim(sys, 2, 1, 0, e, e2, none) == r);
      CHECK(degree_test_dim(sys, 1, 1, 1, e, e, e) == r);
    }
  }
}

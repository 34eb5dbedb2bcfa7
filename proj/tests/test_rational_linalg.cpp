#include "doctest.h"

#include <random>

#include "borank/sparse_matrix.hpp"
#include "borank/subspace.hpp"
#include "oracles.hpp"

using namespace borank;

TEST_CASE("rank of identity") {
  CHECK(rank(SparseMatrix::identity(3)) == 3);
}

TEST_CASE("rank agrees with exhaustive minors on random matrices") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 25; ++trial) {
    SparseMatrix m = oracles::random_int_matrix(rng, 6, 8, -4, 4, 0.6);
    const int expected = oracles::rank_by_minors(m);
    CHECK(rank(m) == expected);
    CHECK(rank_naive(m) == expected);
  }
}

TEST_CASE("rank equals rank of transpose") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    SparseMatrix m = oracles::random_int_matrix(rng, 7, 5, -9, 9, 0.5);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("fraction-free and naive rational elimination agree") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> dim(1, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    SparseMatrix m = oracles::random_int_matrix(rng, dim(rng), dim(rng), -9, 9, 0.55);
    CHECK(rank(m) == rank_naive(m));
  }
}

TEST_CASE("kernel of identity is the zero subspace") {
  Subspace k = kernel_basis(SparseMatrix::identity(4));
  CHECK(k.dim() == 0);
  CHECK(k.ambient_dim() == 4);
}

TEST_CASE("kernel of [1 -1]") {
  SparseMatrix m(1, 2);
  m.set(0, 0, rat(1));
  m.set(0, 1, rat(-1));
  Subspace k = kernel_basis(m);
  REQUIRE(k.dim() == 1);
  SparseRow v{{0, rat(1)}, {1, rat(1)}};
  CHECK(k.contains(v));
}

TEST_CASE("rank + kernel dim = ncols") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    SparseMatrix m = oracles::random_int_matrix(rng, 6, 9, -5, 5, 0.4);
    CHECK(rank(m) + kernel_basis(m).dim() == m.ncols());
  }
}

TEST_CASE("M v = 0 for kernel basis vectors") {
  std::mt19937 rng(5);
  SparseMatrix m = oracles::random_int_matrix(rng, 5, 8, -6, 6, 0.5);
  Subspace k = kernel_basis(m);
  SparseMatrix mt = m.transpose();
  for (int i = 0; i < k.dim(); ++i) {
    // row vector v: check M v = 0 via transpose application
    CHECK(mt.apply(k.basis_rows().row(i)).empty());
  }
}

TEST_CASE("subspace lattice identities") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    SparseMatrix a = oracles::random_int_matrix(rng, 3, 7, -3, 3, 0.5);
    SparseMatrix b = oracles::random_int_matrix(rng, 3, 7, -3, 3, 0.5);
    Subspace s1 = Subspace::span(a), s2 = Subspace::span(b);
    Subspace si = intersect(s1, s2), ss = sum(s1, s2);
    CHECK(s1.dim() + s2.dim() == si.dim() + ss.dim());
    CHECK(ss.contains(s1));
    CHECK(ss.contains(s2));
    CHECK(s1.contains(si));
    CHECK(s2.contains(si));
    // annihilator is involutive and reverses inclusion
    CHECK(annihilator(annihilator(s1)) == s1);
    CHECK(codim(annihilator(s1)) == s1.dim());
    CHECK(annihilator(ss).dim() <= annihilator(s1).dim());
    CHECK(annihilator(s1).contains(annihilator(ss)));
  }
}

TEST_CASE("idempotence of intersect and sum") {
  std::mt19937 rng(17);
  SparseMatrix a = oracles::random_int_matrix(rng, 2, 5, -3, 3, 0.7);
  Subspace s = Subspace::span(a);
  CHECK(intersect(s, s) == s);
  CHECK(sum(s, s) == s);
}

TEST_CASE("explicit intersection in ambient dim 4") {
  // span{e1,e2} and span{e2,e3} meet in span{e2}
  SparseMatrix a(2, 4), b(2, 4);
  a.set(0, 0, rat(1));
  a.set(1, 1, rat(1));
  b.set(0, 1, rat(1));
  b.set(1, 2, rat(1));
  Subspace si = intersect(Subspace::span(a), Subspace::span(b));
  REQUIRE(si.dim() == 1);
  CHECK(si.contains(SparseRow{{1, rat(1)}}));
}

TEST_CASE("mismatched ambient spaces raise") {
  Subspace s1 = Subspace::zero(3), s2 = Subspace::zero(4);
  CHECK_THROWS_AS(intersect(s1, s2), std::invalid_argument);
  CHECK_THROWS_AS(sum(s1, s2), std::invalid_argument);
}

TEST_CASE("rref is canonical under row scrambling") {
  std::mt19937 rng(1234);
  SparseMatrix a = oracles::random_int_matrix(rng, 4, 6, -4, 4, 0.6);
  Subspace s1 = Subspace::span(a);
  // scramble: random invertible row operations
  SparseMatrix b = a;
  for (int i = 0; i < 4; ++i)
    b.set_row(i, row_axpy(b.row(i), rat((i * 7 + 3) % 5 + 1), b.row((i + 1) % 4)));
  Subspace s2 = Subspace::span(b);
  if (rank(a) == rank(b)) CHECK(s1 == s2);
}

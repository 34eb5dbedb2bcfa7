#include "doctest.h"

#include <random>

#include "borank/rank_locus.hpp"
#include "oracles.hpp"

using namespace borank;

namespace {

RingPtr make_ring(std::vector<std::string> vars) {
  auto r = std::make_shared<PolyRing>();
  r->vars = std::move(vars);
  return r;
}

bool product_vanishes(const std::vector<LocusRecord>& recs,
                      const std::map<std::string, Rational>& pt) {
  // V(product of record ideals) = union of V(generators_i); the zero ideal
  // (no generators) vanishes everywhere, the empty record list nowhere.
  for (const auto& rec : recs) {
    bool all_zero = true;
    for (const Poly& g : rec.generators)
      if (!is_zero(g.evaluate(pt))) { all_zero = false; break; }
    if (all_zero) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("specialize: constant matrix unchanged, [[t]] at 0") {
  auto ring = make_ring({"t"});
  PolyMatrix m(1, 1, ring);
  m.set(0, 0, Poly::variable(ring, 0));
  SparseMatrix s = m.specialize({{"t", rat(0)}});
  CHECK(s.is_zero());

  PolyMatrix c(2, 2, ring);
  c.set(0, 0, Poly::constant(ring, rat(3)));
  c.set(1, 1, Poly::constant(ring, rat(-2, 7)));
  SparseMatrix sc = c.specialize({});
  CHECK(sc.get(0, 0) == rat(3));
  CHECK(sc.get(1, 1) == rat(-2, 7));
}

TEST_CASE("rank_locus: unit 1x1 gives empty locus") {
  auto ring = make_ring({"t"});
  PolyMatrix m(1, 1, ring);
  m.set(0, 0, Poly::constant(ring, rat(1)));
  CHECK(rank_locus(m, 1).empty());
}

TEST_CASE("rank_locus: [[t]] gives {t}") {
  auto ring = make_ring({"t"});
  PolyMatrix m(1, 1, ring);
  m.set(0, 0, Poly::variable(ring, 0));
  auto recs = rank_locus(m, 1);
  REQUIRE(recs.size() == 1);
  REQUIRE(recs[0].generators.size() == 1);
  CHECK(recs[0].generators[0].to_string() == "t");
}

TEST_CASE("rank_locus: [[t,1],[1,s]] full-rank drop is the determinant") {
  auto ring = make_ring({"t", "s"});
  PolyMatrix m(2, 2, ring);
  m.set(0, 0, Poly::variable(ring, 0));
  m.set(0, 1, Poly::constant(ring, rat(1)));
  m.set(1, 0, Poly::constant(ring, rat(1)));
  m.set(1, 1, Poly::variable(ring, 1));
  auto recs = rank_locus(m, 2);
  REQUIRE(recs.size() == 1);
  REQUIRE(recs[0].generators.size() == 1);
  CHECK(recs[0].generators[0].to_string() == "t*s - 1");
}

TEST_CASE("rank_locus soundness on random parametric matrices") {
  // product-of-ideals zero set == exact rank drop, sampled at random points
  std::mt19937 rng(321);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pt_val(-4, 4);
  std::uniform_int_distribution<int> rb(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    auto ring = make_ring({"t", "s"});
    PolyMatrix m(4, 4, ring);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        Poly p = Poly::constant(ring, rat(coeff(rng)));
        p += Poly::variable(ring, 0) * rat(coeff(rng));
        p += Poly::variable(ring, 1) * rat(coeff(rng));
        if (!p.is_zero()) m.set(r, c, p);
      }
    const int r_bound = rb(rng);
    auto recs = rank_locus(m, r_bound);
    for (int probe = 0; probe < 20; ++probe) {
      std::map<std::string, Rational> pt{{"t", rat(pt_val(rng))}, {"s", rat(pt_val(rng))}};
      const bool drops = oracles::rank_by_minors(m.specialize(pt)) < r_bound;
      CHECK(product_vanishes(recs, pt) == drops);
    }
  }
}

TEST_CASE("locus_status basics") {
  auto ring = make_ring({"t", "s"});
  SUBCASE("unit ideal is empty") {
    LocusRecord rec;
    rec.generators = {Poly::constant(ring, rat(1))};
    CHECK(locus_status(rec).status == LocusStatus::Empty);
  }
  SUBCASE("single variable has the origin as witness") {
    LocusRecord rec;
    rec.generators = {Poly::variable(ring, 0)};
    auto probe = locus_status(rec);
    REQUIRE(probe.status == LocusStatus::NonemptyWithWitness);
    CHECK(probe.witness.at("t") == rat(0));
  }
  SUBCASE("t inverted makes {t} empty") {
    LocusRecord rec;
    rec.generators = {Poly::variable(ring, 0)};
    rec.inverted = {Poly::variable(ring, 0)};
    CHECK(locus_status(rec).status == LocusStatus::Empty);
  }
  SUBCASE("ts - 1 has a rational witness") {
    LocusRecord rec;
    Poly g = Poly::variable(ring, 0) * Poly::variable(ring, 1) - Poly::constant(ring, rat(1));
    rec.generators = {g};
    auto probe = locus_status(rec);
    REQUIRE(probe.status == LocusStatus::NonemptyWithWitness);
    CHECK(is_zero(g.evaluate(probe.witness)));
    CHECK(probe.witness.at("t") == rat(1));
    CHECK(probe.witness.at("s") == rat(1));
  }
}

TEST_CASE("locus_status never reports empty when a verified witness exists") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> coeff(-2, 2);
  auto ring = make_ring({"t", "s"});
  for (int trial = 0; trial < 200; ++trial) {
    PolyMatrix m(3, 3, ring);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        Poly p = Poly::constant(ring, rat(coeff(rng)));
        p += Poly::variable(ring, 0) * rat(coeff(rng));
        p += Poly::variable(ring, 1) * rat(coeff(rng));
        if (!p.is_zero()) m.set(r, c, p);
      }
    auto recs = rank_locus(m, 3);
    for (const auto& rec : recs) {
      auto probe = locus_status(rec);
      if (probe.status == LocusStatus::NonemptyWithWitness) {
        for (const Poly& g : rec.generators) CHECK(is_zero(g.evaluate(probe.witness)));
        for (const Poly& inv : rec.inverted) CHECK(!is_zero(inv.evaluate(probe.witness)));
      }
      if (probe.status == LocusStatus::Empty) {
        // spot check: no grid point satisfies the record
        for (int a = -2; a <= 2; ++a)
          for (int b = -2; b <= 2; ++b) {
            std::map<std::string, Rational> pt{{"t", rat(a)}, {"s", rat(b)}};
            bool on_branch = true;
            for (const Poly& g : rec.generators)
              if (!is_zero(g.evaluate(pt))) { on_branch = false; break; }
            if (on_branch)
              for (const Poly& inv : rec.inverted)
                if (is_zero(inv.evaluate(pt))) { on_branch = false; break; }
            CHECK(!on_branch);
          }
      }
    }
  }
}

TEST_CASE("export format matches the documented layout") {
  auto ring = make_ring({"t", "s"});
  LocusRecord rec;
  rec.generators = {Poly::variable(ring, 0)};
  CHECK(export_ideal(rec) == "inv:\nt\n");

  LocusRecord rec2;
  rec2.generators = normalize_generators(
      {Poly::variable(ring, 0) * Poly::variable(ring, 1) - Poly::constant(ring, rat(1)),
       Poly::variable(ring, 1)});
  rec2.inverted = {Poly::variable(ring, 0)};
  std::string text = export_ideal(rec2);
  CHECK(text.rfind("inv: t\n", 0) == 0);
  int gen_lines = 0;
  for (char c : text)
    if (c == '\n') ++gen_lines;
  CHECK(gen_lines == 3);  // header + two generators
}

TEST_CASE("export/import round trip") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    auto ring = make_ring({"t", "s", "u"});
    PolyMatrix m(3, 4, ring);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 4; ++c) {
        Poly p = Poly::constant(ring, rat(coeff(rng)));
        p += Poly::variable(ring, 0) * rat(coeff(rng));
        p += Poly::variable(ring, 1) * rat(coeff(rng));
        p += Poly::variable(ring, 2) * rat(coeff(rng));
        if (!p.is_zero()) m.set(r, c, p);
      }
    for (const auto& rec : rank_locus(m, 3)) {
      auto ring2 = std::make_shared<PolyRing>(*ring);
      LocusRecord back = import_ideal(ring2, export_ideal(rec));
      CHECK(back == rec);
      CHECK(export_ideal(back) == export_ideal(rec));
    }
  }
}

TEST_CASE("branching covers all specializations") {
  // every rank-dropping point lies on some branch domain (generators vanish,
  // with that branch's inverted polynomials nonzero)
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> pt_val(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    auto ring = make_ring({"t", "s"});
    PolyMatrix m(3, 3, ring);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        Poly p = Poly::constant(ring, rat(coeff(rng)));
        p += Poly::variable(ring, 0) * rat(coeff(rng));
        p += Poly::variable(ring, 1) * rat(coeff(rng));
        if (!p.is_zero()) m.set(r, c, p);
      }
    auto recs = rank_locus(m, 2);
    for (int probe = 0; probe < 10; ++probe) {
      std::map<std::string, Rational> pt{{"t", rat(pt_val(rng))}, {"s", rat(pt_val(rng))}};
      if (oracles::rank_by_minors(m.specialize(pt)) < 2) {
        bool covered = false;
        for (const auto& rec : recs) {
          bool zero = true;
          for (const Poly& g : rec.generators)
            if (!is_zero(g.evaluate(pt))) { zero = false; break; }
          if (zero) { covered = true; break; }
        }
        CHECK(covered);
      }
    }
  }
}

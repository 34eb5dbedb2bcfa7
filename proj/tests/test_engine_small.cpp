#include "doctest.h"

#include <set>

#include "borank/engine.hpp"

using namespace borank;

TEST_CASE("M<2> at r=6: three candidates, unique (210)-passer, bound proved") {
  TensorSystem sys = mamu_system(2, 2, 2);
  Certificate cert = certify(sys, 6);
  CHECK(cert.conclusion == Conclusion::BorderRankExceedsR);
  REQUIRE(!cert.stages.empty());
  const StageReport& st = cert.stages[0];
  CHECK(st.families == 3);
  CHECK(st.survivors == 0);
  // reduced (210) kernels across the three candidates are {6,5,4}; the
  // kernel-6 candidate passes (210) and fails (120) with kernel 4
  std::multiset<int> kernels;
  int passer_120_kernel = -1;
  for (const auto& o : st.outcomes) {
    REQUIRE(!o.tests.empty());
    kernels.insert(o.tests[0].kernel_dim);
    if (o.tests[0].pass) {
      REQUIRE(o.tests.size() == 2);
      passer_120_kernel = o.tests[1].kernel_dim;
    }
  }
  CHECK(kernels == std::multiset<int>{4, 5, 6});
  CHECK(passer_120_kernel == 4);
}

TEST_CASE("M<2> at r=7: survivors remain (the true border rank)") {
  TensorSystem sys = mamu_system(2, 2, 2);
  Certificate cert = certify(sys, 7);
  CHECK(cert.conclusion == Conclusion::SurvivorsRemain);
  CHECK(cert.stages.size() == 3);
  CHECK(cert.stages[0].families == 4);  // the four B-fixed 3-planes
  CHECK(cert.triples.passed > 0);
  if (cert.quadratic.ran) CHECK(cert.quadratic.fully_extended > 0);
}

TEST_CASE("M<223> ladder: refuted through r=9, bound 10") {
  TensorSystem sys = mamu_system(2, 2, 3);
  BoundLadder ladder = bound_ladder(sys, 6, 10);
  CHECK(ladder.first_surviving_r == 10);
  for (const auto& [r, c] : ladder.steps)
    if (r <= 9) CHECK(c == Conclusion::BorderRankExceedsR);
}

TEST_CASE("M<233> at r=13: all candidates refuted") {
  TensorSystem sys = mamu_system(3, 2, 3);
  Certificate cert = certify(sys, 13);
  CHECK(cert.conclusion == Conclusion::BorderRankExceedsR);
  CHECK(cert.stages[0].families == 10);
  CHECK(cert.stages[0].survivors == 0);
}

TEST_CASE("below the conciseness bound refutes immediately") {
  TensorSystem sys = mamu_system(2, 2, 3);
  Certificate cert = certify(sys, 5);
  CHECK(cert.below_conciseness);
  CHECK(cert.conclusion == Conclusion::BorderRankExceedsR);
}

TEST_CASE("certificates replay with an identical hash") {
  TensorSystem sys = mamu_system(2, 2, 2);
  Certificate a = certify(sys, 6);
  Certificate b = certify(sys, 6);
  CHECK(a.hash == b.hash);
  CHECK(to_json(a) == to_json(b));
  CertifyOptions one_worker;
  one_worker.workers = 1;
  Certificate c = certify(sys, 6, one_worker);
  CHECK(a.hash == c.hash);
}

TEST_CASE("certificate json carries the documented schema") {
  TensorSystem sys = mamu_system(2, 2, 2);
  Certificate cert = certify(sys, 6);
  std::string j = to_json(cert);
  for (const char* key : {"\"tensor\"", "\"r\"", "\"degree_cap\"", "\"stages\"", "\"grading\"",
                          "\"candidates\"", "\"passed\"", "\"details\"", "\"triples\"",
                          "\"total\"", "\"mod_symmetry\"", "\"conclusion\"", "\"hash\""})
    CHECK(j.find(key) != std::string::npos);
}

TEST_CASE("soundness monotonicity on the small ladder") {
  // the engine never reports a bound above the first surviving r
  TensorSystem sys = mamu_system(2, 2, 2);
  BoundLadder ladder = bound_ladder(sys, 4, 8);
  CHECK(ladder.first_surviving_r == 7);
}

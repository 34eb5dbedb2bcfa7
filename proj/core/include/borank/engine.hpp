#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "borank/borel.hpp"
#include "borank/maps.hpp"
#include "borank/rank_locus.hpp"
#include "borank/tensor_element.hpp"

namespace borank {

/// Outcome of one rank test on one candidate (or candidate family).
struct TestResult {
  std::string name;         // "210", "120", "111", "300", "210+200", ...
  int rows = 0, cols = 0;   // observed matrix shape
  int observed_rank = -1;   // exact runs
  int kernel_dim = -1;      // exact runs
  int required_kernel = 0;
  bool parametric = false;
  int locus_branches = 0;   // parametric runs
  bool pass = false;
  bool undecided = false;
};

/// Resolution of one enumerated family against its pairwise tests.
struct FamilyOutcome {
  std::string description;
  bool parametric = false;
  std::vector<std::string> params;
  std::vector<TestResult> tests;
  /// discrete surviving subspaces found in this family (parameter points or
  /// the cell itself), in complement-module coordinates
  std::vector<Subspace> survivors;
  std::vector<std::map<std::string, Rational>> survivor_points;
  bool survives_with_free_parameters = false;
  bool undecided = false;
};

struct StageReport {
  Grading grading = Grading::AB;
  int eprime_dim = 0;
  int families = 0;
  int survivors = 0;  // discrete resolved survivors
  bool free_parameter_survivors = false;
  bool undecided = false;
  std::vector<FamilyOutcome> outcomes;
};

struct TripleReport {
  long total = 0;
  long mod_symmetry = 0;
  long tested = 0;
  long passed = 0;
  std::vector<std::array<int, 3>> passing;  // survivor indices (AB, AC, BC)
  std::vector<int> intersection_dims;       // aligned with passing? no: per tested triple when passed
};

struct QuadraticStage {  // step (iv): the degree-(2,0,0)-type pieces
  bool ran = false;
  long triples_checked = 0;
  long fully_extended = 0;  // triples admitting E200, E020 and E002
  bool undecided = false;
};

enum class Conclusion { BorderRankExceedsR, SurvivorsRemain, UndecidedBranches };

struct Certificate {
  int schema_version = 1;
  std::string tensor;
  int r = 0;
  int degree_cap = 3;
  bool concise = false;
  std::array<int, 3> flattening_ranks{0, 0, 0};
  bool below_conciseness = false;
  std::vector<StageReport> stages;
  TripleReport triples;
  QuadraticStage quadratic;
  Conclusion conclusion = Conclusion::UndecidedBranches;
  std::string hash;

  std::string conclusion_string() const;
};

struct CertifyOptions {
  int degree_cap = 3;
  int workers = 0;          // 0: hardware concurrency
  bool keep_outcomes = true;  // include per-family details in the certificate
};

/// Runs the candidate/test pipeline for one grading at border rank r.
StageReport run_stage(const TensorSystem& sys, Grading g, int r, int workers = 1);

/// The full certification: stage (i)/(ii) pairwise tests on all needed
/// gradings, triple assembly with symmetry counting, the (111) test, and the
/// degree-cap-3 quadratic stage when survivors remain.
Certificate certify(const TensorSystem& sys, int r, const CertifyOptions& opts = {});

/// Ladder of refutations: largest R such that every r in [r_min, R-1] is
/// refuted, where r_min is the conciseness bound. Returns the first
/// non-refuted r and the per-r conclusions.
struct BoundLadder {
  int first_surviving_r = 0;
  int refuted_from = 0;  // conciseness bound
  std::vector<std::pair<int, Conclusion>> steps;
};
BoundLadder bound_ladder(const TensorSystem& sys, int r_min, int r_max,
                         const CertifyOptions& opts = {});

std::string to_json(const Certificate& cert);
std::uint64_t certificate_hash(const Certificate& cert);

}  // namespace borank

#pragma once

#include <map>
#include <string>
#include <vector>

#include "borank/poly_matrix.hpp"

namespace borank {

/// One branch of the recursive rank-drop computation. The branch locus is
/// V(generators) minus the vanishing of the inverted polynomials; the
/// product of record ideals over all branches cuts out the full locus.
struct LocusRecord {
  std::vector<Poly> generators;     // monic, deduplicated, sorted
  std::vector<Poly> inverted;       // assumed nonzero on this branch
  std::vector<std::string> branch_trace;

  bool operator==(const LocusRecord& o) const {
    return generators == o.generators && inverted == o.inverted;
  }
};

/// Records whose ideals cut out { rank(M) < r_bound }. Deterministic:
/// constant row reduction first, then minors when small enough, otherwise
/// the quotient/localization split on the smallest-degree entry.
std::vector<LocusRecord> rank_locus(const PolyMatrix& m, int r_bound);

enum class LocusStatus { Empty, NonemptyWithWitness, Undecided };

struct LocusProbe {
  LocusStatus status = LocusStatus::Undecided;
  std::map<std::string, Rational> witness;
};

LocusProbe locus_status(const LocusRecord& rec);

/// Plaintext export: "inv:" header naming inverted polynomials, then one
/// generator per line in canonical order. Bit-stable.
std::string export_ideal(const LocusRecord& rec);
LocusRecord import_ideal(const RingPtr& ring, const std::string& text);

/// --- polynomial system utilities shared with the Borel enumeration ---

struct SystemState {
  bool inconsistent = false;
  /// applied in order; later substitutions may use vars fixed earlier
  std::vector<std::pair<int, Poly>> substitutions;
  std::vector<Poly> residual;
};

/// Repeatedly solves generators that are linear in a variable with constant
/// coefficient (or single-monomial) and substitutes, detecting unit ideals.
SystemState simplify_system(const RingPtr& ring, std::vector<Poly> eqs);

struct SolveResult {
  enum Kind {
    Empty,         // no solutions over C (unit ideal certified)
    Points,        // complete finite list of solutions, all rational
    FreeComponent, // solutions exist with at least one free parameter
    Stuck          // could not resolve
  } kind = Stuck;
  std::vector<std::map<std::string, Rational>> points;
};

/// Attempts to enumerate every common zero (over C) of eqs with the given
/// polynomials inverted. Only reports Points when the triangularization is
/// complete and all roots are rational.
SolveResult solve_system(const RingPtr& ring, const std::vector<Poly>& eqs,
                         const std::vector<Poly>& inverted,
                         const std::vector<std::string>& free_vars);

/// Canonicalizes a generator list: monic, nonzero, deduplicated, sorted.
std::vector<Poly> normalize_generators(std::vector<Poly> gens);

}  // namespace borank

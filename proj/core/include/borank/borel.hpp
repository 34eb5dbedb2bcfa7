#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "borank/poly_matrix.hpp"
#include "borank/rank_locus.hpp"
#include "borank/weight_module.hpp"

namespace borank {

/// One Schubert-style echelon cell of Borel-fixed d-dimensional subspaces of
/// a weighted module. Discrete cells are single subspaces; parametric cells
/// carry free echelon coordinates, possibly with residual closure equations.
/// Cells partition the set of all Borel-fixed d-planes.
struct BorelFixedFamily {
  std::shared_ptr<const WeightedModule> module;
  RingPtr ring;
  std::vector<std::string> params;       // free cell coordinates
  PolyMatrix rows;                       // d x module dim, echelon per weight
  std::map<Weight, int> weight_dims;
  std::vector<Poly> closure_eqs;         // residual, empty when solved

  int dim() const { return rows.nrows(); }
  bool discrete() const { return params.empty() && closure_eqs.empty(); }

  /// Basis in module coordinates (discrete cells only).
  Subspace as_subspace() const;
  Subspace specialize(const std::map<std::string, Rational>& assignment) const;
  /// Checks raising stability of a specialization exactly.
  bool is_raising_stable(const Subspace& s) const;

  std::string describe() const;
};

/// Complete list of Borel-fixed d-dimensional subspaces of the module,
/// cell by cell. Deterministic order.
std::vector<BorelFixedFamily> enumerate_borel_fixed(
    std::shared_ptr<const WeightedModule> module, int d);

}  // namespace borank

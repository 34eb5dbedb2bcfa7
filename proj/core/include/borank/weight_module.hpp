#pragma once

#include <string>
#include <vector>

#include "borank/subspace.hpp"
#include "borank/tensor_space.hpp"

namespace borank {

/// Expresses vectors in the span of a fixed basis, tracking coefficients.
class BasisSolver {
 public:
  BasisSolver(int ambient_dim, const std::vector<SparseRow>& basis);
  /// Coefficients of v in the basis; false if v is outside the span.
  bool solve(const SparseRow& v, SparseRow* coords) const;

 private:
  int ambient_dim_;
  RowEchelon ech_;
};

/// A raising-stable subspace of a tensor space, with its own weight basis
/// and the raising action expressed in module coordinates. Used both for
/// full spaces and for summands like U* x sl(V) x W.
struct WeightedModule {
  SpacePtr parent;
  std::vector<SparseRow> basis;   // in parent coordinates
  std::vector<Weight> weights;    // one per basis vector
  std::vector<std::string> labels;
  std::vector<RaisingOp> ops;
  std::vector<SparseMatrix> raising;   // module coords, aligned with ops
  std::vector<SparseMatrix> lowering;  // module coords, aligned with ops

  int dim() const { return static_cast<int>(basis.size()); }
  SparseRow embed(const SparseRow& module_coords) const;
  Subspace embed_subspace(const Subspace& s) const;

  /// Full space as a module.
  static WeightedModule whole_space(SpacePtr space, std::vector<RaisingOp> ops);
  /// Module spanned by explicit weight vectors; throws if the span is not
  /// raising-stable or a vector mixes weights.
  static WeightedModule from_basis(SpacePtr parent, std::vector<RaisingOp> ops,
                                   std::vector<SparseRow> basis,
                                   std::vector<std::string> labels = {});
};

}  // namespace borank

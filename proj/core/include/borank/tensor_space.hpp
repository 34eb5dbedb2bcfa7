#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "borank/sparse_matrix.hpp"

namespace borank {

/// Torus weight: for each group factor a gl-weight (one integer per basis
/// slot of that factor). Weights add over tensor factors and are invariant
/// under permutations of symmetric/exterior powers.
struct Weight {
  std::map<std::string, std::vector<int>> w;

  Weight& operator+=(const Weight& o);
  bool operator==(const Weight& o) const { return w == o.w; }
  bool operator<(const Weight& o) const { return w < o.w; }
  std::string to_string() const;
};

/// Elementary raising operator of one group factor: E_{k,k+1} for GL,
/// sending basis vector e_{k+1} to e_k (1-based k in [1, dim-1]).
struct RaisingOp {
  std::string group;
  int k = 1;
  std::string to_string() const { return group + std::to_string(k); }
};

/// A leaf factor: the standard representation of one group or its dual.
/// Primal factors have their first basis vector highest; duals act by
/// negative transpose so the last primal index is highest.
struct FactorSpace {
  std::string group;
  int dim = 0;
  bool dual = false;
  std::string symbol;  // label stem, e.g. "u" giving u_1 or u^1
};

class TensorSpace;
using SpacePtr = std::shared_ptr<const TensorSpace>;

/// Expression tree over factor spaces with tensor, symmetric-power and
/// exterior-power nodes, carrying an enumerated labeled monomial basis and
/// the derivation action of raising operators.
class TensorSpace : public std::enable_shared_from_this<TensorSpace> {
 public:
  enum class Kind { Leaf, Tensor, Sym, Ext };

  static SpacePtr leaf(FactorSpace f);
  static SpacePtr tensor(std::vector<SpacePtr> children);
  static SpacePtr sym(int power, SpacePtr child);
  static SpacePtr ext(int power, SpacePtr child);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  const FactorSpace& factor() const { return leaf_; }
  const std::vector<SpacePtr>& children() const { return children_; }

  const Weight& weight(int index) const { return weights_[index]; }
  const std::string& label(int index) const { return labels_[index]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Composite index <-> child index tuples. Sym tuples are non-decreasing,
  /// Ext tuples strictly increasing.
  const std::vector<int>& tuple(int index) const { return tuples_[index]; }
  int encode_tensor(const std::vector<int>& parts) const;
  int encode_sym(std::vector<int> parts) const;
  /// Returns (index, sign); sign 0 when a slot repeats.
  std::pair<int, int> encode_ext(std::vector<int> parts) const;

  /// Matrix of the derivation action (rows = target, cols = source).
  const SparseMatrix& raising_matrix(const RaisingOp& op) const;
  /// Column view: for each source index the list of (target, coeff).
  std::vector<SparseRow> raising_columns(const RaisingOp& op) const;
  /// The opposite-triangular action E_{k+1,k}: e_k -> e_{k+1} on primal
  /// leaves, negative transpose on duals.
  const SparseMatrix& lowering_matrix(const RaisingOp& op) const;
  std::vector<SparseRow> lowering_columns(const RaisingOp& op) const;

 private:
  TensorSpace() = default;
  void build();

  Kind kind_ = Kind::Leaf;
  FactorSpace leaf_;
  std::vector<SpacePtr> children_;
  int power_ = 0;
  int dim_ = 0;
  std::vector<std::vector<int>> tuples_;
  std::map<std::vector<int>, int> tuple_index_;
  std::vector<Weight> weights_;
  std::vector<std::string> labels_;

  std::vector<SparseRow> op_columns(const RaisingOp& op, bool lower) const;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<std::string, int>, SparseMatrix> raising_cache_;
  mutable std::map<std::pair<std::string, int>, SparseMatrix> lowering_cache_;
};

/// All simple raising operators of the named group factors.
std::vector<RaisingOp> raising_ops(const std::vector<std::pair<std::string, int>>& groups);

}  // namespace borank

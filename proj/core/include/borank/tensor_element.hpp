#pragma once

#include <map>
#include <string>
#include <vector>

#include "borank/subspace.hpp"
#include "borank/tensor_space.hpp"
#include "borank/weight_module.hpp"

namespace borank {

/// Sparse tensor with rational coefficients in an enumerated basis.
struct TensorElement {
  SpacePtr space;
  std::map<int, Rational> coeffs;

  SparseRow as_row() const {
    SparseRow r;
    for (const auto& [i, c] : coeffs) r.emplace_back(i, c);
    return r;
  }
  int nnz() const { return static_cast<int>(coeffs.size()); }
};

/// The three pairwise gradings of a triple tensor space.
enum class Grading { AB, AC, BC };

/// A concise-tensor workspace: groups, the factor spaces A, B, C (each a
/// tensor of two leaf factors), their pairwise products and the target
/// tensor. Matrix multiplication and det3 both fit this mold.
struct TensorSystem {
  std::string name;
  std::vector<std::pair<std::string, int>> groups;  // (group name, dim)
  SpacePtr A, B, C;
  SpacePtr AB, AC, BC;  // tensor(A,B) etc.
  SpacePtr ABC;
  TensorElement T;

  std::vector<RaisingOp> ops() const { return raising_ops(groups); }
  SpacePtr pair_space(Grading g) const {
    return g == Grading::AB ? AB : (g == Grading::AC ? AC : BC);
  }
};

/// M<l,m,n> in (U*xV) x (V*xW) x (W*xU); all coefficients 1.
TensorSystem mamu_system(int l, int m, int n);
/// det3 in (UxV)^3, coefficients sgn(sigma)sgn(tau) over S3 x S3.
TensorSystem det3_system();

TensorElement mamu_tensor(int l, int m, int n);
TensorElement det3_tensor();

/// Image T(C*) in A x B for grading AB (and permuted analogues): the span of
/// the contractions of T against the third factor's dual basis.
Subspace flattening(const TensorSystem& sys, Grading g);
/// Annihilator of span{T} in the dual of A x B x C (coordinates in the dual
/// monomial basis).
Subspace annihilator_of(const TensorElement& t);
/// True iff all three flattenings have full rank (dim of the missing factor).
bool is_concise(const TensorSystem& sys);

/// Dimensions of the span of T's single-factor contractions; conciseness
/// compares these against dim C, dim B, dim A.
int flattening_rank(const TensorSystem& sys, Grading g);

/// The adjoint representation sl_dim as a weighted module inside V x V*:
/// root vectors E_ij (i != j) and the Cartan h_i = E_ii - E_{i+1,i+1}.
WeightedModule sl_module(int dim, const std::string& group = "V",
                         const std::string& symbol = "v");

/// The G-complement of T's flattening image inside the grading's pair
/// space: U* x sl(V) x W and its cyclic rotations for matrix
/// multiplication, the three non-wedge summands for det3. Candidate
/// subspaces E' are enumerated inside this module.
WeightedModule complement_module(const TensorSystem& sys, Grading g);

}  // namespace borank

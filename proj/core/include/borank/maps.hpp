#pragma once

#include <optional>

#include "borank/borel.hpp"
#include "borank/tensor_element.hpp"
#include "borank/weight_module.hpp"

namespace borank {

/// Side of a pairwise multiplication test at grading (1,1,0): 210 maps
/// E x A into Λ²A x B, 120 maps E x B into A x Λ²B. The same builders are
/// reused for the other gradings by passing that grading's pair space.
enum class PairSide { S210, S120 };

/// Skew-symmetrization matrix for E spanned by `e_basis` inside the pair
/// space of grading g. Columns indexed by (basis row, factor index), rows by
/// the wedge target basis.
SparseMatrix skew_map_matrix(const TensorSystem& sys, Grading g,
                             const std::vector<SparseRow>& e_basis, PairSide side);
PolyMatrix skew_map_matrix(const TensorSystem& sys, Grading g, const PolyMatrix& e_rows,
                           PairSide side);

/// dim ker of the skew map on E x factor.
int skew_kernel_dim(const TensorSystem& sys, Grading g, const Subspace& e, PairSide side);
int skew_rank(const TensorSystem& sys, Grading g, const Subspace& e, PairSide side);

/// The two copies of V inside Λ²A x B killed by the isotypic projection of
/// the reduced (210) map (matrix multiplication only): S²U* x κ(V) x W and
/// Λ²U* x ι(V) x W, as columns in wedge-target coordinates.
SparseMatrix reduced_mod_block(const TensorSystem& sys, Grading g);

/// Kernel of the reduced map E' x A -> S²U* x V_{ω2+ω_{v-1}} x W (+)
/// Λ²U* x V_{2ω1+ω_{v-1}} x W, with E' in complement-module coordinates.
/// Equals the kernel of the full skew map on (T-flattening (+) E').
int reduced_210_kernel(const TensorSystem& sys, Grading g, const WeightedModule& comp,
                       const Subspace& eprime);
int reduced_210_rank(const TensorSystem& sys, Grading g, const WeightedModule& comp,
                     const Subspace& eprime);

/// Parametric version: the stacked matrix [skew(E' x A) | mod block]; the
/// reduced kernel is >= kappa iff rank of the stack <= cols(skew) - kappa +
/// rank(mod block).
PolyMatrix reduced_210_stacked(const TensorSystem& sys, Grading g, const WeightedModule& comp,
                               const PolyMatrix& eprime_rows);

/// Signed permutation implementing the U* <-> W transpose on the complement
/// module of grading AB: mirror of M<u,v,w> is M<w,v,u>. Row i of the result
/// is the image of basis vector i as a (index, sign) singleton.
std::vector<std::pair<int, Rational>> mirror_index_map(int u, int v, int w);

/// Intersection (E110 x C) ∩ (E101 x B) in z = (E110 row, C index)
/// coordinates: the kernel of the B-slice containment conditions.
Subspace pair_intersection(const TensorSystem& sys, const Subspace& e110, const Subspace& e101);
/// dim of the triple intersection, given the cached pair kernel.
int triple_finish(const TensorSystem& sys, const Subspace& e110, const Subspace& pair_kernel,
                  const Subspace& e011);
int triple_intersection_dim(const TensorSystem& sys, const Subspace& e110, const Subspace& e101,
                            const Subspace& e011);
/// True iff T itself lies in the triple intersection (step (iii) containment).
bool triple_contains_tensor(const TensorSystem& sys, const Subspace& e110,
                            const Subspace& e101, const Subspace& e011);

/// Generic multigraded test at (i,j,k), dual formulation: the dimension of
/// {X in S^iA x S^jB x S^kC : every polarization slice lies in the given
/// E piece}, which equals the codimension of the image of the primal
/// multiplication map. Directions without a predecessor piece are skipped.
int degree_test_dim(const TensorSystem& sys, int i, int j, int k,
                    const std::optional<Subspace>& pred_a,
                    const std::optional<Subspace>& pred_b,
                    const std::optional<Subspace>& pred_c);

/// The graded space S^iA x S^jB x S^kC (zero powers omitted).
SpacePtr graded_space(const TensorSystem& sys, int i, int j, int k);

/// Primal multiplication map F_{i-1,j,k} x A* (+) F_{i,j-1,k} x B* (+)
/// F_{i,j,k-1} x C* -> S^iA* x S^jB* x S^kC* in dual monomial coordinates;
/// pieces are given E-side and annihilated internally.
SparseMatrix multiplication_map(const TensorSystem& sys, int i, int j, int k,
                                const std::optional<Subspace>& e_pred_a,
                                const std::optional<Subspace>& e_pred_b,
                                const std::optional<Subspace>& e_pred_c);

}  // namespace borank

#pragma once

#include <array>
#include <memory>
#include <vector>

#include "borank/borel.hpp"
#include "borank/tensor_element.hpp"

namespace borank {

/// Affine function of the outer dimension n: slope*n + constant.
struct AffineInN {
  long slope = 0;
  long constant = 0;
  long at(long n) const { return slope * n + constant; }
  bool operator==(const AffineInN& o) const {
    return slope == o.slope && constant == o.constant;
  }
};

/// Per-site kernel contribution of an inner structure X at grid site (s,t):
/// a*s + b on the wedge-A side, a*t + b' on the wedge-B side, where b uses
/// dim U and b' uses dim W.
struct SiteForm {
  long a = 0;
  AffineInN b;  // evaluated at the dimension of the untouched outer factor
};

/// Catalog of B-fixed subspaces of sl(v): every cell, plus concrete sampled
/// subspaces per dimension (parametric cells sampled at several parameter
/// values including the degenerate charts).
struct InnerCatalog {
  int v = 0;
  std::shared_ptr<const WeightedModule> sl;
  std::vector<BorelFixedFamily> cells;
  std::vector<std::pair<int, Subspace>> samples;  // (dim, subspace in sl coords)
};
InnerCatalog inner_catalog(int v);

/// The contribution form fitted from exact kernel differences on rectangle
/// filtrations (the operational definition; affine in s with the b term
/// affine in n, validated at extra grid points).
SiteForm site_form(int v, const Subspace& x_in_sl);

/// Dimensions of the three isotypic components of V x sl(V): the highest
/// weights 2w1 + w_{v-1}, w2 + w_{v-1} (zero for v = 2) and w1.
std::array<int, 3> vsl_component_dims(int v);

/// Contribution value at a site. side 210 uses (s, u_dim), side 120 (t, w_dim).
long site_contribution(int v, const Subspace& x_in_sl, int s, int t, int u_dim, int w_dim,
                       bool side_210);

/// Exact kernel-difference computation on rectangle candidates inside
/// U* x sl(V) x W with dim U = dim W = n: the reduced-map kernel of the
/// full (s x t) rectangle of X minus the kernel with the (s,t) corner
/// removed. Oracle route for the closed form.
long site_contribution_kernel_difference(int v, const Subspace& x_in_sl, int s, int t, int n,
                                         bool side_210);

struct TableRow {
  int j = 0;
  long a = 0;
  AffineInN b;
  bool exact = true;
};
struct ContributionTable {
  int v = 0;
  std::vector<TableRow> rows;  // j = 1..k
  const TableRow& row(int j) const { return rows.at(j - 1); }
  int k() const { return static_cast<int>(rows.size()); }
};

enum class TableMode { Paper, Engine };

/// Paper mode returns the published tables (v=2 exact, v=3 upper bounds,
/// needed for sound refutations). Engine mode maximizes the closed form over
/// the catalog samples of each dimension.
ContributionTable contribution_table(int v, TableMode mode);

}  // namespace borank

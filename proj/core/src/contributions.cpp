#include "borank/contributions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "borank/maps.hpp"

namespace borank {

namespace {

std::vector<Rational> sample_values() {
  return {rat(0), rat(1), rat(-1), rat(2), rat(-2), rat(1, 2), rat(2, 1), rat(3), rat(-1, 2)};
}

}  // namespace

InnerCatalog inner_catalog(int v) {
  InnerCatalog cat;
  cat.v = v;
  cat.sl = std::make_shared<const WeightedModule>(sl_module(v));
  for (int d = 1; d <= cat.sl->dim(); ++d) {
    auto fams = enumerate_borel_fixed(cat.sl, d);
    for (auto& f : fams) {
      if (f.discrete()) {
        cat.samples.emplace_back(d, f.as_subspace());
      } else {
        for (const Rational& val : sample_values()) {
          std::map<std::string, Rational> pt;
          for (const auto& p : f.params) pt[p] = val;
          bool ok = true;
          for (const Poly& eq : f.closure_eqs)
            if (!is_zero(eq.evaluate(pt))) { ok = false; break; }
          if (!ok) continue;
          Subspace s = f.specialize(pt);
          if (f.is_raising_stable(s)) cat.samples.emplace_back(d, s);
        }
      }
      cat.cells.push_back(std::move(f));
    }
  }
  return cat;
}

namespace {

struct VslData {
  std::shared_ptr<const WeightedModule> module;  // V x sl(V)
  int sl_dim = 0;
  Subspace comp2;       // V_{2w1 + w_{v-1}} component
  Subspace comp_omega;  // V_{w2 + w_{v-1}} component (zero when v = 2)
  Subspace comp_v;      // the copy of V
  Subspace comp2_plus_v;
  Subspace comp_omega_plus_v;
};

Subspace isotypic_component(const WeightedModule& m, const Weight& hw) {
  // highest weight space: weight-mu vectors killed by every raising operator
  std::vector<int> members;
  for (int i = 0; i < m.dim(); ++i)
    if (m.weights[i] == hw) members.push_back(i);
  if (members.empty()) return Subspace::zero(m.dim());
  SparseMatrix cond(static_cast<int>(m.raising.size()) * m.dim(), static_cast<int>(members.size()));
  for (std::size_t oi = 0; oi < m.raising.size(); ++oi) {
    const SparseMatrix rt = m.raising[oi].transpose();
    for (std::size_t c = 0; c < members.size(); ++c)
      for (const auto& [tgt, val] : rt.row(members[c]))
        cond.add_to(static_cast<int>(oi) * m.dim() + tgt, static_cast<int>(c), val);
  }
  Subspace hw_coords = kernel_basis(cond);
  // closure under lowering operators
  RowEchelon ech(m.dim());
  std::vector<SparseRow> frontier;
  for (int i = 0; i < hw_coords.dim(); ++i) {
    SparseRow vec;
    for (const auto& [c, val] : hw_coords.basis_rows().row(i))
      vec = row_axpy(vec, val, SparseRow{{members[c], Rational(1)}});
    if (ech.add(vec)) frontier.push_back(vec);
  }
  std::vector<SparseMatrix> lowering_t;
  for (const auto& l : m.lowering) lowering_t.push_back(l.transpose());
  while (!frontier.empty()) {
    std::vector<SparseRow> next;
    for (const SparseRow& vec : frontier)
      for (const auto& lt : lowering_t) {
        SparseRow img;
        for (const auto& [c, val] : vec) img = row_axpy(img, val, lt.row(c));
        if (!img.empty() && ech.add(img)) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  return Subspace::span(ech.to_matrix());
}

const VslData& vsl_data(int v) {
  static std::mutex mu;
  static std::map<int, VslData> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(v);
  if (it != cache.end()) return it->second;
  VslData data;
  SpacePtr V = TensorSpace::leaf({"V", v, false, "v"});
  SpacePtr Vd = TensorSpace::leaf({"V", v, true, "v"});
  SpacePtr triple = TensorSpace::tensor({V, V, Vd});
  WeightedModule sl = sl_module(v);
  data.sl_dim = sl.dim();
  // basis v_i x sl_k, lifted into V x V x V*
  std::vector<SparseRow> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < v; ++i)
    for (int k = 0; k < sl.dim(); ++k) {
      SparseRow vec;
      for (const auto& [pc, c] : sl.basis[k]) {
        const auto& t = sl.parent->tuple(pc);  // (a, b) in V x V*
        vec.emplace_back(triple->encode_tensor({i, t[0], t[1]}), c);
      }
      std::sort(vec.begin(), vec.end(), [](auto& a, auto& b) { return a.first < b.first; });
      basis.push_back(std::move(vec));
      labels.push_back("v_" + std::to_string(i + 1) + "*" + sl.labels[k]);
    }
  data.module = std::make_shared<const WeightedModule>(WeightedModule::from_basis(
      triple, raising_ops({{"V", v}}), std::move(basis), std::move(labels)));
  auto weight_of = [&](std::vector<int> eps) {
    Weight w;
    w.w["V"] = std::move(eps);
    return w;
  };
  std::vector<int> w2(v, 0), womega(v, 0), wv(v, 0);
  w2[0] = 2;
  w2[v - 1] -= 1;
  wv[0] = 1;
  data.comp2 = isotypic_component(*data.module, weight_of(w2));
  if (v >= 3) {
    womega[0] = 1;
    womega[1] = 1;
    womega[v - 1] -= 1;
    data.comp_omega = isotypic_component(*data.module, weight_of(womega));
  } else {
    data.comp_omega = Subspace::zero(data.module->dim());
  }
  data.comp_v = isotypic_component(*data.module, weight_of(wv));
  data.comp2_plus_v = sum(data.comp2, data.comp_v);
  data.comp_omega_plus_v = sum(data.comp_omega, data.comp_v);
  return cache.emplace(v, std::move(data)).first->second;
}

Subspace v_tensor_x(const VslData& data, int v, const Subspace& x_in_sl) {
  std::vector<SparseRow> rows;
  for (int i = 0; i < v; ++i)
    for (int r = 0; r < x_in_sl.dim(); ++r) {
      SparseRow vec;
      for (const auto& [k, c] : x_in_sl.basis_rows().row(r))
        vec.emplace_back(i * data.sl_dim + k, c);
      rows.push_back(std::move(vec));
    }
  return Subspace::span(data.module->dim(), rows);
}

}  // namespace

std::array<int, 3> vsl_component_dims(int v) {
  const VslData& data = vsl_data(v);
  return {data.comp2.dim(), data.comp_omega.dim(), data.comp_v.dim()};
}

SiteForm site_form(int v, const Subspace& x_in_sl) {
  // kernel-difference fit: contribution(s, t) = a*s + slope*n + const on the
  // wedge-A side; two s-values fix a, two n-values fix the affine b
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, SiteForm> cache;
  std::string key;
  {
    std::ostringstream os;
    for (int i = 0; i < x_in_sl.dim(); ++i)
      for (const auto& [c, val] : x_in_sl.basis_rows().row(i)) os << c << ":" << val.get_str() << ";";
    key = os.str();
  }
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({v, key});
    if (it != cache.end()) return it->second;
  }
  const long c11_3 = site_contribution_kernel_difference(v, x_in_sl, 1, 1, 3, true);
  const long c21_3 = site_contribution_kernel_difference(v, x_in_sl, 2, 1, 3, true);
  const long c11_4 = site_contribution_kernel_difference(v, x_in_sl, 1, 1, 4, true);
  SiteForm f;
  f.a = c21_3 - c11_3;
  const long b3 = c11_3 - f.a;
  const long b4 = c11_4 - f.a;
  f.b.slope = b4 - b3;
  f.b.constant = b3 - 3 * f.b.slope;
  // validate affinity at independent grid points and on the mirrored side
  if (site_contribution_kernel_difference(v, x_in_sl, 3, 1, 3, true) != f.a * 3 + f.b.at(3) ||
      site_contribution_kernel_difference(v, x_in_sl, 1, 2, 3, false) != f.a * 2 + f.b.at(3) ||
      site_contribution_kernel_difference(v, x_in_sl, 2, 2, 4, true) != f.a * 2 + f.b.at(4))
    throw std::logic_error("site_form: contribution is not of the fitted affine shape");
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(v, key), f);
  return f;
}

long site_contribution(int v, const Subspace& x_in_sl, int s, int t, int u_dim, int w_dim,
                       bool side_210) {
  SiteForm f = site_form(v, x_in_sl);
  if (side_210) return f.a * s + f.b.at(u_dim);
  return f.a * t + f.b.at(w_dim);
}

long site_contribution_kernel_difference(int v, const Subspace& x_in_sl, int s, int t, int n,
                                         bool side_210) {
  if (s > n || t > n) throw std::invalid_argument("site outside the grid");
  TensorSystem sys = mamu_system(n, v, n);
  WeightedModule comp = complement_module(sys, Grading::AB);
  const int sl_dim = v * v - 1;
  auto rectangle = [&](bool with_corner) {
    // grid coordinate 1 sits at the highest weights: u^n (module index n-1)
    // and w_1 (module index 0)
    std::vector<SparseRow> rows;
    for (int gs = 1; gs <= s; ++gs)
      for (int gt = 1; gt <= t; ++gt) {
        if (!with_corner && gs == s && gt == t) continue;
        const int site = (n - gs) * n + (gt - 1);
        for (int r = 0; r < x_in_sl.dim(); ++r) {
          SparseRow vec;
          for (const auto& [k, c] : x_in_sl.basis_rows().row(r))
            vec.emplace_back(site * sl_dim + k, c);
          rows.push_back(std::move(vec));
        }
      }
    return Subspace::span(comp.dim(), rows);
  };
  Subspace full = rectangle(true), partial = rectangle(false);
  Subspace flat = flattening(sys, Grading::AB);
  auto kernel_of = [&](const Subspace& eprime) {
    SparseMatrix rows = flat.basis_rows();
    for (int i = 0; i < eprime.dim(); ++i) rows.add_row(comp.embed(eprime.basis_rows().row(i)));
    Subspace e110 = Subspace::span(rows);
    return skew_kernel_dim(sys, Grading::AB, e110,
                           side_210 ? PairSide::S210 : PairSide::S120);
  };
  return kernel_of(full) - kernel_of(partial);
}

ContributionTable contribution_table(int v, TableMode mode) {
  ContributionTable table;
  table.v = v;
  if (mode == TableMode::Paper) {
    if (v == 2) {
      table.rows = {{1, 2, {0, 0}, true}, {2, 3, {1, 0}, true}, {3, 4, {2, 0}, true}};
    } else if (v == 3) {
      table.rows = {{1, 1, {0, 0}, true},   {2, 4, {0, -1}, true},  {3, 10, {0, -4}, false},
                    {4, 11, {0, -4}, false}, {5, 15, {1, -4}, true}, {6, 20, {1, -6}, false},
                    {7, 21, {2, -6}, false}, {8, 21, {3, -6}, true}};
    } else {
      throw std::invalid_argument("paper tables exist for v in {2,3} only");
    }
    return table;
  }
  InnerCatalog cat = inner_catalog(v);
  table.rows.resize(v * v - 1);
  for (int j = 1; j <= v * v - 1; ++j) {
    table.rows[j - 1].j = j;
    table.rows[j - 1].exact = true;
  }
  std::vector<bool> seen(v * v, false);
  for (const auto& [d, x] : cat.samples) {
    SiteForm f = site_form(v, x);
    TableRow& row = table.rows[d - 1];
    auto better = [&](const SiteForm& g) {
      if (g.a != row.a) return g.a > row.a;
      if (g.b.slope != row.b.slope) return g.b.slope > row.b.slope;
      return g.b.constant > row.b.constant;
    };
    if (!seen[d] || better(f)) {
      row.a = f.a;
      row.b = f.b;
      seen[d] = true;
    }
  }
  for (auto& row : table.rows) row.j = (&row - table.rows.data()) + 1;
  return table;
}

}  // namespace borank

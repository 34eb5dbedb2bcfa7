#include "borank/borel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace borank {

namespace {

// Any linear functional strictly increased by raising gives a valid
// processing order (raising targets first).
long height_key(const Weight& w) {
  long phi = 0;
  for (const auto& [g, v] : w.w)
    for (std::size_t i = 0; i < v.size(); ++i)
      phi += static_cast<long>(v[i]) * static_cast<long>(1000 - static_cast<long>(i));
  return phi;
}

struct WeightClass {
  Weight weight;
  std::vector<int> members;  // module basis indices, ascending
};

struct DfsState {
  PolyMatrix rows;                    // d_so_far x module_dim
  std::vector<int> row_weight_class;  // class index per row
  std::vector<int> row_pivot_col;     // pivot module index per row
  std::vector<std::pair<int, Poly>> substitutions;
  std::vector<Poly> pending_eqs;      // residual non-linear equations
  int used = 0;
  int next_param = 0;
};

class Enumerator {
 public:
  Enumerator(std::shared_ptr<const WeightedModule> module, int d)
      : module_(std::move(module)), d_(d), ring_(std::make_shared<PolyRing>()) {
    // weight classes in processing order (raising targets first)
    std::map<Weight, std::vector<int>> by_weight;
    for (int i = 0; i < module_->dim(); ++i) by_weight[module_->weights[i]].push_back(i);
    for (auto& [w, members] : by_weight) classes_.push_back({w, members});
    std::stable_sort(classes_.begin(), classes_.end(), [](const WeightClass& a, const WeightClass& b) {
      const long ka = height_key(a.weight), kb = height_key(b.weight);
      if (ka != kb) return ka > kb;
      return a.weight < b.weight;
    });
    class_index_.clear();
    for (std::size_t i = 0; i < classes_.size(); ++i) class_index_[classes_[i].weight] = static_cast<int>(i);
    suffix_capacity_.assign(classes_.size() + 1, 0);
    for (int i = static_cast<int>(classes_.size()) - 1; i >= 0; --i)
      suffix_capacity_[i] = suffix_capacity_[i + 1] + static_cast<int>(classes_[i].members.size());
    // raising matrices transposed for row application
    for (const auto& r : module_->raising) raising_t_.push_back(r.transpose());
  }

  std::vector<BorelFixedFamily> run() {
    DfsState st;
    st.rows = PolyMatrix(0, module_->dim(), ring_);
    dfs(0, st);
    return std::move(out_);
  }

 private:
  // residual equations from requiring `img` to lie in the rows already
  // assigned to class `ci` (empty range allowed)
  void containment_eqs(const DfsState& st, const std::vector<std::pair<int, Poly>>& img, int ci,
                       std::vector<Poly>* eqs) const {
    // collect the class's assigned rows and their pivot columns
    std::vector<std::pair<int, int>> pivots;  // (pivot module index, row)
    for (int r = 0; r < st.rows.nrows(); ++r) {
      if (st.row_weight_class[r] != ci) continue;
      pivots.emplace_back(st.row_pivot_col[r], r);
    }
    std::map<int, Poly> residual;
    for (const auto& [c, p] : img) residual[c] = p;
    for (const auto& [pcol, r] : pivots) {
      auto it = residual.find(pcol);
      if (it == residual.end() || it->second.is_zero()) continue;
      Poly coeff = it->second;
      for (const auto& [c, p] : st.rows.row(r)) {
        auto& slot = residual[c];
        slot -= coeff * p;
      }
      residual[pcol] = Poly(ring_);
    }
    for (auto& [c, p] : residual)
      if (!p.is_zero()) eqs->push_back(p);
  }

  // apply a raising op (by index) to a poly row in module coordinates
  std::vector<std::pair<int, Poly>> raise_row(const std::vector<std::pair<int, Poly>>& row,
                                              int op_idx) const {
    std::map<int, Poly> acc;
    for (const auto& [c, p] : row)
      for (const auto& [tgt, coeff] : raising_t_[op_idx].row(c)) {
        auto& slot = acc[tgt];
        slot += p * coeff;
      }
    std::vector<std::pair<int, Poly>> out;
    for (auto& [c, p] : acc)
      if (!p.is_zero()) out.emplace_back(c, std::move(p));
    return out;
  }

  // simplify newly added equations into the state; false on contradiction
  bool absorb_equations(DfsState& st, std::vector<Poly> eqs) const {
    eqs.insert(eqs.end(), st.pending_eqs.begin(), st.pending_eqs.end());
    SystemState sys = simplify_system(ring_, std::move(eqs));
    if (sys.inconsistent) return false;
    if (!sys.substitutions.empty()) {
      for (const auto& [var, val] : sys.substitutions) {
        st.rows.substitute(var, val);
        st.substitutions.emplace_back(var, val);
      }
    }
    st.pending_eqs = std::move(sys.residual);
    return true;
  }

  void dfs(std::size_t ci, DfsState st) {
    if (st.used > d_) return;
    if (d_ - st.used > suffix_capacity_[ci]) return;
    if (ci == classes_.size()) {
      if (st.used == d_) emit(st);
      return;
    }
    const WeightClass& cls = classes_[ci];
    const int mult = static_cast<int>(cls.members.size());
    const int max_d = std::min(mult, d_ - st.used);
    for (int dmu = 0; dmu <= max_d; ++dmu) {
      if (dmu == 0) {
        dfs(ci + 1, st);
        continue;
      }
      // iterate pivot subsets of size dmu (positions within the class), lex
      std::vector<int> piv(dmu);
      std::iota(piv.begin(), piv.end(), 0);
      while (true) {
        try_cell(ci, piv, st);
        int i = dmu - 1;
        while (i >= 0 && piv[i] == mult - dmu + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < dmu; ++j) piv[j] = piv[j - 1] + 1;
      }
    }
  }

  void try_cell(std::size_t ci, const std::vector<int>& piv, DfsState st) {
    const WeightClass& cls = classes_[ci];
    const int mult = static_cast<int>(cls.members.size());
    const int first_row = st.rows.nrows();
    // build echelon rows: pivot 1, zeros at other pivots and before own pivot
    std::vector<bool> is_piv(mult, false);
    for (int p : piv) is_piv[p] = true;
    PolyMatrix grown(first_row + static_cast<int>(piv.size()), module_->dim(), ring_);
    for (int r = 0; r < first_row; ++r)
      for (const auto& [c, p] : st.rows.row(r)) grown.add_to(r, c, p);
    for (std::size_t k = 0; k < piv.size(); ++k) {
      const int r = first_row + static_cast<int>(k);
      grown.set(r, cls.members[piv[k]], Poly::constant(ring_, Rational(1)));
      for (int pos = piv[k] + 1; pos < mult; ++pos) {
        if (is_piv[pos]) continue;
        const int var = ring_->add_var("t" + std::to_string(st.next_param++));
        grown.set(r, cls.members[pos], Poly::variable(ring_, var));
      }
      st.row_pivot_col.push_back(cls.members[piv[k]]);
      st.row_weight_class.push_back(static_cast<int>(ci));
    }
    st.rows = std::move(grown);
    st.used += static_cast<int>(piv.size());
    // closure: raising images of the new rows must land in assigned rows
    std::vector<Poly> eqs;
    for (std::size_t oi = 0; oi < module_->ops.size(); ++oi) {
      // target weight class of this op from this weight
      const RaisingOp& op = module_->ops[oi];
      const int gdim = group_dim(op.group);
      if (gdim == 0) continue;  // group absent from the module: zero action
      Weight target = cls.weight;
      auto& tv = target.w[op.group];
      if (tv.empty()) tv.assign(gdim, 0);
      tv[op.k - 1] += 1;
      tv[op.k] -= 1;
      auto it = class_index_.find(target);
      const int target_ci = it == class_index_.end() ? -1 : it->second;
      if (target_ci >= 0 && static_cast<std::size_t>(target_ci) >= ci)
        throw std::logic_error("weight order violated");
      for (int r = first_row; r < st.rows.nrows(); ++r) {
        auto img = raise_row(st.rows.row(r), static_cast<int>(oi));
        if (img.empty()) continue;
        if (target_ci < 0) {
          for (auto& [c, p] : img) eqs.push_back(p);
        } else {
          containment_eqs(st, img, target_ci, &eqs);
        }
      }
    }
    if (!absorb_equations(st, std::move(eqs))) return;
    dfs(ci + 1, std::move(st));
  }

  int group_dim(const std::string& g) const {
    for (const auto& w : module_->weights)
      if (auto it = w.w.find(g); it != w.w.end()) return static_cast<int>(it->second.size());
    return 0;
  }

  void emit(const DfsState& st) {
    BorelFixedFamily fam;
    fam.module = module_;
    fam.ring = ring_;
    fam.rows = st.rows;
    fam.closure_eqs = normalize_generators(st.pending_eqs);
    for (int r = 0; r < st.rows.nrows(); ++r) {
      const int ci = st.row_weight_class[r];
      fam.weight_dims[classes_[ci].weight] += 1;
    }
    // free parameters actually occurring
    std::set<int> vars;
    for (int r = 0; r < st.rows.nrows(); ++r)
      for (const auto& [c, p] : st.rows.row(r))
        for (int v : p.support_vars()) vars.insert(v);
    for (const Poly& e : fam.closure_eqs)
      for (int v : e.support_vars()) vars.insert(v);
    for (int v : vars) fam.params.push_back(ring_->vars[v]);
    out_.push_back(std::move(fam));
  }

  std::shared_ptr<const WeightedModule> module_;
  int d_;
  RingPtr ring_;
  std::vector<WeightClass> classes_;
  std::map<Weight, int> class_index_;
  std::vector<int> suffix_capacity_;
  std::vector<SparseMatrix> raising_t_;
  std::vector<BorelFixedFamily> out_;
};

}  // namespace

Subspace BorelFixedFamily::as_subspace() const {
  if (!discrete()) throw std::logic_error("as_subspace: family has parameters");
  return specialize({});
}

Subspace BorelFixedFamily::specialize(const std::map<std::string, Rational>& assignment) const {
  SparseMatrix m = rows.specialize(assignment);
  Subspace s = Subspace::span(m);
  if (s.dim() != rows.nrows()) throw std::logic_error("specialize: rank drop in family rows");
  return s;
}

bool BorelFixedFamily::is_raising_stable(const Subspace& s) const {
  for (const auto& r : module->raising) {
    const SparseMatrix rt = r.transpose();
    for (int i = 0; i < s.dim(); ++i) {
      SparseRow img;
      for (const auto& [c, v] : s.basis_rows().row(i)) img = row_axpy(img, v, rt.row(c));
      if (!s.contains(img)) return false;
    }
  }
  return true;
}

std::string BorelFixedFamily::describe() const {
  std::ostringstream os;
  for (int r = 0; r < rows.nrows(); ++r) {
    if (r) os << "; ";
    bool first = true;
    for (const auto& [c, p] : rows.row(r)) {
      std::string coeff = p.to_string();
      if (!first) os << " + ";
      first = false;
      if (coeff == "1") os << module->labels[c];
      else if (coeff == "-1") os << "-" << module->labels[c];
      else if (p.is_constant() || p.terms().size() == 1) os << coeff << "*" << module->labels[c];
      else os << "(" << coeff << ")*" << module->labels[c];
    }
  }
  if (!closure_eqs.empty()) {
    os << " [eqs:";
    for (const Poly& e : closure_eqs) os << " " << e.to_string() << " = 0;";
    os << "]";
  }
  return os.str();
}

std::vector<BorelFixedFamily> enumerate_borel_fixed(
    std::shared_ptr<const WeightedModule> module, int d) {
  if (d < 0 || d > module->dim()) throw std::invalid_argument("enumerate_borel_fixed: bad dimension");
  Enumerator e(std::move(module), d);
  return e.run();
}

}  // namespace borank

#include "borank/weight_module.hpp"

#include <stdexcept>

namespace borank {

BasisSolver::BasisSolver(int ambient_dim, const std::vector<SparseRow>& basis)
    : ambient_dim_(ambient_dim), ech_(ambient_dim + static_cast<int>(basis.size())) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    SparseRow aug = basis[i];
    aug.emplace_back(ambient_dim_ + static_cast<int>(i), Rational(1));
    if (!ech_.add(std::move(aug)))
      throw std::invalid_argument("BasisSolver: dependent basis vectors");
  }
}

bool BasisSolver::solve(const SparseRow& v, SparseRow* coords) const {
  SparseRow red = ech_.reduce(v);
  // residual must live entirely in the bookkeeping block
  coords->clear();
  for (const auto& [c, x] : red) {
    if (c < ambient_dim_) return false;
    coords->emplace_back(c - ambient_dim_, -x);
  }
  return true;
}

SparseRow WeightedModule::embed(const SparseRow& module_coords) const {
  SparseRow out;
  for (const auto& [i, c] : module_coords) out = row_axpy(out, c, basis[i]);
  return out;
}

Subspace WeightedModule::embed_subspace(const Subspace& s) const {
  std::vector<SparseRow> vecs;
  vecs.reserve(s.dim());
  for (int i = 0; i < s.dim(); ++i) vecs.push_back(embed(s.basis_rows().row(i)));
  return Subspace::span(parent->dim(), vecs);
}

WeightedModule WeightedModule::whole_space(SpacePtr space, std::vector<RaisingOp> ops) {
  std::vector<SparseRow> basis(space->dim());
  std::vector<std::string> labels(space->dim());
  for (int i = 0; i < space->dim(); ++i) {
    basis[i] = {{i, Rational(1)}};
    labels[i] = space->label(i);
  }
  return from_basis(std::move(space), std::move(ops), std::move(basis), std::move(labels));
}

WeightedModule WeightedModule::from_basis(SpacePtr parent, std::vector<RaisingOp> ops,
                                          std::vector<SparseRow> basis,
                                          std::vector<std::string> labels) {
  WeightedModule m;
  m.parent = std::move(parent);
  m.ops = std::move(ops);
  m.basis = std::move(basis);
  if (labels.empty()) {
    labels.resize(m.basis.size());
    for (std::size_t i = 0; i < m.basis.size(); ++i) labels[i] = "m" + std::to_string(i);
  }
  m.labels = std::move(labels);
  // weights: every monomial of a basis vector must agree
  m.weights.reserve(m.basis.size());
  for (const auto& v : m.basis) {
    if (v.empty()) throw std::invalid_argument("module basis vector is zero");
    Weight w = m.parent->weight(v.front().first);
    for (const auto& [idx, c] : v)
      if (!(m.parent->weight(idx) == w))
        throw std::invalid_argument("module basis vector mixes weights");
    m.weights.push_back(std::move(w));
  }
  // raising matrices in module coordinates
  BasisSolver solver(m.parent->dim(), m.basis);
  for (const RaisingOp& op : m.ops) {
    for (bool lower : {false, true}) {
      const SparseMatrix parent_t =
          (lower ? m.parent->lowering_matrix(op) : m.parent->raising_matrix(op)).transpose();
      SparseMatrix r(m.dim(), m.dim());
      for (int j = 0; j < m.dim(); ++j) {
        SparseRow img;
        for (const auto& [idx, c] : m.basis[j]) img = row_axpy(img, c, parent_t.row(idx));
        SparseRow coords;
        if (!solver.solve(img, &coords))
          throw std::invalid_argument("module span is not b-stable (op " + op.to_string() + ")");
        for (const auto& [i, c] : coords) r.add_to(i, j, c);
      }
      (lower ? m.lowering : m.raising).push_back(std::move(r));
    }
  }
  return m;
}

}  // namespace borank

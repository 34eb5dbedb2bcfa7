#include "borank/tensor_space.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace borank {

Weight& Weight::operator+=(const Weight& o) {
  for (const auto& [g, v] : o.w) {
    auto& mine = w[g];
    if (mine.size() < v.size()) mine.resize(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) mine[i] += v[i];
  }
  return *this;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  bool outer = true;
  for (const auto& [g, v] : w) {
    if (!outer) os << "|";
    outer = false;
    os << g << ":";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  }
  return os.str();
}

std::vector<RaisingOp> raising_ops(const std::vector<std::pair<std::string, int>>& groups) {
  std::vector<RaisingOp> out;
  for (const auto& [name, dim] : groups)
    for (int k = 1; k < dim; ++k) out.push_back(RaisingOp{name, k});
  return out;
}

SpacePtr TensorSpace::leaf(FactorSpace f) {
  auto s = std::shared_ptr<TensorSpace>(new TensorSpace());
  s->kind_ = Kind::Leaf;
  s->leaf_ = std::move(f);
  s->build();
  return s;
}

SpacePtr TensorSpace::tensor(std::vector<SpacePtr> children) {
  if (children.size() == 1) return children[0];
  auto s = std::shared_ptr<TensorSpace>(new TensorSpace());
  s->kind_ = Kind::Tensor;
  s->children_ = std::move(children);
  s->build();
  return s;
}

SpacePtr TensorSpace::sym(int power, SpacePtr child) {
  auto s = std::shared_ptr<TensorSpace>(new TensorSpace());
  s->kind_ = Kind::Sym;
  s->children_ = {std::move(child)};
  s->power_ = power;
  s->build();
  return s;
}

SpacePtr TensorSpace::ext(int power, SpacePtr child) {
  auto s = std::shared_ptr<TensorSpace>(new TensorSpace());
  s->kind_ = Kind::Ext;
  s->children_ = {std::move(child)};
  s->power_ = power;
  s->build();
  return s;
}

void TensorSpace::build() {
  switch (kind_) {
    case Kind::Leaf: {
      dim_ = leaf_.dim;
      weights_.resize(dim_);
      labels_.resize(dim_);
      for (int i = 0; i < dim_; ++i) {
        std::vector<int> eps(leaf_.dim, 0);
        eps[i] = leaf_.dual ? -1 : 1;
        weights_[i].w[leaf_.group] = std::move(eps);
        labels_[i] = leaf_.symbol + (leaf_.dual ? "^" : "_") + std::to_string(i + 1);
      }
      return;
    }
    case Kind::Tensor: {
      std::vector<int> tuple(children_.size(), 0);
      bool empty = false;
      for (const auto& c : children_) empty |= c->dim() == 0;
      if (!empty) {
        while (true) {
          tuples_.push_back(tuple);
          int i = static_cast<int>(children_.size()) - 1;
          while (i >= 0 && ++tuple[i] == children_[i]->dim()) tuple[i--] = 0;
          if (i < 0) break;
        }
      }
      break;
    }
    case Kind::Sym:
    case Kind::Ext: {
      const int d = children_[0]->dim();
      const int k = power_;
      const int step = kind_ == Kind::Ext ? 1 : 0;
      if (kind_ == Kind::Ext && k > d) break;
      std::vector<int> tuple(k, 0);
      if (kind_ == Kind::Ext)
        for (int i = 0; i < k; ++i) tuple[i] = i;
      while (true) {
        tuples_.push_back(tuple);
        int i = k - 1;
        while (i >= 0) {
          const int cap = d - 1 - step * (k - 1 - i);
          if (tuple[i] < cap) break;
          --i;
        }
        if (i < 0) break;
        ++tuple[i];
        for (int j = i + 1; j < k; ++j) tuple[j] = kind_ == Kind::Ext ? tuple[j - 1] + 1 : tuple[i];
      }
      break;
    }
  }
  dim_ = static_cast<int>(tuples_.size());
  for (int i = 0; i < dim_; ++i) tuple_index_[tuples_[i]] = i;
  weights_.resize(dim_);
  labels_.resize(dim_);
  const char* sep =
      kind_ == Kind::Tensor ? "\xE2\x8A\x97" : (kind_ == Kind::Sym ? "\xC2\xB7" : "\xE2\x88\xA7");
  for (int i = 0; i < dim_; ++i) {
    Weight wt;
    std::ostringstream lbl;
    for (std::size_t j = 0; j < tuples_[i].size(); ++j) {
      const auto& child = kind_ == Kind::Tensor ? children_[j] : children_[0];
      wt += child->weight(tuples_[i][j]);
      if (j) lbl << sep;
      const bool paren = child->kind() != Kind::Leaf;
      lbl << (paren ? "(" : "") << child->label(tuples_[i][j]) << (paren ? ")" : "");
    }
    weights_[i] = std::move(wt);
    labels_[i] = lbl.str();
  }
}

int TensorSpace::encode_tensor(const std::vector<int>& parts) const {
  auto it = tuple_index_.find(parts);
  if (it == tuple_index_.end()) throw std::invalid_argument("encode_tensor: bad tuple");
  return it->second;
}

int TensorSpace::encode_sym(std::vector<int> parts) const {
  std::sort(parts.begin(), parts.end());
  auto it = tuple_index_.find(parts);
  if (it == tuple_index_.end()) throw std::invalid_argument("encode_sym: bad tuple");
  return it->second;
}

std::pair<int, int> TensorSpace::encode_ext(std::vector<int> parts) const {
  int sign = 1;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && parts[j - 1] > parts[j]) {
      std::swap(parts[j - 1], parts[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] == parts[i - 1]) return {0, 0};
  auto it = tuple_index_.find(parts);
  if (it == tuple_index_.end()) throw std::invalid_argument("encode_ext: bad tuple");
  return {it->second, sign};
}

std::vector<SparseRow> TensorSpace::raising_columns(const RaisingOp& op) const {
  return op_columns(op, false);
}

std::vector<SparseRow> TensorSpace::lowering_columns(const RaisingOp& op) const {
  return op_columns(op, true);
}

std::vector<SparseRow> TensorSpace::op_columns(const RaisingOp& op, bool lower) const {
  std::vector<SparseRow> cols(dim_);
  switch (kind_) {
    case Kind::Leaf: {
      if (leaf_.group != op.group || op.k < 1 || op.k >= leaf_.dim) return cols;
      if (!lower) {
        if (!leaf_.dual) {
          cols[op.k] = {{op.k - 1, Rational(1)}};  // e_{k+1} -> e_k
        } else {
          cols[op.k - 1] = {{op.k, Rational(-1)}};  // e^k -> -e^{k+1}
        }
      } else {
        if (!leaf_.dual) {
          cols[op.k - 1] = {{op.k, Rational(1)}};  // e_k -> e_{k+1}
        } else {
          cols[op.k] = {{op.k - 1, Rational(-1)}};  // e^{k+1} -> -e^k
        }
      }
      return cols;
    }
    case Kind::Tensor: {
      std::vector<std::vector<SparseRow>> child_cols;
      child_cols.reserve(children_.size());
      for (const auto& c : children_) child_cols.push_back(c->op_columns(op, lower));
      for (int src = 0; src < dim_; ++src) {
        std::map<int, Rational> acc;
        const auto& t = tuples_[src];
        for (std::size_t pos = 0; pos < t.size(); ++pos) {
          for (const auto& [tgt, coeff] : child_cols[pos][t[pos]]) {
            std::vector<int> t2 = t;
            t2[pos] = tgt;
            acc[encode_tensor(t2)] += coeff;
          }
        }
        for (auto& [i, c] : acc)
          if (!is_zero(c)) cols[src].emplace_back(i, c);
      }
      return cols;
    }
    case Kind::Sym:
    case Kind::Ext: {
      const auto child_cols = children_[0]->op_columns(op, lower);
      for (int src = 0; src < dim_; ++src) {
        std::map<int, Rational> acc;
        const auto& t = tuples_[src];
        for (std::size_t pos = 0; pos < t.size(); ++pos) {
          for (const auto& [tgt, coeff] : child_cols[t[pos]]) {
            std::vector<int> t2 = t;
            t2[pos] = tgt;
            if (kind_ == Kind::Sym) {
              acc[encode_sym(t2)] += coeff;
            } else {
              auto [idx, sign] = encode_ext(t2);
              if (sign != 0) acc[idx] += coeff * sign;
            }
          }
        }
        for (auto& [i, c] : acc)
          if (!is_zero(c)) cols[src].emplace_back(i, c);
      }
      return cols;
    }
  }
  return cols;
}

const SparseMatrix& TensorSpace::raising_matrix(const RaisingOp& op) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto key = std::make_pair(op.group, op.k);
  auto it = raising_cache_.find(key);
  if (it != raising_cache_.end()) return it->second;
  SparseMatrix m(dim_, dim_);
  auto cols = op_columns(op, false);
  for (int src = 0; src < dim_; ++src)
    for (const auto& [tgt, c] : cols[src]) m.add_to(tgt, src, c);
  return raising_cache_.emplace(key, std::move(m)).first->second;
}

const SparseMatrix& TensorSpace::lowering_matrix(const RaisingOp& op) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto key = std::make_pair(op.group, op.k);
  auto it = lowering_cache_.find(key);
  if (it != lowering_cache_.end()) return it->second;
  SparseMatrix m(dim_, dim_);
  auto cols = op_columns(op, true);
  for (int src = 0; src < dim_; ++src)
    for (const auto& [tgt, c] : cols[src]) m.add_to(tgt, src, c);
  return lowering_cache_.emplace(key, std::move(m)).first->second;
}

}  // namespace borank

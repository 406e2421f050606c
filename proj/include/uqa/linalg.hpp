#pragma once

// Exact linear algebra over Q(q): sparse vectors keyed by basis labels,
// canonical reduced echelon subspaces, and dense nullspaces.

#include <cstddef>
#include <map>
#include <vector>

#include "uqa/scalar.hpp"

namespace uqa {

template <class Key>
using SparseVec = std::map<Key, Scalar>;

/// y += a * x, dropping entries that cancel.
template <class Key>
void axpy(SparseVec<Key>& y, const Scalar& a, const SparseVec<Key>& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

template <class Key>
SparseVec<Key> scaled(SparseVec<Key> x, const Scalar& a) {
  if (a.is_zero()) return {};
  for (auto& [k, v] : x) v *= a;
  return x;
}

/// Subspace in reduced row echelon form. The pivot of each row is its largest
/// key and carries coefficient 1; no pivot key appears in any other row. For
/// a fixed key order this form is unique, so two Echelons span the same
/// subspace iff they compare equal.
template <class Key>
class Echelon {
 public:
  using Vec = SparseVec<Key>;

  std::size_t dim() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::map<Key, Vec>& rows() const { return rows_; }
  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }

  /// Canonical representative of v modulo the subspace.
  Vec reduce(Vec v) const {
    if (v.size() < rows_.size()) {
      // Walk v's keys from the top; subtracting a row only touches non-pivots.
      for (auto it = v.rbegin(); it != v.rend();) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
          ++it;
          continue;
        }
        const Key k = it->first;
        const Scalar c = it->second;
        axpy(v, -c, row->second);
        it = std::make_reverse_iterator(v.lower_bound(k));
      }
    } else {
      for (const auto& [pivot, row] : rows_) {
        auto it = v.find(pivot);
        if (it == v.end()) continue;
        const Scalar c = it->second;
        axpy(v, -c, row);
      }
    }
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Adds v to the span. Returns the nonzero residual that was inserted (before
  /// scaling), or an empty vector when v was already in the span.
  Vec insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.empty()) return r;
    Vec residual = r;
    const Key pivot = r.rbegin()->first;
    const Scalar inv = r.rbegin()->second.inverse();
    for (auto& [k, c] : r) c *= inv;
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      const Scalar c = it->second;
      axpy(row, -c, r);
    }
    rows_.emplace(pivot, std::move(r));
    return residual;
  }

  bool contains_space(const Echelon& other) const {
    for (const auto& [p, row] : other.rows_) {
      if (!contains(row)) return false;
    }
    return true;
  }

  bool operator==(const Echelon& o) const { return rows_ == o.rows_; }

 private:
  std::map<Key, Vec> rows_;
};

using DenseMatrix = std::vector<std::vector<Scalar>>;

/// Basis of {c : sum_k c_k column_k = 0} for a rows x cols matrix.
std::vector<std::vector<Scalar>> nullspace(DenseMatrix m, std::size_t cols);

/// Rank of a dense matrix.
std::size_t rank_of(DenseMatrix m, std::size_t cols);

/// Builds the dense matrix whose columns are the given sparse vectors.
template <class Key>
DenseMatrix columns_to_dense(const std::vector<SparseVec<Key>>& cols) {
  std::map<Key, std::size_t> index;
  for (const auto& c : cols) {
    for (const auto& [k, v] : c) index.try_emplace(k, 0);
  }
  std::size_t r = 0;
  for (auto& [k, i] : index) i = r++;
  DenseMatrix m(index.size(), std::vector<Scalar>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [k, v] : cols[j]) m[index[k]][j] = v;
  }
  return m;
}

}  // namespace uqa

#pragma once

// Exact sparse linear algebra over the rationals: vectors, column-stored
// matrices, and a fully reduced echelon basis that every cohomology
// computation in the library is built on.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "pathring/errors.hpp"
#include "pathring/rational.hpp"

namespace pathring {

/// Sparse vector: index -> nonzero coefficient. Zero entries are never stored.
using SparseVector = std::map<std::size_t, Rational>;

inline SparseVector unit_vector(std::size_t i) { return SparseVector{{i, Rational(1)}}; }

/// v += c * w
inline void axpy(SparseVector& v, const Rational& c, const SparseVector& w) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : w) {
    auto it = v.find(i);
    if (it == v.end()) {
      v.emplace(i, c * x);
    } else {
      it->second += c * x;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

inline void scale(SparseVector& v, const Rational& c) {
  if (c.is_zero()) {
    v.clear();
    return;
  }
  for (auto& [i, x] : v) x *= c;
}

inline Rational coefficient(const SparseVector& v, std::size_t i) {
  auto it = v.find(i);
  return it == v.end() ? Rational(0) : it->second;
}

/// Sparse matrix stored by columns; column j is the image of basis vector j.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    columns_.resize(cols);
  }

  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense) {
    std::size_t r = dense.size();
    std::size_t c = r == 0 ? 0 : dense.front().size();
    SparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, dense[i][j]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c, const Rational& v) {
    check(r, c);
    if (v.is_zero()) {
      columns_[c].erase(r);
    } else {
      columns_[c][r] = v;
    }
  }

  void add(std::size_t r, std::size_t c, const Rational& v) {
    check(r, c);
    axpy(columns_[c], Rational(1), SparseVector{{r, v}});
  }

  void set_column(std::size_t c, SparseVector col) {
    if (c >= cols_) throw std::out_of_range("sparse matrix column out of range");
    if (!col.empty() && col.rbegin()->first >= rows_)
      throw std::out_of_range("column entry outside matrix");
    std::erase_if(col, [](const auto& kv) { return kv.second.is_zero(); });
    columns_[c] = std::move(col);
  }

  Rational at(std::size_t r, std::size_t c) const {
    check(r, c);
    return coefficient(columns_[c], r);
  }

  const SparseVector& column(std::size_t c) const { return columns_.at(c); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : columns_) n += col.size();
    return n;
  }

  /// Row-major view, rows in increasing order.
  std::vector<SparseVector> row_vectors() const {
    std::vector<SparseVector> out(rows_);
    for (std::size_t c = 0; c < cols_; ++c)
      for (const auto& [r, v] : columns_[c]) out[r].emplace_hint(out[r].end(), c, v);
    return out;
  }

  /// All stored entries as (row, col, value), ordered by row then column.
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries() const {
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> out;
    auto rows = row_vectors();
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) out.emplace_back(r, c, v);
    return out;
  }

  SparseVector apply(const SparseVector& x) const {
    SparseVector y;
    for (const auto& [j, xj] : x) axpy(y, xj, column(j));
    return y;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j) out.columns_[j] = a.apply(b.columns_[j]);
    return out;
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
  }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse matrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> columns_;
};

/// A fully reduced row-echelon basis of a subspace of Q^n. Each stored row has
/// leading coefficient 1 and is zero in every other row's pivot column.
///
/// Rows carry a "tag" vector that records them as a combination of whatever
/// the caller attached to inserted vectors; reductions propagate tags so that
/// callers can recover coordinates (solve, quotient coordinates).
class Echelon {
 public:
  struct Reduction {
    SparseVector remainder;
    SparseVector tag;
  };

  /// Reduce v (with attached tag) against the basis.
  /// Invariant: v - remainder = sum c_r row_r, and tag - reduction.tag = sum c_r tag_r.
  Reduction reduce(SparseVector v, SparseVector tag = {}) const {
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [col, val] : v)
      if (pivots_.count(col)) hits.emplace_back(col, val);
    for (const auto& [col, val] : hits) {
      const auto& r = rows_[pivots_.at(col)];
      axpy(v, -val, r.vec);
      axpy(tag, -val, r.tag);
    }
    return {std::move(v), std::move(tag)};
  }

  bool contains(const SparseVector& v) const { return reduce(v).remainder.empty(); }

  /// Inserts v; returns the new pivot column, or nullopt if v was dependent.
  std::optional<std::size_t> insert(const SparseVector& v, SparseVector tag = {}) {
    auto red = reduce(v, std::move(tag));
    if (red.remainder.empty()) return std::nullopt;
    std::size_t pivot = red.remainder.begin()->first;
    Rational inv = Rational(1) / red.remainder.begin()->second;
    scale(red.remainder, inv);
    scale(red.tag, inv);
    for (auto& r : rows_) {
      auto it = r.vec.find(pivot);
      if (it == r.vec.end()) continue;
      Rational c = it->second;
      axpy(r.vec, -c, red.remainder);
      axpy(r.tag, -c, red.tag);
    }
    pivots_.emplace(pivot, rows_.size());
    rows_.push_back({std::move(red.remainder), std::move(red.tag)});
    return pivot;
  }

  std::size_t rank() const { return rows_.size(); }

  /// Pivot column -> row, in increasing pivot order.
  std::vector<std::pair<std::size_t, const SparseVector*>> pivot_rows() const {
    std::vector<std::pair<std::size_t, const SparseVector*>> out;
    for (const auto& [p, idx] : pivots_) out.emplace_back(p, &rows_[idx].vec);
    return out;
  }

  bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }

 private:
  struct Row {
    SparseVector vec;
    SparseVector tag;
  };
  std::vector<Row> rows_;
  std::map<std::size_t, std::size_t> pivots_;
};

/// Echelon basis of the row space, rows inserted in increasing row order
/// (pivot rule: smallest row, then smallest column).
inline Echelon row_echelon(const SparseMatrix& m) {
  Echelon e;
  for (const auto& row : m.row_vectors()) e.insert(row);
  return e;
}

inline std::size_t rank(const SparseMatrix& m) { return row_echelon(m).rank(); }

/// Basis of {v : M v = 0}, one vector per free column in increasing order;
/// the free coordinate is 1 and the other free coordinates are 0.
inline std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  Echelon e = row_echelon(m);
  auto pivots = e.pivot_rows();
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (e.is_pivot(f)) continue;
    SparseVector v{{f, Rational(1)}};
    for (const auto& [p, row] : pivots) {
      Rational x = coefficient(*row, f);
      if (!x.is_zero()) v.emplace(p, -x);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of the column space, choosing the lowest-index independent columns.
inline std::vector<SparseVector> image_basis(const SparseMatrix& m) {
  Echelon e;
  std::vector<SparseVector> out;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (e.insert(m.column(j))) out.push_back(m.column(j));
  return out;
}

/// Some x with M x = b, preferring low-index columns and setting the rest to
/// zero; nullopt when b is outside the column space.
inline std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b) {
  Echelon e;
  for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j), unit_vector(j));
  auto red = e.reduce(b);
  if (!red.remainder.empty()) return std::nullopt;
  SparseVector x;
  axpy(x, Rational(-1), red.tag);
  return x;
}

/// Basis of span(cocycles) / span(subspace) by representatives drawn from
/// `cocycles` in order (the first cocycles independent modulo the subspace
/// and the earlier picks), together with coordinates modulo the subspace.
class QuotientBasis {
 public:
  QuotientBasis(std::size_t ambient_dim, const std::vector<SparseVector>& subspace,
                const std::vector<SparseVector>& cocycles)
      : ambient_(ambient_dim) {
    auto check_bounds = [&](const SparseVector& v) {
      if (!v.empty() && v.rbegin()->first >= ambient_dim)
        throw std::out_of_range("vector index exceeds ambient dimension");
    };
    Echelon cocycle_span;
    for (const auto& c : cocycles) {
      check_bounds(c);
      cocycle_span.insert(c);
    }
    for (std::size_t i = 0; i < subspace.size(); ++i) {
      check_bounds(subspace[i]);
      if (!cocycle_span.contains(subspace[i]))
        throw SubspaceNotContained("subspace vector " + std::to_string(i) +
                                   " is not in the span of the cocycles");
      echelon_.insert(subspace[i]);
    }
    for (std::size_t k = 0; k < cocycles.size(); ++k) {
      if (echelon_.contains(cocycles[k])) continue;
      echelon_.insert(cocycles[k], unit_vector(reps_.size()));
      reps_.push_back(cocycles[k]);
      source_.push_back(k);
    }
  }

  std::size_t dimension() const { return reps_.size(); }
  std::size_t ambient_dimension() const { return ambient_; }
  const std::vector<SparseVector>& representatives() const { return reps_; }
  /// Index into the `cocycles` argument of each representative.
  const std::vector<std::size_t>& source_indices() const { return source_; }

  /// Coordinates of v in the representative basis modulo the subspace.
  SparseVector coordinates(const SparseVector& v) const {
    auto red = echelon_.reduce(v);
    if (!red.remainder.empty())
      throw SubspaceNotContained("vector is not in span of cocycles + subspace");
    SparseVector x;
    axpy(x, Rational(-1), red.tag);
    return x;
  }

  bool is_trivial(const SparseVector& v) const { return coordinates(v).empty(); }

 private:
  std::size_t ambient_;
  Echelon echelon_;
  std::vector<SparseVector> reps_;
  std::vector<std::size_t> source_;
};

inline QuotientBasis quotient_basis(std::size_t ambient_dim, const std::vector<SparseVector>& subspace,
                                    const std::vector<SparseVector>& cocycles) {
  return QuotientBasis(ambient_dim, subspace, cocycles);
}

}  // namespace pathring

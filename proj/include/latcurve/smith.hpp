#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "checked.hpp"

namespace latcurve {

/// Column-sparse integer matrix; each column holds (row, value) sorted by row
/// with no zero values.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, std::int64_t>;
  using Column = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const Column& column(std::size_t j) const { return cols_[j]; }

  /// Adds v at (i, j); entries for one column may arrive in any order.
  void add(std::size_t i, std::size_t j, std::int64_t v) {
    if (v == 0) return;
    Column& col = cols_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, std::size_t r) { return e.first < r; });
    if (it != col.end() && it->first == i) {
      it->second = checked::add(it->second, v);
      if (it->second == 0) col.erase(it);
    } else {
      col.insert(it, {i, v});
    }
  }

  std::vector<std::vector<std::int64_t>> dense() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_.size(), 0));
    for (std::size_t j = 0; j < cols_.size(); ++j)
      for (const auto& [i, v] : cols_[j]) out[i][j] = v;
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<Column> cols_;
};

/// Rank and the invariant factors greater than one.
struct SmithResult {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;
};

namespace detail {

// col -= a * piv, both sorted sparse columns.
inline SparseMatrix::Column axpy(const SparseMatrix::Column& col, std::int64_t a, const SparseMatrix::Column& piv) {
  SparseMatrix::Column out;
  out.reserve(col.size() + piv.size());
  std::size_t x = 0, y = 0;
  while (x < col.size() || y < piv.size()) {
    if (y == piv.size() || (x < col.size() && col[x].first < piv[y].first)) {
      out.push_back(col[x++]);
    } else if (x == col.size() || piv[y].first < col[x].first) {
      out.push_back({piv[y].first, checked::mul(-a, piv[y].second)});
      ++y;
    } else {
      std::int64_t v = checked::sub_mul(col[x].second, a, piv[y].second);
      if (v != 0) out.push_back({col[x].first, v});
      ++x;
      ++y;
    }
  }
  return out;
}

inline std::int64_t coefficient(const SparseMatrix::Column& col, std::size_t row) {
  auto it = std::lower_bound(col.begin(), col.end(), row,
                             [](const SparseMatrix::Entry& e, std::size_t r) { return e.first < r; });
  return (it != col.end() && it->first == row) ? it->second : 0;
}

// Diagonalizes a dense matrix; returns the nonzero diagonal magnitudes.
inline std::vector<std::int64_t> dense_diagonal(std::vector<std::vector<std::int64_t>> a) {
  std::vector<std::int64_t> diag;
  const std::size_t R = a.size();
  const std::size_t C = R ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < R && t < C) {
    std::size_t pi = R, pj = C;
    std::int64_t best = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
          best = std::llabs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a[i][t] == 0) continue;
        std::int64_t q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < C; ++j) a[i][j] = checked::sub_mul(a[i][j], q, a[t][j]);
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a[t][j] == 0) continue;
        std::int64_t q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < R; ++i) a[i][j] = checked::sub_mul(a[i][j], q, a[i][t]);
        if (a[t][j] != 0) dirty = true;
      }
      if (!dirty) break;
      // Move the smallest remainder in row/column t onto the pivot.
      std::size_t bi = t, bj = t;
      std::int64_t bv = std::llabs(a[t][t]);
      for (std::size_t i = t + 1; i < R; ++i)
        if (a[i][t] != 0 && std::llabs(a[i][t]) < bv) bv = std::llabs(a[i][t]), bi = i, bj = t;
      for (std::size_t j = t + 1; j < C; ++j)
        if (a[t][j] != 0 && std::llabs(a[t][j]) < bv) bv = std::llabs(a[t][j]), bi = t, bj = j;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
    }
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace detail

/// Smith normal form data of an integer matrix: unit pivots are eliminated
/// sparsely, the remainder is reduced densely with smallest-magnitude
/// pivoting.  All arithmetic is overflow-checked.
inline SmithResult smith(const SparseMatrix& m) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  std::vector<SparseMatrix::Column> cols(C);
  std::vector<std::vector<std::size_t>> by_row(R);
  for (std::size_t j = 0; j < C; ++j) {
    cols[j] = m.column(j);
    for (const auto& e : cols[j]) by_row[e.first].push_back(j);
  }
  std::vector<char> col_alive(C, 1), row_alive(R, 1);
  SmithResult out;

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j = 0; j < C; ++j) {
      if (!col_alive[j]) continue;
      std::size_t prow = R;
      std::int64_t pval = 0;
      for (const auto& [i, v] : cols[j])
        if (row_alive[i] && (v == 1 || v == -1)) {
          prow = i;
          pval = v;
          break;
        }
      if (prow == R) continue;
      std::vector<std::size_t> touched = std::move(by_row[prow]);
      by_row[prow].clear();
      for (std::size_t j2 : touched) {
        if (j2 == j || !col_alive[j2]) continue;
        std::int64_t a = detail::coefficient(cols[j2], prow);
        if (a == 0) continue;
        cols[j2] = detail::axpy(cols[j2], checked::mul(a, pval), cols[j]);
        for (const auto& e : cols[j])
          if (e.first != prow && row_alive[e.first]) by_row[e.first].push_back(j2);
      }
      col_alive[j] = 0;
      row_alive[prow] = 0;
      ++out.rank;
      progress = true;
    }
  }

  std::vector<std::size_t> rows_left, cols_left;
  for (std::size_t i = 0; i < R; ++i)
    if (row_alive[i]) rows_left.push_back(i);
  for (std::size_t j = 0; j < C; ++j) {
    if (!col_alive[j]) continue;
    bool any = false;
    for (const auto& e : cols[j])
      if (row_alive[e.first]) any = true;
    if (any) cols_left.push_back(j);
  }
  if (cols_left.empty()) return out;
  std::vector<std::size_t> row_pos(R, R);
  for (std::size_t k = 0; k < rows_left.size(); ++k) row_pos[rows_left[k]] = k;
  std::vector<std::vector<std::int64_t>> dense(rows_left.size(), std::vector<std::int64_t>(cols_left.size(), 0));
  for (std::size_t k = 0; k < cols_left.size(); ++k)
    for (const auto& [i, v] : cols[cols_left[k]])
      if (row_alive[i]) dense[row_pos[i]][k] = v;

  std::vector<std::int64_t> diag = detail::dense_diagonal(std::move(dense));
  for (std::size_t x = 0; x < diag.size(); ++x)
    for (std::size_t y = x + 1; y < diag.size(); ++y) {
      std::int64_t g = std::gcd(diag[x], diag[y]);
      std::int64_t l = checked::mul(diag[x] / g, diag[y]);
      diag[x] = g;
      diag[y] = l;
    }
  out.rank += diag.size();
  for (std::int64_t d : diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

}  // namespace latcurve

#pragma once

// Hand-tabulated weight values on R(0,c), transcribed cell by cell, plus the
// closed patterns that describe the infinite families.  Rows of a block run
// from the largest l2 down to l2 = 0.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "latcurve/lattice.hpp"

namespace reference {

using latcurve::LatticePoint;

struct Block {
  LatticePoint outer;  // coordinates 3..r
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> bold;
};

struct Table {
  std::map<LatticePoint, std::int64_t> w;
  std::set<LatticePoint> marked;  // semigroup elements where the table marks them
};

inline Table from_blocks(const std::vector<Block>& blocks) {
  Table t;
  for (const auto& b : blocks) {
    const int top = static_cast<int>(b.rows.size()) - 1;
    for (int i = 0; i <= top; ++i)
      for (int j = 0; j < static_cast<int>(b.rows[static_cast<std::size_t>(i)].size()); ++j) {
        LatticePoint l{j, top - i};
        l.insert(l.end(), b.outer.begin(), b.outer.end());
        t.w[l] = b.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (b.bold[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) t.marked.insert(l);
      }
  }
  return t;
}

inline Table from_row(const std::vector<int>& row, const std::set<int>& marked) {
  Table t;
  for (int j = 0; j < static_cast<int>(row.size()); ++j) t.w[{j}] = row[static_cast<std::size_t>(j)];
  for (int j : marked) t.marked.insert({j});
  return t;
}

namespace data {
inline const std::vector<Block> kD4 = {
    {{0}, {{2, 1, 2}, {1, 0, 1}, {0, 1, 2}}, {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}},
    {{1}, {{1, 0, 1}, {0, -1, 0}, {1, 0, 1}}, {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}},
    {{2}, {{2, 1, 0}, {1, 0, 1}, {2, 1, 2}}, {{0, 0, 1}, {0, 1, 0}, {0, 0, 0}}},
};

inline const std::vector<Block> kD6 = {
    {{0}, {{2, 1, 0}, {1, 0, 1}, {0, 1, 2}}, {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}},
    {{1}, {{1, 0, -1}, {0, -1, 0}, {1, 0, 1}}, {{0, 0, 1}, {0, 1, 0}, {0, 0, 0}}},
    {{2}, {{2, 1, 0}, {1, 0, 1}, {2, 1, 2}}, {{0, 0, 1}, {0, 1, 0}, {0, 0, 0}}},
};

inline const std::vector<Block> kE7 = {
    {{}, {{3, 2, 1, 0, 1, 0}, {2, 1, 0, -1, 0, 1}, {1, 0, -1, 0, 1, 2}, {0, 1, 0, 1, 2, 3}}, {{0, 0, 0, 1, 0, 1}, {0, 0, 0, 1, 1, 0}, {0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0}}},
};

inline const std::vector<Block> kT44 = {
    {{0,3}, {{4, 3, 2, 3}, {3, 2, 1, 2}, {2, 1, 2, 3}, {3, 2, 3, 4}}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
    {{1,3}, {{3, 2, 1, 2}, {2, 1, 0, 1}, {1, 0, 1, 2}, {2, 1, 2, 3}}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}},
    {{2,3}, {{2, 1, 0, 1}, {1, 0, -1, 0}, {2, 1, 0, 1}, {3, 2, 1, 2}}, {{0, 0, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
    {{3,3}, {{3, 2, 1, 0}, {2, 1, 0, 1}, {3, 2, 1, 2}, {4, 3, 2, 3}}, {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
    {{0,2}, {{3, 2, 1, 2}, {2, 1, 0, 1}, {1, 0, 1, 2}, {2, 1, 2, 3}}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
    {{1,2}, {{2, 1, 0, 1}, {1, 0, -1, 0}, {0, -1, 0, 1}, {1, 0, 1, 2}}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}},
    {{2,2}, {{1, 0, -1, 0}, {0, -1, -2, -1}, {1, 0, -1, 0}, {2, 1, 0, 1}}, {{0, 0, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
    {{3,2}, {{2, 1, 0, 1}, {1, 0, -1, 0}, {2, 1, 0, 1}, {3, 2, 1, 2}}, {{0, 0, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
    {{0,1}, {{2, 1, 2, 3}, {1, 0, 1, 2}, {0, -1, 0, 1}, {1, 0, 1, 2}}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
    {{1,1}, {{1, 0, 1, 2}, {0, -1, 0, 1}, {-1, -2, -1, 0}, {0, -1, 0, 1}}, {{0, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 1}, {0, 0, 0, 0}}},
    {{2,1}, {{2, 1, 0, 1}, {1, 0, -1, 0}, {0, -1, 0, 1}, {1, 0, 1, 2}}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}},
    {{3,1}, {{3, 2, 1, 2}, {2, 1, 0, 1}, {1, 0, 1, 2}, {2, 1, 2, 3}}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}},
    {{0,0}, {{3, 2, 3, 4}, {2, 1, 2, 3}, {1, 0, 1, 2}, {0, 1, 2, 3}}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}}},
    {{1,0}, {{2, 1, 2, 3}, {1, 0, 1, 2}, {0, -1, 0, 1}, {1, 0, 1, 2}}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
    {{2,0}, {{3, 2, 1, 2}, {2, 1, 0, 1}, {1, 0, 1, 2}, {2, 1, 2, 3}}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
    {{3,0}, {{4, 3, 2, 3}, {3, 2, 1, 2}, {2, 1, 2, 3}, {3, 2, 3, 4}}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
};

inline const std::vector<Block> kT36 = {
    {{0}, {{4, 3, 2, 3, 4}, {3, 2, 1, 2, 3}, {2, 1, 0, 1, 2}, {1, 0, 1, 2, 3}, {0, 1, 2, 3, 4}}, {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}}},
    {{1}, {{3, 2, 1, 2, 3}, {2, 1, 0, 1, 2}, {1, 0, -1, 0, 1}, {0, -1, 0, 1, 2}, {1, 0, 1, 2, 3}}, {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 0}}},
    {{2}, {{2, 1, 0, 1, 2}, {1, 0, -1, 0, 1}, {0, -1, -2, -1, 0}, {1, 0, -1, 0, 1}, {2, 1, 0, 1, 2}}, {{0, 0, 1, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 1, 1, 1}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}},
    {{3}, {{3, 2, 1, 0, 1}, {2, 1, 0, -1, 0}, {1, 0, -1, 0, 1}, {2, 1, 0, 1, 2}, {3, 2, 1, 2, 3}}, {{0, 0, 0, 1, 0}, {0, 0, 0, 1, 1}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}},
    {{4}, {{4, 3, 2, 1, 0}, {3, 2, 1, 0, 1}, {2, 1, 0, 1, 2}, {3, 2, 1, 2, 3}, {4, 3, 2, 3, 4}}, {{0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}},
};

inline const std::vector<Block> kA1A3 = {
    {{}, {{3, 2, 3, 4}, {2, 1, 2, 3}, {1, 0, 1, 2}, {0, 1, 2, 3}}, {{0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}, {1, 0, 0, 0}}},
    {{}, {{3, 2, 1, 2}, {2, 1, 0, 1}, {1, 0, 1, 2}, {0, 1, 2, 3}}, {{0, 0, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 0}, {1, 0, 0, 0}}},
};

}  // namespace data

/// Weights only: the marked cells are not the full semigroup.
inline Table d4() { return from_blocks(data::kD4); }
/// D_{2k}, k >= 3, restricted to R(0,(2,2,2)).
inline Table d_even_corner() { return from_blocks(data::kD6); }
inline Table e7() { return from_blocks(data::kE7); }
/// Weights only; the marks in these two tables are not semigroup elements.
inline Table t44() { return from_blocks(data::kT44); }
inline Table t36() { return from_blocks(data::kT36); }
/// A_1 and A_3 on R(0,(3,3)).
inline Table a1_window() { return from_blocks({data::kA1A3[0]}); }
inline Table a3_window() { return from_blocks({data::kA1A3[1]}); }

inline Table e6() { return from_row({0, 1, 0, -1, 0, 1, 0}, {0, 3, 4, 6}); }
inline Table e8() { return from_row({0, 1, 0, -1, 0, -1, 0, 1, 0}, {0, 3, 5, 6, 8}); }

/// A_n, n even: 0,1,0,1,... up to the conductor n, semigroup <2, n+1>.
inline Table a_even(int n) {
  Table t;
  for (int j = 0; j <= n; ++j) {
    t.w[{j}] = j % 2;
    if (j % 2 == 0) t.marked.insert({j});
  }
  return t;
}

/// A_{2k-1}: |l1 - l2| on R(0,(k,k)).
inline Table a_odd(int k) {
  Table t;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) t.w[{i, j}] = i > j ? i - j : j - i;
  return t;
}

/// D_n, n odd, on R(0,(n-1,2)).
inline Table d_odd(int n) {
  Table t;
  for (int j = 0; j <= n - 1; ++j) {
    const bool even = j % 2 == 0;
    t.w[{j, 0}] = j == n - 1 ? 2 : j % 2;
    t.w[{j, 1}] = j == 0 ? 1 : j == n - 1 ? 1 : (even ? -1 : 0);
    t.w[{j, 2}] = j == 0 ? 2 : j == 1 ? 1 : j == n - 1 ? 0 : (even ? 0 : 1);
    if (j == 0) t.marked.insert({0, 0});
    if (j >= 2 && even) t.marked.insert({j, 2});
    if ((j >= 2 && even && j < n - 1) || j == n - 2) t.marked.insert({j, 1});
  }
  return t;
}

/// D_{2k}, k >= 3, on R(0,(k,k,2)).
inline Table d_even(int k) {
  Table t;
  auto base = [&](int a, int b) -> std::int64_t {
    if (a == k && b == k) return 2;
    return a > b ? a - b : b - a;
  };
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b) {
      t.w[{a, b, 0}] = base(a, b);
      t.w[{a, b, 1}] = base(a, b) + ((a == 0 && b == 0) ? 1 : -1);
      t.w[{a, b, 2}] = base(k - a, k - b);
    }
  return t;
}

/// T_{3,2b+3}, b >= 2, on R(0,(2b+4,4)).
inline Table t3_odd(int b) {
  Table t;
  const int top = 2 * b + 4;
  for (int j = 0; j <= top; ++j) {
    const bool even = j % 2 == 0;
    t.w[{j, 4}] = j <= 3 ? 4 - j : (even ? 0 : 1);
    t.w[{j, 3}] = j <= 3 ? 3 - j : j <= 2 * b + 2 ? (even ? -1 : 0) : j == 2 * b + 3 ? 0 : 1;
    t.w[{j, 2}] = j <= 3 ? 2 - j : j <= 2 * b ? (even ? -2 : -1) : j - 2 * b - 2;
    t.w[{j, 1}] = j == 0 ? 1 : j <= 2 * b ? (even ? -1 : 0) : j - 2 * b - 1;
    t.w[{j, 0}] = j <= 2 * b ? j % 2 : j - 2 * b;
    if (j >= 4 && even) t.marked.insert({j, 4});
    if ((j >= 4 && even && j <= 2 * b + 2) || j == 2 * b + 3) t.marked.insert({j, 3});
    if ((j >= 4 && even && j <= 2 * b) || j == 2 * b + 1) t.marked.insert({j, 2});
  }
  t.marked.insert({2, 1});
  t.marked.insert({0, 0});
  return t;
}

/// T_{2a+3,2b+3}: the corner l <= (2a+1, 2b+1).
inline Table t_odd_corner(int a, int b) {
  Table t;
  for (int i = 0; i <= 2 * a + 1; ++i)
    for (int j = 0; j <= 2 * b + 1; ++j) t.w[{i, j}] = i % 2 + j % 2 - ((i >= 1 && j >= 1) ? 2 : 0);
  return t;
}

}  // namespace reference

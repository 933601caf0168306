#pragma once

// Brute-force reference computations used only by the tests.  Each one takes
// a different road from the library code it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "latcurve/latcurve.hpp"

namespace oracle {

using latcurve::operator+;

using latcurve::LatticePoint;
using latcurve::Subset;

inline constexpr std::int64_t kPrime = 2147483647;

inline std::int64_t mod(std::int64_t a) {
  a %= kPrime;
  return a < 0 ? a + kPrime : a;
}

inline std::int64_t pow_mod(std::int64_t a, std::int64_t e) {
  std::int64_t out = 1;
  a = mod(a);
  while (e > 0) {
    if (e & 1) out = static_cast<std::int64_t>((__int128)out * a % kPrime);
    a = static_cast<std::int64_t>((__int128)a * a % kPrime);
    e >>= 1;
  }
  return out;
}

/// Rank over F_p by Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
    std::size_t piv = rk;
    while (piv < a.size() && mod(a[piv][c]) == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rk]);
    const std::int64_t inv = pow_mod(a[rk][c], kPrime - 2);
    for (auto& v : a[rk]) v = static_cast<std::int64_t>((__int128)mod(v) * inv % kPrime);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rk) continue;
      const std::int64_t f = mod(a[i][c]);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - static_cast<std::int64_t>((__int128)f * a[rk][j] % kPrime));
    }
    ++rk;
  }
  return rk;
}

// ------------------------------------------------------------ valuations

/// A branch t -> (x(t), y(t)) given by coefficient lists (index = power of t).
struct Branch {
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> y;
};

inline std::vector<std::int64_t> mul_trunc(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, std::size_t n) {
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
      out[i + j] = mod(out[i + j] + static_cast<std::int64_t>((__int128)mod(a[i]) * mod(b[j]) % kPrime));
  }
  return out;
}

/// h(l) = dim of the image of C[x,y] in prod_i C[t]/(t^{l_i}), on R(0,L).
/// Monomials of total degree >= max l vanish in the target, so the
/// evaluation matrix only needs the lower ones.
inline latcurve::HilbertGrid hilbert_from_branches(const std::vector<Branch>& branches, const LatticePoint& L) {
  const std::size_t r = branches.size();
  const int top = *std::max_element(L.begin(), L.end());
  const auto N = static_cast<std::size_t>(top) + 1;
  // expansions[i][a][b] = x_i^a y_i^b truncated at t^N
  std::vector<std::vector<std::vector<std::vector<std::int64_t>>>> ex(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::vector<std::int64_t>> xp{{1}};
    for (int a = 1; a <= top; ++a) xp.push_back(mul_trunc(xp.back(), branches[i].x, N));
    ex[i].resize(static_cast<std::size_t>(top) + 1);
    for (int a = 0; a <= top; ++a) {
      std::vector<std::int64_t> cur = xp[static_cast<std::size_t>(a)];
      cur.resize(N, 0);
      for (int b = 0; a + b <= top; ++b) {
        ex[i][static_cast<std::size_t>(a)].push_back(cur);
        cur = mul_trunc(cur, branches[i].y, N);
      }
    }
  }
  latcurve::Rectangle box(L);
  std::vector<std::int64_t> values(box.size());
  for (std::size_t k = 0; k < box.size(); ++k) {
    LatticePoint l = box.point(k);
    const int deg = *std::max_element(l.begin(), l.end());
    std::vector<std::vector<std::int64_t>> rows;
    for (int a = 0; a < deg; ++a)
      for (int b = 0; a + b < deg; ++b) {
        std::vector<std::int64_t> row;
        for (std::size_t i = 0; i < r; ++i)
          for (int t = 0; t < l[i]; ++t) row.push_back(ex[i][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(t)]);
        rows.push_back(row);
      }
    values[k] = rows.empty() || rows[0].empty() ? 0 : static_cast<std::int64_t>(rank_mod_p(rows));
  }
  return latcurve::HilbertGrid(L, std::move(values));
}

/// Elements of the numerical semigroup generated by `gens` up to n.
inline std::set<int> semigroup_elements(const std::vector<int>& gens, int n) {
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  in[0] = 1;
  for (int v = 1; v <= n; ++v)
    for (int g : gens)
      if (v - g >= 0 && in[static_cast<std::size_t>(v - g)]) in[static_cast<std::size_t>(v)] = 1;
  std::set<int> out;
  for (int v = 0; v <= n; ++v)
    if (in[static_cast<std::size_t>(v)]) out.insert(v);
  return out;
}

/// One-branch Hilbert function: h(l) = #{s in S : s < l}.
inline latcurve::HilbertGrid hilbert_from_numerical(const std::set<int>& S, int L) {
  std::vector<std::int64_t> v;
  for (int l = 0; l <= L; ++l) v.push_back(static_cast<std::int64_t>(std::count_if(S.begin(), S.end(), [&](int s) { return s < l; })));
  return latcurve::HilbertGrid({L}, v);
}

// -------------------------------------------------------------- homology

struct CubeKey {
  LatticePoint base;
  Subset dirs;
  bool operator<(const CubeKey& o) const { return std::tie(dirs, base) < std::tie(o.dirs, o.base); }
};

/// Betti numbers over F_p of the sublevel cubical complex {w <= n} on `box`.
template <class WeightFn>
std::vector<std::int64_t> betti_mod_p(WeightFn&& w, const latcurve::Rectangle& box, std::int64_t n) {
  const int r = box.rank();
  std::vector<std::vector<CubeKey>> cells(static_cast<std::size_t>(r) + 1);
  for (std::size_t k = 0; k < box.size(); ++k) {
    LatticePoint b = box.point(k);
    for (Subset I = 0; I <= latcurve::full_subset(r); ++I) {
      bool ok = true;
      for (Subset J = I;; J = (J - 1) & I) {
        LatticePoint v = b + latcurve::indicator(r, J);
        if (!box.contains(v) || w(v) > n) {
          ok = false;
          break;
        }
        if (J == 0) break;
      }
      if (ok) cells[static_cast<std::size_t>(latcurve::popcount(I))].push_back({b, I});
    }
  }
  std::vector<std::size_t> rk(static_cast<std::size_t>(r) + 2, 0);
  for (int d = 1; d <= r; ++d) {
    const auto& lower = cells[static_cast<std::size_t>(d) - 1];
    const auto& upper = cells[static_cast<std::size_t>(d)];
    if (lower.empty() || upper.empty()) continue;
    std::map<CubeKey, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    std::vector<std::vector<std::int64_t>> m(upper.size(), std::vector<std::int64_t>(lower.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      int p = 0;
      for (int i = 0; i < r; ++i) {
        Subset bit = Subset{1} << i;
        if (!(upper[j].dirs & bit)) continue;
        Subset rest = upper[j].dirs & ~bit;
        std::int64_t sign = (p % 2 == 0) ? 1 : -1;
        m[j][index.at({upper[j].base + latcurve::unit(r, i), rest})] += sign;
        m[j][index.at({upper[j].base, rest})] -= sign;
        ++p;
      }
    }
    rk[static_cast<std::size_t>(d)] = rank_mod_p(m);
  }
  std::vector<std::int64_t> b(static_cast<std::size_t>(r) + 1);
  for (int d = 0; d <= r; ++d)
    b[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(cells[static_cast<std::size_t>(d)].size()) -
                                     static_cast<std::int64_t>(rk[static_cast<std::size_t>(d)]) -
                                     static_cast<std::int64_t>(rk[static_cast<std::size_t>(d) + 1]);
  return b;
}

/// Betti numbers over F_p of the pair (S_n meet B, S_n meet A), B = R(l, l+e)
/// and A the cubes of B avoiding l, from the full cubical boundary of B.
template <class WeightFn>
std::vector<std::int64_t> local_pair_betti_mod_p(WeightFn&& w, const LatticePoint& l, std::int64_t n) {
  const int r = static_cast<int>(l.size());
  const Subset all = latcurve::full_subset(r);
  auto present = [&](Subset K, Subset I) {
    for (Subset J = I;; J = (J - 1) & I) {
      if (w(l + latcurve::indicator(r, K | J)) > n) return false;
      if (J == 0) break;
    }
    return true;
  };
  // relative cells are the cubes (l, I) present in S_n; faces through l+e^i lie in A
  std::vector<std::vector<Subset>> cells(static_cast<std::size_t>(r) + 1);
  for (Subset I = 0; I <= all; ++I)
    if (present(0, I)) cells[static_cast<std::size_t>(latcurve::popcount(I))].push_back(I);
  std::vector<std::size_t> rk(static_cast<std::size_t>(r) + 2, 0);
  for (int d = 1; d <= r; ++d) {
    const auto& lower = cells[static_cast<std::size_t>(d) - 1];
    const auto& upper = cells[static_cast<std::size_t>(d)];
    if (lower.empty() || upper.empty()) continue;
    std::vector<std::vector<std::int64_t>> m(upper.size(), std::vector<std::int64_t>(lower.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      int p = 0;
      for (int i = 0; i < r; ++i) {
        Subset bit = Subset{1} << i;
        if (!(upper[j] & bit)) continue;
        auto it = std::find(lower.begin(), lower.end(), upper[j] & ~bit);
        if (it != lower.end()) m[j][static_cast<std::size_t>(it - lower.begin())] -= (p % 2 == 0) ? 1 : -1;
        ++p;
      }
    }
    rk[static_cast<std::size_t>(d)] = rank_mod_p(m);
  }
  std::vector<std::int64_t> b(static_cast<std::size_t>(r) + 1);
  for (int d = 0; d <= r; ++d)
    b[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(cells[static_cast<std::size_t>(d)].size()) -
                                     static_cast<std::int64_t>(rk[static_cast<std::size_t>(d)]) -
                                     static_cast<std::int64_t>(rk[static_cast<std::size_t>(d) + 1]);
  return b;
}

// --------------------------------------------------------------- motivic

/// sum_J (-1)^|J| q^{h(l+e^J)} divided by (1 - q) by long division.
template <class HilbertFn>
std::vector<std::int64_t> motivic_by_division(HilbertFn&& h, const LatticePoint& l) {
  const int r = static_cast<int>(l.size());
  std::map<std::int64_t, std::int64_t> num;
  std::int64_t top = 0;
  for (Subset J = 0; J <= latcurve::full_subset(r); ++J) {
    std::int64_t e = h(l + latcurve::indicator(r, J));
    num[e] += (latcurve::popcount(J) % 2 == 0) ? 1 : -1;
    top = std::max(top, e);
  }
  // N(q) = (1 - q) Q(q): Q_i = sum_{j <= i} N_j.
  std::vector<std::int64_t> q(static_cast<std::size_t>(top) + 1, 0);
  std::int64_t run = 0;
  for (std::int64_t i = 0; i <= top; ++i) {
    run += num.count(i) ? num.at(i) : 0;
    q[static_cast<std::size_t>(i)] = run;
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

// ----------------------------------------------------------------- Smith

inline std::int64_t det(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    out += ((j % 2 == 0) ? 1 : -1) * a[0][j] * det(minor);
  }
  return out;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors from determinantal divisors d_k = gcd of k x k minors:
/// the k-th factor is d_k / d_{k-1}.
inline std::vector<std::int64_t> invariant_factors(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> d{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    choose(rows, k, 0, cur, rs);
    choose(cols, k, 0, cur, cs);
    std::int64_t g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a[ri[i]][ci[j]];
        g = std::gcd(g, det(m));
      }
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
  return out;
}

}  // namespace oracle

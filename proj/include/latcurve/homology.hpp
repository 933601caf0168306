#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "parallel.hpp"
#include "smith.hpp"

namespace latcurve {

/// The closed cube (base, dirs): vertices base + e^I for I inside dirs.
struct Cube {
  LatticePoint base;
  Subset dirs = 0;

  int dim() const { return popcount(dirs); }

  std::vector<LatticePoint> vertices() const {
    const int r = static_cast<int>(base.size());
    std::vector<LatticePoint> out;
    for (Subset I = dirs;; I = (I - 1) & dirs) {
      out.push_back(base + indicator(r, I));
      if (I == 0) break;
    }
    return out;
  }

  /// Codimension-one faces with incidence signs:
  /// d(b,I) = sum_p (-1)^p [(b + e^{i_p}, I - i_p) - (b, I - i_p)].
  std::vector<std::pair<Cube, int>> boundary() const {
    const int r = static_cast<int>(base.size());
    std::vector<std::pair<Cube, int>> out;
    int p = 0;
    for (int i = 0; i < r; ++i) {
      Subset bit = Subset{1} << i;
      if (!(dirs & bit)) continue;
      int sign = (p % 2 == 0) ? 1 : -1;
      out.push_back({Cube{base + unit(r, i), dirs & ~bit}, sign});
      out.push_back({Cube{base, dirs & ~bit}, -sign});
      ++p;
    }
    return out;
  }

  auto operator<=>(const Cube&) const = default;
  bool operator==(const Cube&) const = default;
};

/// A finite cubical complex, cells sorted per dimension by (base, dirs).
/// Used both for sublevel sets S_n and for their intersections with boxes.
class SublevelComplex {
 public:
  SublevelComplex() = default;
  SublevelComplex(int r, std::int64_t level, std::vector<std::vector<Cube>> cells)
      : r_(r), level_(level), cells_(std::move(cells)) {
    cells_.resize(static_cast<std::size_t>(r) + 1);
    for (auto& v : cells_) std::sort(v.begin(), v.end());
  }

  int rank() const { return r_; }
  std::int64_t level() const { return level_; }
  const std::vector<Cube>& cells(int k) const { return cells_[static_cast<std::size_t>(k)]; }
  std::size_t count(int k) const { return (k < 0 || k > r_) ? 0 : cells_[static_cast<std::size_t>(k)].size(); }
  bool empty() const { return count(0) == 0; }

  std::optional<std::size_t> find(const Cube& c) const {
    const auto& v = cells_[static_cast<std::size_t>(c.dim())];
    auto it = std::lower_bound(v.begin(), v.end(), c);
    if (it == v.end() || !(*it == c)) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  }
  bool contains(const Cube& c) const { return c.dim() <= r_ && find(c).has_value(); }

  std::vector<Cube> all_cells() const {
    std::vector<Cube> out;
    for (const auto& v : cells_) out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  /// Every face of every cell is present.
  bool closed_under_faces() const {
    for (int k = 1; k <= r_; ++k)
      for (const auto& c : cells(k))
        for (const auto& [f, s] : c.boundary())
          if (!contains(f)) return false;
    return true;
  }

  bool subcomplex_of(const SublevelComplex& o) const {
    for (int k = 0; k <= r_; ++k)
      for (const auto& c : cells(k))
        if (!o.contains(c)) return false;
    return true;
  }

 private:
  int r_ = 0;
  std::int64_t level_ = 0;
  std::vector<std::vector<Cube>> cells_;
};

/// Every cube inside a rectangle together with its weight, the maximum
/// vertex weight.  S_n is the set of cubes with weight at most n.
class CubicalFiltration {
 public:
  template <class WeightFn>
  CubicalFiltration(const Rectangle& box, WeightFn&& weight) : box_(box) {
    const int r = box.rank();
    cells_.resize(static_cast<std::size_t>(r) + 1);
    std::vector<std::int64_t> vw(box.size());
    for (std::size_t k = 0; k < box.size(); ++k) vw[k] = weight(box.point(k));
    for (std::size_t k = 0; k < box.size(); ++k) {
      LatticePoint b = box.point(k);
      Subset allowed = 0;
      for (int i = 0; i < r; ++i)
        if (b[static_cast<std::size_t>(i)] < box.hi()[static_cast<std::size_t>(i)]) allowed |= Subset{1} << i;
      for (Subset I = 0; I <= full_subset(r); ++I) {
        if (I & ~allowed) continue;
        std::int64_t wt = std::numeric_limits<std::int64_t>::min();
        for (Subset J = I;; J = (J - 1) & I) {
          std::size_t idx = k;
          for (int i = 0; i < r; ++i)
            if (J & (Subset{1} << i)) idx += box.stride(i);
          wt = std::max(wt, vw[idx]);
          if (J == 0) break;
        }
        cells_[static_cast<std::size_t>(popcount(I))].push_back({Cube{b, I}, wt});
      }
    }
    for (auto& v : cells_) std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    min_ = std::numeric_limits<std::int64_t>::max();
    max_ = std::numeric_limits<std::int64_t>::min();
    for (std::int64_t v : vw) {
      min_ = std::min(min_, v);
      max_ = std::max(max_, v);
    }
  }

  int rank() const { return box_.rank(); }
  const Rectangle& box() const { return box_; }
  std::int64_t min_weight() const { return min_; }
  std::int64_t max_weight() const { return max_; }

  SublevelComplex level(std::int64_t n) const {
    std::vector<std::vector<Cube>> cells(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k)
      for (const auto& [c, wt] : cells_[k])
        if (wt <= n) cells[k].push_back(c);
    return SublevelComplex(rank(), n, std::move(cells));
  }

 private:
  Rectangle box_;
  std::vector<std::vector<std::pair<Cube, std::int64_t>>> cells_;
  std::int64_t min_ = 0;
  std::int64_t max_ = 0;
};

/// The default homology box: R(0,c), homotopy equivalent to the whole S_n.
inline Rectangle homology_box(const WeightGrid& w) { return Rectangle(w.conductor_or_throw()); }

/// S_n inside `box` (R(0,c) by default).
inline SublevelComplex sublevel_complex(const WeightGrid& w, std::int64_t n, std::optional<Rectangle> box = std::nullopt) {
  Rectangle b = box ? *box : homology_box(w);
  CubicalFiltration f(b, [&](const LatticePoint& l) { return w.at(l); });
  return f.level(n);
}

struct HomologyGroup {
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion;

  bool zero() const { return rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

namespace detail {

// Boundary d_k of the pair (X, A): columns are k-cells of X not in A, rows
// are (k-1)-cells of X not in A.  A may be null.
inline SparseMatrix relative_boundary(const SublevelComplex& X, const SublevelComplex* A, int k) {
  auto rel_cells = [&](int d) {
    std::vector<const Cube*> out;
    if (d < 0 || d > X.rank()) return out;
    for (const auto& c : X.cells(d))
      if (!A || !A->contains(c)) out.push_back(&c);
    return out;
  };
  std::vector<const Cube*> cols = rel_cells(k);
  std::vector<const Cube*> rows = rel_cells(k - 1);
  SparseMatrix m(rows.size(), cols.size());
  if (k <= 0) return m;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [face, sign] : cols[j]->boundary()) {
      auto it = std::lower_bound(rows.begin(), rows.end(), face, [](const Cube* a, const Cube& b) { return *a < b; });
      if (it != rows.end() && **it == face) m.add(static_cast<std::size_t>(it - rows.begin()), j, sign);
    }
  }
  return m;
}

inline std::size_t relative_count(const SublevelComplex& X, const SublevelComplex* A, int k) {
  if (k < 0 || k > X.rank()) return 0;
  if (!A) return X.count(k);
  std::size_t n = 0;
  for (const auto& c : X.cells(k))
    if (!A->contains(c)) ++n;
  return n;
}

// Homology of (X, A) in degrees 0..r together with the boundary ranks
// rank d_0..rank d_{r+1}.
inline std::pair<std::vector<HomologyGroup>, std::vector<std::size_t>> homology_with_ranks(const SublevelComplex& X,
                                                                                          const SublevelComplex* A) {
  const int r = X.rank();
  std::vector<SmithResult> snf(static_cast<std::size_t>(r) + 2);
  for (int k = 1; k <= r; ++k) snf[static_cast<std::size_t>(k)] = smith(relative_boundary(X, A, k));
  std::vector<HomologyGroup> H(static_cast<std::size_t>(r) + 1);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(r) + 2, 0);
  for (int k = 0; k <= r + 1; ++k) ranks[static_cast<std::size_t>(k)] = snf[static_cast<std::size_t>(k)].rank;
  for (int k = 0; k <= r; ++k) {
    auto n = static_cast<std::int64_t>(relative_count(X, A, k));
    H[static_cast<std::size_t>(k)].rank = n - static_cast<std::int64_t>(ranks[static_cast<std::size_t>(k)]) -
                                          static_cast<std::int64_t>(ranks[static_cast<std::size_t>(k) + 1]);
    H[static_cast<std::size_t>(k)].torsion = snf[static_cast<std::size_t>(k) + 1].torsion;
  }
  return {std::move(H), std::move(ranks)};
}

}  // namespace detail

/// H_k(cx; Z) for k = 0..r.
inline std::vector<HomologyGroup> homology(const SublevelComplex& cx) { return detail::homology_with_ranks(cx, nullptr).first; }

/// H_k(cx, sub; Z) for k = 0..r; `sub` must be a subcomplex of `cx`.
inline std::vector<HomologyGroup> relative_homology(const SublevelComplex& cx, const SublevelComplex& sub) {
  if (sub.rank() != cx.rank()) throw InconsistentInput("relative homology of complexes of different rank");
  if (!sub.subcomplex_of(cx)) throw InconsistentInput("relative homology needs a subcomplex");
  return detail::homology_with_ranks(cx, &sub).first;
}

/// Rank of H_k(A) -> H_k(X) induced by inclusion, over the rationals:
/// b_k(A) - dim(Z_k(A) meet B_k(X)) / B_k(A).
inline std::vector<std::int64_t> inclusion_ranks(const SublevelComplex& A, const SublevelComplex& X) {
  const int r = X.rank();
  auto [HA, rA] = detail::homology_with_ranks(A, nullptr);
  auto [HX, rX] = detail::homology_with_ranks(X, nullptr);
  auto [HR, rR] = detail::homology_with_ranks(X, &A);
  std::vector<std::int64_t> out(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) {
    std::size_t k1 = static_cast<std::size_t>(k) + 1;
    auto killed = static_cast<std::int64_t>(rX[k1]) - static_cast<std::int64_t>(rR[k1]) - static_cast<std::int64_t>(rA[k1]);
    out[static_cast<std::size_t>(k)] = HA[static_cast<std::size_t>(k)].rank - killed;
  }
  return out;
}

struct HomologyEntry {
  int k = 0;
  std::int64_t n = 0;
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion;
  std::int64_t u_rank = 0;  // rank of H_k(S_n) -> H_k(S_{n+1})

  bool operator==(const HomologyEntry&) const = default;
};

/// Lattice homology on the levels min w .. max w of R(0,c).
struct HomologyReport {
  int r = 0;
  std::int64_t min_level = 0;
  std::int64_t max_level = 0;
  std::vector<HomologyEntry> entries;  // ordered by (n, k)

  const HomologyEntry* find(int k, std::int64_t n) const {
    for (const auto& e : entries)
      if (e.k == k && e.n == n) return &e;
    return nullptr;
  }
  std::int64_t rank(int k, std::int64_t n) const {
    const HomologyEntry* e = find(k, n);
    return e ? e->rank : 0;
  }
  std::int64_t u_rank(int k, std::int64_t n) const {
    const HomologyEntry* e = find(k, n);
    return e ? e->u_rank : 0;
  }
  std::int64_t total_rank(int k) const {
    std::int64_t s = 0;
    for (const auto& e : entries)
      if (e.k == k) s += e.rank;
    return s;
  }
  bool has_torsion() const {
    return std::any_of(entries.begin(), entries.end(), [](const HomologyEntry& e) { return !e.torsion.empty(); });
  }

  /// Same (k, n, rank, torsion, U-rank) table.
  bool same_table(const HomologyReport& o) const { return r == o.r && min_level == o.min_level && entries == o.entries; }
};

inline HomologyReport lattice_homology(const WeightGrid& w) {
  Rectangle box = homology_box(w);
  CubicalFiltration filt(box, [&](const LatticePoint& l) { return w.at(l); });
  const int r = box.rank();
  HomologyReport rep;
  rep.r = r;
  rep.min_level = filt.min_weight();
  rep.max_level = filt.max_weight();
  const auto levels = static_cast<std::size_t>(rep.max_level - rep.min_level + 1);
  std::vector<SublevelComplex> S(levels + 1);
  for (std::size_t i = 0; i <= levels; ++i) S[i] = filt.level(rep.min_level + static_cast<std::int64_t>(i));
  std::vector<std::vector<HomologyGroup>> H(levels);
  std::vector<std::vector<std::int64_t>> U(levels);
  parallel_for(levels, [&](std::size_t i) {
    H[i] = homology(S[i]);
    U[i] = inclusion_ranks(S[i], S[i + 1]);
  });
  for (std::size_t i = 0; i < levels; ++i) {
    for (int k = 0; k <= r; ++k) {
      const HomologyGroup& g = H[i][static_cast<std::size_t>(k)];
      if (k == r && g.zero()) continue;
      HomologyEntry e;
      e.k = k;
      e.n = rep.min_level + static_cast<std::int64_t>(i);
      e.rank = g.rank;
      e.torsion = g.torsion;
      e.u_rank = U[i][static_cast<std::size_t>(k)];
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

/// min w over R(0,c).
inline std::int64_t min_weight(const WeightGrid& w) {
  Rectangle box = homology_box(w);
  std::int64_t out = std::numeric_limits<std::int64_t>::max();
  for (std::size_t k = 0; k < box.size(); ++k) out = std::min(out, w.at(box.point(k)));
  return out;
}

/// max w over R(0,c).
inline std::int64_t max_weight(const WeightGrid& w) {
  Rectangle box = homology_box(w);
  std::int64_t out = std::numeric_limits<std::int64_t>::min();
  for (std::size_t k = 0; k < box.size(); ++k) out = std::max(out, w.at(box.point(k)));
  return out;
}

/// -min w + sum_n [(b_0(S_n) - 1) + sum_{k>=1} (-1)^k b_k(S_n)].
inline std::int64_t euler_sum(const HomologyReport& rep) {
  std::int64_t eu = -rep.min_level;
  for (const auto& e : rep.entries) {
    if (e.k == 0)
      eu += e.rank - 1;
    else
      eu += (e.k % 2 == 0) ? e.rank : -e.rank;
  }
  return eu;
}

/// The Euler characteristic, verified against delta.
inline std::int64_t euler_characteristic(const HomologyReport& rep, std::int64_t delta) {
  std::int64_t eu = euler_sum(rep);
  if (eu != delta)
    throw EulerMismatch("Euler characteristic " + std::to_string(eu) + " differs from delta " + std::to_string(delta));
  return eu;
}

}  // namespace latcurve

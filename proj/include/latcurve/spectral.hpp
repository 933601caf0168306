#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "homology.hpp"
#include "lattice.hpp"
#include "smith.hpp"

namespace latcurve {

struct E1Entry {
  LatticePoint l;  // empty for level-summed entries
  std::int64_t d = 0;
  int k = 0;
  std::int64_t n = 0;
  std::int64_t rank = 0;
};

namespace detail {

// Weight of the cube (l, I): max of w(l + e^J) over J inside I.
template <class WeightFn>
std::vector<std::int64_t> local_cube_weights(WeightFn&& w, const LatticePoint& l) {
  const int r = static_cast<int>(l.size());
  const Subset top = full_subset(r);
  std::vector<std::int64_t> vw(static_cast<std::size_t>(top) + 1);
  for (Subset J = 0; J <= top; ++J) vw[J] = w(l + indicator(r, J));
  std::vector<std::int64_t> cw(vw);
  for (int i = 0; i < r; ++i)
    for (Subset I = 0; I <= top; ++I)
      if (I & (Subset{1} << i)) cw[I] = std::max(cw[I], cw[I & ~(Subset{1} << i)]);
  return cw;
}

// Relative homology of (S_n meet R(l, l+e), the part missing the vertex l).
// Its cells are the cubes (l, I) with weight <= n, in degree |I|, and the
// boundary only keeps the faces (l, I - i_p) with sign -(-1)^p.
inline std::vector<HomologyGroup> local_pair_homology(const std::vector<std::int64_t>& cw, int r, std::int64_t n) {
  const Subset top = full_subset(r);
  std::vector<std::vector<Subset>> cells(static_cast<std::size_t>(r) + 1);
  for (Subset I = 0; I <= top; ++I)
    if (cw[I] <= n) cells[static_cast<std::size_t>(popcount(I))].push_back(I);
  std::vector<SmithResult> snf(static_cast<std::size_t>(r) + 2);
  for (int k = 1; k <= r; ++k) {
    const auto& cols = cells[static_cast<std::size_t>(k)];
    const auto& rows = cells[static_cast<std::size_t>(k) - 1];
    SparseMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int p = 0;
      for (int i = 0; i < r; ++i) {
        Subset bit = Subset{1} << i;
        if (!(cols[j] & bit)) continue;
        Subset face = cols[j] & ~bit;
        auto it = std::lower_bound(rows.begin(), rows.end(), face);
        if (it != rows.end() && *it == face) m.add(static_cast<std::size_t>(it - rows.begin()), j, (p % 2 == 0) ? -1 : 1);
        ++p;
      }
    }
    snf[static_cast<std::size_t>(k)] = smith(m);
  }
  std::vector<HomologyGroup> H(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) {
    auto sk = static_cast<std::size_t>(k);
    H[sk].rank = static_cast<std::int64_t>(cells[sk].size()) - static_cast<std::int64_t>(snf[sk].rank) -
                 static_cast<std::int64_t>(snf[sk + 1].rank);
    H[sk].torsion = snf[sk + 1].torsion;
  }
  return H;
}

}  // namespace detail

/// Refined E^1 entry at l: rank of H_k(S_n meet B, S_n meet A) with
/// B = R(l, l+e) and A the cubes of B avoiding the vertex l.
template <class WeightFn>
E1Entry e1_refined_with(WeightFn&& w, const LatticePoint& l, int k, std::int64_t n) {
  const int r = static_cast<int>(l.size());
  E1Entry out{l, norm(l), k, n, 0};
  if (k < 0 || k > r) return out;
  auto cw = detail::local_cube_weights(w, l);
  auto H = detail::local_pair_homology(cw, r, n);
  for (int q = 0; q <= r; ++q)
    if (!H[static_cast<std::size_t>(q)].torsion.empty())
      throw TorsionFound("torsion in the refined entry at " + to_string(l) + " degree " + std::to_string(q));
  out.rank = H[static_cast<std::size_t>(k)].rank;
  return out;
}

inline E1Entry e1_refined(const WeightGrid& w, const LatticePoint& l, int k, std::int64_t n) {
  return e1_refined_with([&](const LatticePoint& p) { return w.at(p); }, l, k, n);
}

/// Sum of refined ranks over |l| = d.
inline E1Entry e1_level(const WeightGrid& w, std::int64_t d, int k, std::int64_t n) {
  E1Entry out{{}, d, k, n, 0};
  for (const auto& l : compositions(w.rank(), static_cast<int>(d))) out.rank += e1_refined(w, l, k, n).rank;
  return out;
}

/// Index witness for a nonzero refined entry: indices i_0 < ... < i_k with
/// w(l + e^I) = n - k + |I| for every I inside them.
inline std::optional<Subset> filtration_cycle_witness(const WeightGrid& w, const LatticePoint& l, int k, std::int64_t n) {
  const int r = w.rank();
  for (Subset T = 0; T <= full_subset(r); ++T) {
    if (popcount(T) != k + 1) continue;
    bool ok = true;
    for (Subset I = T;; I = (I - 1) & T) {
      if (w.at(l + indicator(r, I)) != n - k + popcount(I)) {
        ok = false;
        break;
      }
      if (I == 0) break;
    }
    if (ok) return T;
  }
  return std::nullopt;
}

struct MinimalCycleGroup {
  int k = 0;
  std::int64_t n = 0;
  std::int64_t j = 0;
  std::int64_t rank = 0;
};

/// The weight level j with n = (2 - |m|) j + k, if it exists.
inline std::optional<std::int64_t> minimal_cycle_level(const LatticePoint& m, int k, std::int64_t n) {
  std::int64_t mm = norm(m);
  if (mm < 3) return std::nullopt;
  std::int64_t num = k - n;
  if (num < 0 || num % (mm - 2) != 0) return std::nullopt;
  return num / (mm - 2);
}

/// M_{k,n}: the refined entry at l = jm.  Also checks that every level
/// d < j|m| vanishes and that at d = j|m| only jm contributes.
inline MinimalCycleGroup minimal_spectral_cycles(const WeightGrid& w, int k, std::int64_t n) {
  const LatticePoint& m = w.multiplicity();
  auto j = minimal_cycle_level(m, k, n);
  if (!j) throw UndefinedWeight("no minimal cycle group of degree " + std::to_string(k) + " and weight " + std::to_string(n));
  const std::int64_t top = *j * norm(m);
  LatticePoint jm = scaled(m, static_cast<int>(*j));
  for (std::int64_t d = 0; d <= top; ++d) {
    for (const auto& l : compositions(w.rank(), static_cast<int>(d))) {
      if (d == top && l == jm) continue;
      if (e1_refined(w, l, k, n).rank != 0)
        throw InvariantViolation("nonzero entry at " + to_string(l) + " below the minimal cycle level");
    }
  }
  return MinimalCycleGroup{k, n, *j, e1_refined(w, jm, k, n).rank};
}

inline std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

/// rank M_{k,n} = C(|m| - 1, k).
inline bool has_maximal_rank(const MinimalCycleGroup& g, const LatticePoint& m) { return g.rank == binomial(norm(m) - 1, g.k); }

/// Semigroup shape forced by a nonzero M at level j: every element other
/// than 0, m, ..., (j-1)m lies above jm (checked inside the grid).
inline bool semigroup_above_level(const SemigroupTable& S, const LatticePoint& m, std::int64_t j) {
  LatticePoint jm = scaled(m, static_cast<int>(j));
  for (const auto& s : S.elements()) {
    bool multiple = false;
    for (std::int64_t i = 0; i < j; ++i)
      if (s == scaled(m, static_cast<int>(i))) multiple = true;
    if (!multiple && !leq(jm, s)) return false;
  }
  return true;
}

struct PEKey {
  LatticePoint l;
  std::int64_t n = 0;
  int k = 0;
  auto operator<=>(const PEKey&) const = default;
};

/// Multigraded E^1 ranks over a box: every nonzero (l, n, k).  For a given
/// l only n in [w(l), w(l) + r] can be nonzero: below, no cell is present,
/// above, the local pair is the full cube and acyclic.
inline std::map<PEKey, std::int64_t> pe_series(const WeightGrid& w, const Rectangle& box) {
  std::map<PEKey, std::int64_t> out;
  const int r = w.rank();
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    LatticePoint l = box.point(idx);
    auto cw = detail::local_cube_weights([&](const LatticePoint& p) { return w.at(p); }, l);
    const std::int64_t w0 = w.at(l);
    for (std::int64_t n = w0; n <= w0 + r; ++n) {
      auto H = detail::local_pair_homology(cw, r, n);
      for (int k = 0; k <= r; ++k) {
        const auto& g = H[static_cast<std::size_t>(k)];
        if (!g.torsion.empty()) throw TorsionFound("torsion in the refined entry at " + to_string(l));
        if (g.rank != 0) out[PEKey{l, n, k}] = g.rank;
      }
    }
  }
  return out;
}

/// Collapse to (d, n, k) by summing over |l| = d.
inline std::map<std::tuple<std::int64_t, std::int64_t, int>, std::int64_t> pe_univariate(
    const std::map<PEKey, std::int64_t>& pe) {
  std::map<std::tuple<std::int64_t, std::int64_t, int>, std::int64_t> out;
  for (const auto& [key, rank] : pe) out[{norm(key.l), key.n, key.k}] += rank;
  return out;
}

}  // namespace latcurve

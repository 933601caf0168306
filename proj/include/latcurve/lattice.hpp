#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"

namespace latcurve {

/// A point of the lattice N^r; one coordinate per branch.
using LatticePoint = std::vector<int>;

/// A subset J of {0..r-1} encoded as a bit mask.
using Subset = std::uint32_t;

inline constexpr int kMaxBranches = 16;

inline int popcount(Subset s) { return std::popcount(s); }

inline Subset full_subset(int r) { return r >= 32 ? ~Subset{0} : ((Subset{1} << r) - 1); }

inline std::int64_t norm(const LatticePoint& l) {
  std::int64_t s = 0;
  for (int v : l) s += v;
  return s;
}

inline bool leq(const LatticePoint& a, const LatticePoint& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline LatticePoint meet(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

inline LatticePoint join(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

inline LatticePoint zero_point(int r) { return LatticePoint(static_cast<std::size_t>(r), 0); }
inline LatticePoint ones(int r) { return LatticePoint(static_cast<std::size_t>(r), 1); }

inline LatticePoint unit(int r, int i) {
  LatticePoint e = zero_point(r);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

/// e^J, the sum of unit vectors over J.
inline LatticePoint indicator(int r, Subset J) {
  LatticePoint e = zero_point(r);
  for (int i = 0; i < r; ++i)
    if (J & (Subset{1} << i)) e[static_cast<std::size_t>(i)] = 1;
  return e;
}

inline LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline LatticePoint scaled(const LatticePoint& a, int k) {
  LatticePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
  return out;
}

inline bool is_natural(const LatticePoint& a) {
  return std::all_of(a.begin(), a.end(), [](int v) { return v >= 0; });
}

inline std::string to_string(const LatticePoint& l) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
  os << ')';
  return os.str();
}

/// Coordinates of `l` selected by J, in increasing index order.
inline LatticePoint project(const LatticePoint& l, Subset J) {
  LatticePoint out;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (J & (Subset{1} << i)) out.push_back(l[i]);
  return out;
}

/// Inverse of project: place `l` on the coordinates of J, zero elsewhere.
inline LatticePoint embed(const LatticePoint& l, Subset J, int r) {
  LatticePoint out = zero_point(r);
  std::size_t k = 0;
  for (int i = 0; i < r; ++i)
    if (J & (Subset{1} << i)) out[static_cast<std::size_t>(i)] = l[k++];
  return out;
}

/// All l in N^r with |l| = d, in lexicographic order.
inline std::vector<LatticePoint> compositions(int r, int d) {
  std::vector<LatticePoint> out;
  if (d < 0 || r <= 0) return out;
  LatticePoint cur(static_cast<std::size_t>(r), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == r - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// The box R(lo, hi) of lattice points between two corners, with a dense
/// mixed-radix index (last coordinate varies fastest, so index order is
/// lexicographic order).
class Rectangle {
 public:
  Rectangle() = default;
  explicit Rectangle(const LatticePoint& hi) : Rectangle(zero_point(static_cast<int>(hi.size())), hi) {}
  Rectangle(LatticePoint lo, LatticePoint hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.size() != hi_.size()) throw InconsistentInput("rectangle corners differ in rank");
    if (!leq(lo_, hi_)) throw InconsistentInput("rectangle corners not ordered: " + to_string(lo_) + " vs " + to_string(hi_));
    stride_.assign(lo_.size(), 1);
    size_ = 1;
    for (std::size_t i = lo_.size(); i-- > 0;) {
      stride_[i] = size_;
      size_ *= static_cast<std::size_t>(hi_[i] - lo_[i] + 1);
    }
  }

  int rank() const { return static_cast<int>(lo_.size()); }
  const LatticePoint& lo() const { return lo_; }
  const LatticePoint& hi() const { return hi_; }
  std::size_t size() const { return size_; }

  bool contains(const LatticePoint& l) const {
    if (l.size() != lo_.size()) return false;
    for (std::size_t i = 0; i < l.size(); ++i)
      if (l[i] < lo_[i] || l[i] > hi_[i]) return false;
    return true;
  }

  std::size_t index(const LatticePoint& l) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < l.size(); ++i) idx += static_cast<std::size_t>(l[i] - lo_[i]) * stride_[i];
    return idx;
  }

  LatticePoint point(std::size_t idx) const {
    LatticePoint l(lo_.size());
    for (std::size_t i = 0; i < lo_.size(); ++i) {
      l[i] = lo_[i] + static_cast<int>(idx / stride_[i]);
      idx %= stride_[i];
    }
    return l;
  }

  std::size_t stride(int i) const { return stride_[static_cast<std::size_t>(i)]; }

  std::vector<LatticePoint> points() const {
    std::vector<LatticePoint> out;
    out.reserve(size_);
    for (std::size_t k = 0; k < size_; ++k) out.push_back(point(k));
    return out;
  }

  bool operator==(const Rectangle& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

 private:
  LatticePoint lo_;
  LatticePoint hi_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 0;
};

/// Dense values on a rectangle.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(Rectangle box, T fill) : box_(std::move(box)), values_(box_.size(), fill) {}
  Grid(Rectangle box, std::vector<T> values) : box_(std::move(box)), values_(std::move(values)) {
    if (values_.size() != box_.size()) throw InconsistentInput("grid value count does not match its rectangle");
  }

  const Rectangle& box() const { return box_; }
  bool contains(const LatticePoint& l) const { return box_.contains(l); }
  const T& at(const LatticePoint& l) const {
    if (!box_.contains(l)) throw MarginTooSmall("lattice point " + to_string(l) + " outside grid bound " + to_string(box_.hi()));
    return values_[box_.index(l)];
  }
  T& at(const LatticePoint& l) {
    if (!box_.contains(l)) throw MarginTooSmall("lattice point " + to_string(l) + " outside grid bound " + to_string(box_.hi()));
    return values_[box_.index(l)];
  }
  const T& operator[](std::size_t idx) const { return values_[idx]; }
  T& operator[](std::size_t idx) { return values_[idx]; }
  const std::vector<T>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  bool operator==(const Grid& o) const { return box_ == o.box_ && values_ == o.values_; }

 private:
  Rectangle box_;
  std::vector<T> values_;
};

/// The Hilbert function on R(0,L).
class HilbertGrid {
 public:
  HilbertGrid() = default;
  HilbertGrid(LatticePoint bound, std::vector<std::int64_t> values) : grid_(Rectangle(std::move(bound)), std::move(values)) {
    if (rank() < 1 || rank() > kMaxBranches) throw InconsistentInput("branch count out of range");
    if (!is_natural(grid_.box().hi())) throw InconsistentInput("grid bound must be non-negative");
  }

  int rank() const { return grid_.box().rank(); }
  const LatticePoint& bound() const { return grid_.box().hi(); }
  const Rectangle& box() const { return grid_.box(); }
  bool contains(const LatticePoint& l) const { return grid_.contains(l); }
  std::int64_t at(const LatticePoint& l) const { return grid_.at(l); }
  std::int64_t operator()(const LatticePoint& l) const { return grid_.at(l); }
  const std::vector<std::int64_t>& values() const { return grid_.values(); }

  bool operator==(const HilbertGrid& o) const { return grid_ == o.grid_; }

 private:
  Grid<std::int64_t> grid_;
};

/// First violated Hilbert-function invariant, if any: h(0)=0, unit steps,
/// and the matroid inequality in its local (unit square) form, which is
/// equivalent to the global one on a product of chains.
inline std::optional<std::string> hilbert_violation(const HilbertGrid& h) {
  const Rectangle& box = h.box();
  const int r = h.rank();
  if (h.at(zero_point(r)) != 0) return "h(0) != 0";
  for (std::size_t k = 0; k < box.size(); ++k) {
    LatticePoint l = box.point(k);
    std::int64_t hl = h.values()[k];
    for (int i = 0; i < r; ++i) {
      if (l[static_cast<std::size_t>(i)] == box.hi()[static_cast<std::size_t>(i)]) continue;
      std::int64_t step = h.values()[k + box.stride(i)] - hl;
      if (step != 0 && step != 1)
        return "step h(l+e^" + std::to_string(i + 1) + ")-h(l) = " + std::to_string(step) + " at l=" + to_string(l);
      for (int j = i + 1; j < r; ++j) {
        if (l[static_cast<std::size_t>(j)] == box.hi()[static_cast<std::size_t>(j)]) continue;
        std::int64_t hi_ = h.values()[k + box.stride(i)];
        std::int64_t hj = h.values()[k + box.stride(j)];
        std::int64_t hij = h.values()[k + box.stride(i) + box.stride(j)];
        if (hi_ + hj < hl + hij) return "matroid inequality fails on the unit square at l=" + to_string(l);
      }
    }
  }
  return std::nullopt;
}

/// Semigroup membership on R(0,L).
class SemigroupTable {
 public:
  SemigroupTable() = default;
  SemigroupTable(LatticePoint bound, std::vector<char> members, std::optional<LatticePoint> conductor = std::nullopt)
      : grid_(Rectangle(std::move(bound)), std::move(members)), conductor_(std::move(conductor)) {}

  static SemigroupTable from_elements(LatticePoint bound, const std::vector<LatticePoint>& elements,
                                      std::optional<LatticePoint> conductor = std::nullopt) {
    Grid<char> g(Rectangle(std::move(bound)), char{0});
    for (const auto& s : elements) {
      if (!g.contains(s)) throw InconsistentInput("semigroup element " + to_string(s) + " outside table bound");
      g.at(s) = 1;
    }
    return SemigroupTable(g.box().hi(), g.values(), std::move(conductor));
  }

  int rank() const { return grid_.box().rank(); }
  const LatticePoint& bound() const { return grid_.box().hi(); }
  const Rectangle& box() const { return grid_.box(); }
  const std::optional<LatticePoint>& conductor() const { return conductor_; }
  void set_conductor(LatticePoint c) { conductor_ = std::move(c); }

  bool in_grid(const LatticePoint& l) const { return grid_.contains(l); }
  bool contains(const LatticePoint& l) const { return grid_.at(l) != 0; }
  bool member_at(std::size_t idx) const { return grid_[idx] != 0; }
  const std::vector<char>& members() const { return grid_.values(); }

  std::vector<LatticePoint> elements() const {
    std::vector<LatticePoint> out;
    for (std::size_t k = 0; k < grid_.size(); ++k)
      if (grid_[k]) out.push_back(grid_.box().point(k));
    return out;
  }

  /// Membership pattern equality (conductor annotation ignored).
  bool same_members(const SemigroupTable& o) const { return grid_ == o.grid_; }

 private:
  Grid<char> grid_;
  std::optional<LatticePoint> conductor_;
};

/// Pair of members whose componentwise min is missing, if any.
inline std::optional<std::pair<LatticePoint, LatticePoint>> min_closure_violation(const SemigroupTable& S) {
  std::vector<LatticePoint> el = S.elements();
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = a + 1; b < el.size(); ++b)
      if (!S.contains(meet(el[a], el[b]))) return std::make_pair(el[a], el[b]);
  return std::nullopt;
}

/// Numerical semigroup generated by `generators` (gcd must be 1), tabulated
/// on [0, c] with its conductor c.
inline SemigroupTable numerical_semigroup(const std::vector<int>& generators) {
  int g = 0;
  for (int a : generators) {
    if (a <= 0) throw BadParams("semigroup generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) throw BadParams("semigroup generators must have gcd 1");
  int a0 = *std::min_element(generators.begin(), generators.end());
  std::vector<char> in{1};
  int run = 0;
  int n = 0;
  while (run < a0) {
    ++n;
    char member = 0;
    for (int a : generators)
      if (n - a >= 0 && in[static_cast<std::size_t>(n - a)]) member = 1;
    in.push_back(member);
    run = member ? run + 1 : 0;
  }
  int c = n - a0 + 1;
  in.resize(static_cast<std::size_t>(c) + 1);
  return SemigroupTable(LatticePoint{c}, in, LatticePoint{c});
}

/// Semigroup table on R(0,L) from its restriction to R(0,c), using
/// "l in S iff min(l,c) in S".
inline SemigroupTable extend_semigroup(const SemigroupTable& small, const LatticePoint& L) {
  if (!small.conductor()) throw InconsistentSemigroup("extension needs the conductor");
  const LatticePoint& c = *small.conductor();
  const int r = small.rank();
  if (static_cast<int>(L.size()) != r) throw InconsistentSemigroup("bound rank mismatch");
  if (!leq(c, L)) throw MarginTooSmall("extension bound " + to_string(L) + " below conductor " + to_string(c));
  if (!leq(c, small.bound())) throw InconsistentSemigroup("small table must cover R(0,c)");
  if (!small.contains(zero_point(r))) throw InconsistentSemigroup("0 missing from semigroup");
  if (!small.contains(c)) throw InconsistentSemigroup("conductor missing from semigroup");
  Rectangle box(L);
  std::vector<char> members(box.size());
  for (std::size_t k = 0; k < box.size(); ++k) members[k] = small.contains(meet(box.point(k), c)) ? 1 : 0;
  SemigroupTable out(L, std::move(members), c);
  if (auto bad = min_closure_violation(out))
    throw InconsistentSemigroup("not closed under min: " + to_string(bad->first) + ", " + to_string(bad->second));
  return out;
}

/// Whether the set {s in S : s_i = l_i, s_j >= l_j} is nonempty, searching
/// only R(0, max(l,c)).
inline bool delta_bar_nonempty(const SemigroupTable& S, const LatticePoint& c, const LatticePoint& l, int i) {
  LatticePoint lo = l;
  LatticePoint hi = join(l, c);
  hi[static_cast<std::size_t>(i)] = l[static_cast<std::size_t>(i)];
  Rectangle search(lo, hi);
  for (std::size_t k = 0; k < search.size(); ++k) {
    LatticePoint s = search.point(k);
    if (S.contains(s)) return true;
  }
  return false;
}

/// Hilbert function from the semigroup: h(0)=0 and each unit step adds one
/// exactly when the corresponding Delta-bar set is nonempty.
inline HilbertGrid hilbert_from_semigroup(const SemigroupTable& S, const LatticePoint& L) {
  if (!S.conductor()) throw InconsistentSemigroup("semigroup needs a conductor");
  const LatticePoint& c = *S.conductor();
  if (!leq(c, L)) throw MarginTooSmall("bound " + to_string(L) + " below conductor " + to_string(c));
  if (!leq(L, S.bound())) throw MarginTooSmall("semigroup table does not cover the requested bound");
  const int r = S.rank();
  Rectangle box(L);
  std::vector<std::int64_t> h(box.size(), 0);
  for (std::size_t k = 1; k < box.size(); ++k) {
    LatticePoint l = box.point(k);
    bool have = false;
    std::int64_t value = 0;
    int first_dir = -1;
    for (int i = 0; i < r; ++i) {
      if (l[static_cast<std::size_t>(i)] == 0) continue;
      LatticePoint p = l;
      --p[static_cast<std::size_t>(i)];
      std::int64_t v = h[k - box.stride(i)] + (delta_bar_nonempty(S, c, p, i) ? 1 : 0);
      if (!have) {
        value = v;
        have = true;
        first_dir = i;
      } else if (v != value) {
        throw PathInconsistency("Hilbert increments disagree at " + to_string(l) + " between directions " +
                                std::to_string(first_dir + 1) + " and " + std::to_string(i + 1));
      }
    }
    h[k] = value;
  }
  return HilbertGrid(L, std::move(h));
}

/// Semigroup on R(0, L-e) read off the Hilbert function: l in S iff every
/// forward step from l increases h.
inline SemigroupTable semigroup_from_hilbert(const HilbertGrid& h) {
  const int r = h.rank();
  LatticePoint M = h.bound() - ones(r);
  if (!is_natural(M)) throw MarginTooSmall("grid bound " + to_string(h.bound()) + " leaves no room for forward steps");
  Rectangle box(M);
  std::vector<char> members(box.size());
  for (std::size_t k = 0; k < box.size(); ++k) {
    LatticePoint l = box.point(k);
    std::int64_t hl = h.at(l);
    bool in = true;
    for (int i = 0; i < r && in; ++i) {
      ++l[static_cast<std::size_t>(i)];
      if (h.at(l) <= hl) in = false;
      --l[static_cast<std::size_t>(i)];
    }
    members[k] = in ? 1 : 0;
  }
  return SemigroupTable(M, std::move(members));
}

/// Minimal c with every tabulated point >= c in S.  Requires one full layer
/// above c inside the table, i.e. c + e <= bound.
inline LatticePoint detect_conductor(const SemigroupTable& S) {
  const Rectangle& box = S.box();
  const int r = S.rank();
  // reach[k]: some non-member lies >= point k.
  std::vector<char> reach(box.size(), 0);
  for (std::size_t k = box.size(); k-- > 0;) {
    LatticePoint l = box.point(k);
    char v = S.member_at(k) ? 0 : 1;
    for (int i = 0; i < r && !v; ++i)
      if (l[static_cast<std::size_t>(i)] < box.hi()[static_cast<std::size_t>(i)] && reach[k + box.stride(i)]) v = 1;
    reach[k] = v;
  }
  std::vector<LatticePoint> minimal;
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (reach[k]) continue;
    LatticePoint l = box.point(k);
    bool is_min = true;
    for (int i = 0; i < r && is_min; ++i)
      if (l[static_cast<std::size_t>(i)] > 0 && !reach[k - box.stride(i)]) is_min = false;
    if (is_min) minimal.push_back(l);
  }
  if (minimal.size() != 1)
    throw MarginTooSmall("conductor not determined inside bound " + to_string(box.hi()) + "; enlarge the grid");
  const LatticePoint& c = minimal.front();
  if (!leq(c + ones(r), box.hi()))
    throw MarginTooSmall("conductor candidate " + to_string(c) + " lacks a stabilization layer inside " +
                         to_string(box.hi()) + "; enlarge the grid");
  return c;
}

inline std::int64_t delta(const HilbertGrid& h, const LatticePoint& c) { return norm(c) - h.at(c); }

/// Multiplicity vector: the least nonzero semigroup element.
inline LatticePoint multiplicity_from_semigroup(const SemigroupTable& S) {
  std::optional<LatticePoint> m;
  for (std::size_t k = 1; k < S.box().size(); ++k) {
    if (!S.member_at(k)) continue;
    LatticePoint s = S.box().point(k);
    if (norm(s) == 0) continue;
    m = m ? meet(*m, s) : s;
  }
  if (!m) throw MarginTooSmall("no nonzero semigroup element inside the grid");
  if (!S.contains(*m)) throw InconsistentSemigroup("least nonzero semigroup element is not unique");
  return *m;
}

/// The weight function w = 2h - |l| on R(0,L).  Once the conductor is known,
/// values anywhere in N^r follow from w(l) = w(min(l,c)) + |l - min(l,c)|.
class WeightGrid {
 public:
  WeightGrid() = default;
  WeightGrid(LatticePoint bound, std::vector<std::int64_t> values, LatticePoint multiplicity,
             std::optional<LatticePoint> conductor = std::nullopt)
      : grid_(Rectangle(std::move(bound)), std::move(values)), m_(std::move(multiplicity)), c_(std::move(conductor)) {}

  int rank() const { return grid_.box().rank(); }
  const LatticePoint& bound() const { return grid_.box().hi(); }
  const Rectangle& box() const { return grid_.box(); }
  const LatticePoint& multiplicity() const { return m_; }
  const std::optional<LatticePoint>& conductor() const { return c_; }
  bool in_grid(const LatticePoint& l) const { return grid_.contains(l); }
  const std::vector<std::int64_t>& values() const { return grid_.values(); }

  std::int64_t at(const LatticePoint& l) const {
    if (grid_.contains(l)) return grid_.at(l);
    if (!c_) throw MarginTooSmall("weight at " + to_string(l) + " requested outside grid without a known conductor");
    if (!is_natural(l)) throw InconsistentInput("negative lattice point " + to_string(l));
    LatticePoint p = meet(l, *c_);
    return grid_.at(p) + (norm(l) - norm(p));
  }
  std::int64_t operator()(const LatticePoint& l) const { return at(l); }

  const LatticePoint& conductor_or_throw() const {
    if (!c_) throw MarginTooSmall("conductor not detected");
    return *c_;
  }

 private:
  Grid<std::int64_t> grid_;
  LatticePoint m_;
  std::optional<LatticePoint> c_;
};

/// w = 2h - |l| pointwise; multiplicity from the semigroup; the conductor is
/// attached when it can be certified inside the grid.
inline WeightGrid weight_from_hilbert(const HilbertGrid& h) {
  const Rectangle& box = h.box();
  std::vector<std::int64_t> w(box.size());
  for (std::size_t k = 0; k < box.size(); ++k) w[k] = 2 * h.values()[k] - norm(box.point(k));
  SemigroupTable S = semigroup_from_hilbert(h);
  LatticePoint m = multiplicity_from_semigroup(S);
  std::optional<LatticePoint> c;
  try {
    c = detect_conductor(S);
  } catch (const MarginTooSmall&) {
    c.reset();
  }
  return WeightGrid(h.bound(), std::move(w), std::move(m), std::move(c));
}

/// w(l) = w(c - l) on all of R(0,c).
inline bool gorenstein_symmetry(const WeightGrid& w, const LatticePoint& c) {
  Rectangle box(c);
  for (std::size_t k = 0; k < box.size(); ++k) {
    LatticePoint l = box.point(k);
    if (w.at(l) != w.at(c - l)) return false;
  }
  return true;
}

/// Restriction of h to the coordinate face of J, as a grid over N^{|J|}.
inline HilbertGrid restrict_to_subcurve(const HilbertGrid& h, Subset J) {
  const int r = h.rank();
  if (J == 0 || (J & ~full_subset(r)) != 0) throw BadParams("subcurve index set must be a nonempty subset of the branches");
  LatticePoint LJ = project(h.bound(), J);
  Rectangle face(LJ);
  std::vector<std::int64_t> v(face.size());
  for (std::size_t k = 0; k < face.size(); ++k) v[k] = h.at(embed(face.point(k), J, r));
  return HilbertGrid(LJ, std::move(v));
}

struct ConsistencyReport {
  bool ok = true;
  std::optional<LatticePoint> first_disagreement;
};

/// Round-trip guard: the semigroup read back from h agrees with S on their
/// common grid.
inline ConsistencyReport validate_semigroup_consistency(const SemigroupTable& S, const HilbertGrid& h) {
  ConsistencyReport rep;
  if (auto bad = min_closure_violation(S)) {
    rep.ok = false;
    rep.first_disagreement = meet(bad->first, bad->second);
    return rep;
  }
  SemigroupTable back = semigroup_from_hilbert(h);
  LatticePoint common = meet(back.bound(), S.bound());
  Rectangle box(common);
  for (std::size_t k = 0; k < box.size(); ++k) {
    LatticePoint l = box.point(k);
    if (back.contains(l) != S.contains(l)) {
      rep.ok = false;
      rep.first_disagreement = l;
      return rep;
    }
  }
  return rep;
}

}  // namespace latcurve

#pragma once

#include <optional>
#include <string>
#include <utility>

#include "lattice.hpp"

namespace latcurve {

struct CurveFlags {
  bool plane = false;
  bool gorenstein = false;
};

/// A germ as seen through its Hilbert function: the grid, the certified
/// conductor, the multiplicity vector and the weight grid.  Values beyond the
/// grid are exact because h grows by one per step past the conductor.
class Curve {
 public:
  static Curve from_hilbert(const HilbertGrid& h, CurveFlags flags = {}, std::string name = {}) {
    if (auto bad = hilbert_violation(h)) throw InvalidHilbert("Hilbert grid invalid: " + *bad);
    SemigroupTable S = semigroup_from_hilbert(h);
    LatticePoint c = detect_conductor(S);
    Curve out;
    out.h_ = h;
    out.c_ = c;
    out.m_ = multiplicity_from_semigroup(S);
    out.flags_ = flags;
    out.name_ = std::move(name);
    const Rectangle& box = h.box();
    std::vector<std::int64_t> w(box.size());
    for (std::size_t k = 0; k < box.size(); ++k) w[k] = 2 * h.values()[k] - norm(box.point(k));
    out.w_ = WeightGrid(h.bound(), std::move(w), out.m_, c);
    return out;
  }

  int r() const { return h_.rank(); }
  const std::string& name() const { return name_; }
  const CurveFlags& flags() const { return flags_; }
  const HilbertGrid& hilbert() const { return h_; }
  const WeightGrid& weights() const { return w_; }
  const LatticePoint& conductor() const { return c_; }
  const LatticePoint& multiplicity() const { return m_; }
  const LatticePoint& bound() const { return h_.bound(); }

  std::int64_t h(const LatticePoint& l) const {
    if (h_.contains(l)) return h_.at(l);
    if (!is_natural(l)) throw InconsistentInput("negative lattice point " + to_string(l));
    LatticePoint p = meet(l, c_);
    return h_.at(p) + (norm(l) - norm(p));
  }
  std::int64_t w(const LatticePoint& l) const { return w_.at(l); }

  bool in_semigroup(const LatticePoint& l) const {
    std::int64_t hl = h(l);
    for (int i = 0; i < r(); ++i)
      if (h(l + unit(r(), i)) <= hl) return false;
    return true;
  }

  std::int64_t delta() const { return latcurve::delta(h_, c_); }
  bool gorenstein_symmetric() const { return gorenstein_symmetry(w_, c_); }

  /// max(c, 2m) + 2e.
  LatticePoint default_bound() const { return join(c_, scaled(m_, 2)) + scaled(ones(r()), 2); }

  /// Same germ materialized on R(0,L).
  Curve rebound(const LatticePoint& L) const {
    if (static_cast<int>(L.size()) != r()) throw BadParams("bound rank mismatch");
    Rectangle box(L);
    std::vector<std::int64_t> v(box.size());
    for (std::size_t k = 0; k < box.size(); ++k) v[k] = h(box.point(k));
    return from_hilbert(HilbertGrid(L, std::move(v)), flags_, name_);
  }

  /// The subcurve C_J with its own conductor.  If the subconductor does not
  /// stabilize inside the face, the parent grid is doubled (at most 3 times).
  Curve restrict(Subset J) const {
    LatticePoint L = bound();
    for (int attempt = 0;; ++attempt) {
      try {
        HilbertGrid face = restrict_to_subcurve(attempt == 0 ? h_ : rebound(L).hilbert(), J);
        CurveFlags f{flags_.plane, false};
        Curve sub = from_hilbert(face, f, name_.empty() ? std::string{} : name_ + subset_label(J));
        sub.flags_.gorenstein = flags_.plane || sub.gorenstein_symmetric();
        return sub;
      } catch (const MarginTooSmall&) {
        if (attempt >= 3) throw;
        L = scaled(L, 2) + ones(r());
      }
    }
  }

  static std::string subset_label(Subset J) {
    std::string out = "[";
    for (int i = 0; i < kMaxBranches; ++i)
      if (J & (Subset{1} << i)) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
    return out + "]";
  }

  /// Subcurve C_i (single branch i).
  Curve branch(int i) const { return restrict(Subset{1} << i); }
  /// Subcurve with branch i removed; r must be at least 2.
  Curve without_branch(int i) const { return restrict(full_subset(r()) & ~(Subset{1} << i)); }

 private:
  HilbertGrid h_;
  WeightGrid w_;
  LatticePoint c_;
  LatticePoint m_;
  CurveFlags flags_;
  std::string name_;
};

}  // namespace latcurve

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curve.hpp"
#include "lattice.hpp"
#include "series.hpp"

namespace latcurve {

/// Poincare series of every nonempty subcurve, keyed by branch subset.
struct PoincareSource {
  std::map<Subset, RationalSeries> series;
};

/// Semigroup elements inside R(0,c) together with c.
struct SemigroupSource {
  LatticePoint conductor;
  std::vector<LatticePoint> elements;
};

/// Explicit Hilbert grid on R(0, bound), values in lexicographic order.
struct HilbertSource {
  LatticePoint bound;
  std::vector<std::int64_t> values;
};

struct BuiltinSource {
  std::string name;
  std::vector<int> params;
};

using GermSource = std::variant<PoincareSource, SemigroupSource, HilbertSource, BuiltinSource>;

struct GermDescriptor {
  int version = 1;
  std::string germ;
  int r = 1;
  GermSource source;
  CurveFlags flags;
  std::optional<LatticePoint> bound;
};

inline const char* source_kind(const GermSource& s) {
  switch (s.index()) {
    case 0: return "poincare";
    case 1: return "semigroup";
    case 2: return "hilbert";
    default: return "builtin";
  }
}

namespace detail {

inline LatticePoint initial_series_bound(const PoincareSource& src, int r) {
  LatticePoint L(static_cast<std::size_t>(r), 4);
  for (const auto& [J, s] : src.series) {
    auto widen = [&](const LatticePoint& exp) {
      LatticePoint full = embed(exp, J, r);
      for (int i = 0; i < r; ++i)
        L[static_cast<std::size_t>(i)] = std::max(L[static_cast<std::size_t>(i)], 2 * full[static_cast<std::size_t>(i)] + 4);
    };
    for (const auto& [e, c] : s.numerator.terms()) widen(e);
    for (const auto& d : s.denominator) widen(d);
  }
  return L;
}

inline Curve finish(const Curve& C, const std::optional<LatticePoint>& override_bound) {
  if (override_bound) return C;
  LatticePoint want = join(C.default_bound(), C.bound());
  return want == C.bound() ? C : C.rebound(want);
}

}  // namespace detail

/// The curve of a non-builtin descriptor.  With an explicit bound the grid
/// is built on exactly that rectangle and a too-small bound is an error;
/// otherwise the bound is grown until the conductor is certified and then
/// widened to the default max(c, 2m) + 2e.
inline Curve curve_from_source(const GermDescriptor& d) {
  const int r = d.r;
  if (r < 1 || r > kMaxBranches) throw BadParams("branch count out of range");
  if (d.bound && static_cast<int>(d.bound->size()) != r) throw BadParams("bound has the wrong number of coordinates");
  if (const auto* p = std::get_if<PoincareSource>(&d.source)) {
    if (d.bound) return Curve::from_hilbert(hilbert_from_poincare(p->series, r, *d.bound), d.flags, d.germ);
    LatticePoint L = detail::initial_series_bound(*p, r);
    for (int attempt = 0;; ++attempt) {
      try {
        return detail::finish(Curve::from_hilbert(hilbert_from_poincare(p->series, r, L), d.flags, d.germ), d.bound);
      } catch (const MarginTooSmall&) {
        if (attempt >= 4) throw;
        L = scaled(L, 2);
      }
    }
  }
  if (const auto* s = std::get_if<SemigroupSource>(&d.source)) {
    if (static_cast<int>(s->conductor.size()) != r) throw InconsistentSemigroup("conductor has the wrong number of coordinates");
    for (const auto& e : s->elements)
      if (static_cast<int>(e.size()) != r) throw InconsistentSemigroup("semigroup element of the wrong rank");
    SemigroupTable small = SemigroupTable::from_elements(s->conductor, s->elements, s->conductor);
    if (auto bad = min_closure_violation(small))
      throw InconsistentSemigroup("not closed under min: " + to_string(bad->first) + ", " + to_string(bad->second));
    LatticePoint L = d.bound ? *d.bound : s->conductor + scaled(ones(r), 2);
    SemigroupTable S = extend_semigroup(small, L);
    HilbertGrid h = hilbert_from_semigroup(S, L);
    ConsistencyReport rep = validate_semigroup_consistency(S, h);
    if (!rep.ok) throw InconsistentSemigroup("semigroup does not round-trip at " + to_string(*rep.first_disagreement));
    Curve C = Curve::from_hilbert(h, d.flags, d.germ);
    if (C.conductor() != s->conductor)
      throw InconsistentSemigroup("declared conductor " + to_string(s->conductor) + " but the table stabilizes at " +
                                  to_string(C.conductor()));
    return detail::finish(C, d.bound);
  }
  if (const auto* h = std::get_if<HilbertSource>(&d.source)) {
    if (static_cast<int>(h->bound.size()) != r) throw InvalidHilbert("Hilbert bound has the wrong number of coordinates");
    if (Rectangle(h->bound).size() != h->values.size()) throw InvalidHilbert("Hilbert value count does not match the bound");
    Curve C = Curve::from_hilbert(HilbertGrid(h->bound, h->values), d.flags, d.germ);
    return d.bound ? C.rebound(*d.bound) : detail::finish(C, d.bound);
  }
  throw BadParams("builtin descriptors must be resolved through the catalog");
}

}  // namespace latcurve

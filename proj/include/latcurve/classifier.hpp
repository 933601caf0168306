#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curve.hpp"
#include "homology.hpp"
#include "motivic.hpp"
#include "spectral.hpp"

namespace latcurve {

enum class CMKind { Finite, Tame, Wild };
enum class FiniteSubtype { A, D, E };
enum class Growth { Finite, Infinite };

struct CMType {
  CMKind kind = CMKind::Wild;
  std::optional<FiniteSubtype> subtype;
  std::optional<Growth> growth;

  bool operator==(const CMType&) const = default;

  std::string to_string() const {
    switch (kind) {
      case CMKind::Finite: {
        const char* s = !subtype ? "?" : *subtype == FiniteSubtype::A ? "A" : *subtype == FiniteSubtype::D ? "D-dominating" : "E-dominating";
        return std::string("finite(") + s + ")";
      }
      case CMKind::Tame:
        return std::string("tame(") + (growth && *growth == Growth::Finite ? "finite growth" : "infinite growth") + ")";
      case CMKind::Wild:
        return "wild";
    }
    return "?";
  }
};

/// One route's verdict with the quantities it was computed from.
struct RouteResult {
  std::string route;
  CMType type;
  std::map<std::string, std::int64_t> evidence;
};

struct Verdict {
  CMType type;
  RouteResult weights;
  RouteResult homological;
  RouteResult motivic;
  std::int64_t min_weight = 0;
  std::int64_t delta = 0;
};

struct ClassifyOptions {
  /// Use the W2b / condition (b) / condition (d) shortcuts.
  bool shortcuts = true;
};

// ---------------------------------------------------------------- weights

/// w(m) >= -1 and w(2m) >= 0.
inline bool classify_finite_pointwise(const Curve& C) {
  const LatticePoint& m = C.multiplicity();
  return C.w(m) >= -1 && C.w(scaled(m, 2)) >= 0;
}

/// Pointwise tame test (W1a, W1b, W2a, W2b, W3) for germs of infinite type.
inline bool classify_tame_weights(const Curve& C, const ClassifyOptions& opt = {}, std::map<std::string, std::int64_t>* ev = nullptr) {
  const int r = C.r();
  const LatticePoint& m = C.multiplicity();
  const std::int64_t mm = norm(m);
  const LatticePoint e = ones(r);
  auto note = [&](const std::string& k, std::int64_t v) {
    if (ev) (*ev)[k] = v;
  };
  bool w1a = C.w(m) >= -2;
  note("w(m)", C.w(m));
  bool w1b = true;
  for (int i = 0; i < r; ++i) {
    std::int64_t v = C.w(scaled(unit(r, i), m[static_cast<std::size_t>(i)]));
    note("w(m_" + std::to_string(i + 1) + " e^" + std::to_string(i + 1) + ")", v);
    if (v < 0) w1b = false;
  }
  bool w2a = C.w(m + e) >= mm - r - 2;
  note("w(m+e)", C.w(m + e));
  bool w2b = true;
  for (int i = 0; i < r; ++i) {
    const int mi = m[static_cast<std::size_t>(i)];
    if (opt.shortcuts && !(mm == 4 && mi == 1)) continue;
    LatticePoint p = m - scaled(unit(r, i), mi) + e - unit(r, i);
    std::int64_t v = C.w(p);
    note("w(m-m_" + std::to_string(i + 1) + "e^" + std::to_string(i + 1) + "+e-e^" + std::to_string(i + 1) + ")", v);
    if (v < mm - mi - r + 1) w2b = false;
  }
  bool w3 = true;
  if (mm == 3) {
    std::int64_t v = C.w(scaled(m, 2) + e);
    note("w(2m+e)", v);
    w3 = v >= C.w(m + e) + 1;
  }
  note("W1a", w1a);
  note("W1b", w1b);
  note("W2a", w2a);
  note("W2b", w2b);
  note("W3", w3);
  return w1a && w1b && w2a && w2b && w3;
}

/// Pointwise finite-growth pattern for tame germs: |m| = r = 4 with
/// w(m + e^I) = |I| - 2 for |I| <= 2, or |m| = r = 3 with w(2m) = -2,
/// w(2m + e^i) = -1 and w(2m + e^i + e^j) = 0.
inline bool growth_pattern_weights(const Curve& C) {
  const int r = C.r();
  const LatticePoint& m = C.multiplicity();
  const std::int64_t mm = norm(m);
  if (mm == 4 && r == 4) {
    for (Subset I = 0; I <= full_subset(r); ++I)
      if (popcount(I) <= 2 && C.w(m + indicator(r, I)) != popcount(I) - 2) return false;
    return true;
  }
  if (mm == 3 && r == 3) {
    LatticePoint two = scaled(m, 2);
    if (C.w(two) != -2) return false;
    for (Subset I = 1; I <= full_subset(r); ++I) {
      if (popcount(I) == 1 && C.w(two + indicator(r, I)) != -1) return false;
      if (popcount(I) == 2 && C.w(two + indicator(r, I)) != 0) return false;
    }
    return true;
  }
  return false;
}

inline RouteResult classify_by_weights(const Curve& C, const ClassifyOptions& opt = {}) {
  RouteResult out;
  out.route = "weights";
  const int r = C.r();
  const LatticePoint& m = C.multiplicity();
  out.evidence["w(m)"] = C.w(m);
  out.evidence["w(2m)"] = C.w(scaled(m, 2));
  out.evidence["|m|"] = norm(m);
  if (classify_finite_pointwise(C)) {
    out.type.kind = CMKind::Finite;
    if (norm(m) <= 2) {
      out.type.subtype = FiniteSubtype::A;
    } else {
      std::int64_t v = C.w(m + ones(r));
      out.evidence["w(m+e)"] = v;
      out.type.subtype = v >= 3 - r ? FiniteSubtype::D : FiniteSubtype::E;
    }
    return out;
  }
  if (classify_tame_weights(C, opt, &out.evidence)) {
    out.type.kind = CMKind::Tame;
    bool fg = growth_pattern_weights(C);
    out.evidence["growth pattern"] = fg;
    out.type.growth = fg ? Growth::Finite : Growth::Infinite;
  } else {
    out.type.kind = CMKind::Wild;
  }
  return out;
}

// ---------------------------------------------------------------- homology

struct HomologicalData {
  std::int64_t min_w = 0;
  std::optional<std::int64_t> m10;   // rank M_{1,0} when defined
  std::optional<std::int64_t> m1m1;  // rank M_{1,-1} when defined
};

inline HomologicalData homological_data(const Curve& C, bool want_m1m1) {
  HomologicalData d;
  HomologyReport rep = lattice_homology(C.weights());
  d.min_w = rep.min_level;
  const WeightGrid& w = C.weights();
  if (minimal_cycle_level(C.multiplicity(), 1, 0)) d.m10 = minimal_spectral_cycles(w, 1, 0).rank;
  if (want_m1m1 && minimal_cycle_level(C.multiplicity(), 1, -1)) d.m1m1 = minimal_spectral_cycles(w, 1, -1).rank;
  return d;
}

/// Finite subtype from min w and M_{1,0}.
inline FiniteSubtype classify_finite_subtype(const HomologicalData& d) {
  if (d.min_w == 0) return FiniteSubtype::A;
  return (d.m10 && *d.m10 != 0) ? FiniteSubtype::D : FiniteSubtype::E;
}

/// Conditions (a)-(d) on C, its branches and the unions of all but one branch.
inline bool classify_tame_homological(const Curve& C, const HomologicalData& d, const ClassifyOptions& opt = {},
                                      std::map<std::string, std::int64_t>* ev = nullptr) {
  const int r = C.r();
  const LatticePoint& m = C.multiplicity();
  auto note = [&](const std::string& k, std::int64_t v) {
    if (ev) (*ev)[k] = v;
  };
  bool a = d.min_w == -2;
  note("(a)", a);
  if (!a) return false;
  bool b = true;
  if (!(opt.shortcuts && norm(m) == 4 && r > 2)) {
    std::int64_t rk = d.m1m1 ? *d.m1m1 : minimal_spectral_cycles(C.weights(), 1, -1).rank;
    b = rk != 0;
  }
  note("(b)", b);
  bool c = true;
  for (int i = 0; i < r; ++i) {
    std::int64_t mw = lattice_homology(C.branch(i).weights()).min_level;
    note("min w(C_" + std::to_string(i + 1) + ")", mw);
    if (mw != 0) c = false;
  }
  note("(c)", c);
  bool dd = true;
  if (r >= 2) {
    for (int i = 0; i < r; ++i) {
      if (opt.shortcuts && (norm(m) != 4 || m[static_cast<std::size_t>(i)] != 1)) continue;
      Curve hat = C.without_branch(i);
      HomologicalData hd = homological_data(hat, false);
      note("min w(^C_" + std::to_string(i + 1) + ")", hd.min_w);
      bool ok = hd.min_w == 0 || (hd.min_w == -1 && hd.m10 && *hd.m10 != 0);
      if (hd.m10) note("rk M10(^C_" + std::to_string(i + 1) + ")", *hd.m10);
      if (!ok) dd = false;
    }
  }
  note("(d)", dd);
  return b && c && dd;
}

/// Finite growth iff M_{1,-1} has maximal rank.
inline Growth classify_growth(const Curve& C) {
  MinimalCycleGroup g = minimal_spectral_cycles(C.weights(), 1, -1);
  return has_maximal_rank(g, C.multiplicity()) ? Growth::Finite : Growth::Infinite;
}

inline RouteResult classify_by_homology(const Curve& C, const ClassifyOptions& opt = {}) {
  RouteResult out;
  out.route = "homological";
  HomologicalData d = homological_data(C, false);
  out.evidence["min w"] = d.min_w;
  if (d.m10) out.evidence["rk M10"] = *d.m10;
  if (d.min_w >= -1) {
    out.type.kind = CMKind::Finite;
    out.type.subtype = classify_finite_subtype(d);
    return out;
  }
  if (d.min_w == -2 && minimal_cycle_level(C.multiplicity(), 1, -1)) {
    d.m1m1 = minimal_spectral_cycles(C.weights(), 1, -1).rank;
    out.evidence["rk M1-1"] = *d.m1m1;
  }
  if (classify_tame_homological(C, d, opt, &out.evidence)) {
    out.type.kind = CMKind::Tame;
    out.type.growth = classify_growth(C);
  } else {
    out.type.kind = CMKind::Wild;
  }
  return out;
}

// ---------------------------------------------------------------- motivic

struct MotivicData {
  std::int64_t ord = 0;
  std::int64_t mu = 0;
  std::int64_t pi32 = 0;
  std::int64_t pi42 = 0;
  std::int64_t pi63 = 0;
};

inline MotivicData motivic_data(const Curve& C) {
  MotivicData d;
  LaurentSeries f = omega_substitution(C, 0);
  if (!f.order()) throw InvariantViolation("omega series vanishes through order 0");
  d.ord = *f.order();
  d.mu = motivic_multiplicity(C);
  d.pi32 = motivic_pi(C, 3, 2);
  d.pi42 = motivic_pi(C, 4, 2);
  d.pi63 = motivic_pi(C, 6, 3);
  return d;
}

inline RouteResult classify_motivic(const Curve& C) {
  RouteResult out;
  out.route = "motivic";
  MotivicData d = motivic_data(C);
  out.evidence["ord f"] = d.ord;
  out.evidence["mu"] = d.mu;
  out.evidence["pi(3,2)"] = d.pi32;
  out.evidence["pi(4,2)"] = d.pi42;
  out.evidence["pi(6,3)"] = d.pi63;
  if (d.ord >= -1) {
    out.type.kind = CMKind::Finite;
    out.type.subtype = d.ord == 0 ? FiniteSubtype::A : (d.pi32 != 0 ? FiniteSubtype::D : FiniteSubtype::E);
    return out;
  }
  const int r = C.r();
  bool a = d.ord == -2;
  bool b = (d.mu == 3 && d.pi63 < 0) || (d.mu == 4 && d.pi42 != 0);
  bool c = true, dd = true;
  if (a && b) {
    for (int i = 0; i < r; ++i) {
      std::int64_t o = *omega_substitution(C.branch(i), 0).order();
      out.evidence["ord f(C_" + std::to_string(i + 1) + ")"] = o;
      if (o != 0) c = false;
    }
    if (r >= 2) {
      for (int i = 0; i < r; ++i) {
        Curve hat = C.without_branch(i);
        std::int64_t o = *omega_substitution(hat, 0).order();
        std::int64_t p = motivic_pi(hat, 3, 2);
        out.evidence["ord f(^C_" + std::to_string(i + 1) + ")"] = o;
        out.evidence["pi(3,2)(^C_" + std::to_string(i + 1) + ")"] = p;
        if (!(o == 0 || (o == -1 && p != 0))) dd = false;
      }
    }
  }
  out.evidence["(a)"] = a;
  out.evidence["(b)"] = b;
  if (a && b && c && dd) {
    out.type.kind = CMKind::Tame;
    bool fg = (d.mu == 3 && d.pi63 == -2) || (d.mu == 4 && d.pi42 == -3);
    out.type.growth = fg ? Growth::Finite : Growth::Infinite;
  } else {
    out.type.kind = CMKind::Wild;
  }
  return out;
}

// ---------------------------------------------------------------- verdict

/// All three routes; any disagreement is fatal.
inline Verdict classify(const Curve& C, const ClassifyOptions& opt = {}) {
  Verdict v;
  v.weights = classify_by_weights(C, opt);
  v.homological = classify_by_homology(C, opt);
  v.motivic = classify_motivic(C);
  v.min_weight = v.homological.evidence.at("min w");
  v.delta = C.delta();
  if (!(v.weights.type == v.homological.type) || !(v.weights.type == v.motivic.type)) {
    throw RouteDisagreement("classification routes disagree: weights=" + v.weights.type.to_string() +
                            ", homological=" + v.homological.type.to_string() + ", motivic=" + v.motivic.type.to_string());
  }
  v.type = v.weights.type;
  return v;
}

enum class UnimodalFamily { Parabolic, Hyperbolic, Exceptional, None };

inline const char* to_string(UnimodalFamily f) {
  switch (f) {
    case UnimodalFamily::Parabolic: return "parabolic";
    case UnimodalFamily::Hyperbolic: return "hyperbolic";
    case UnimodalFamily::Exceptional: return "exceptional";
    case UnimodalFamily::None: return "none";
  }
  return "?";
}

/// Unimodal family of a plane germ; None for non-plane input.
inline UnimodalFamily classify_unimodal_plane(const CMType& type, std::int64_t min_w, std::int64_t delta, bool plane) {
  if (!plane) return UnimodalFamily::None;
  if (type.kind == CMKind::Tame)
    return (type.growth && *type.growth == Growth::Finite) ? UnimodalFamily::Parabolic : UnimodalFamily::Hyperbolic;
  if (min_w == -2 && delta <= 7) return UnimodalFamily::Exceptional;
  return UnimodalFamily::None;
}

}  // namespace latcurve

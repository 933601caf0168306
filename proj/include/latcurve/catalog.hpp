#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "curve.hpp"
#include "descriptor.hpp"
#include "series.hpp"

namespace latcurve::catalog {

struct Info {
  std::string key;      // lookup name
  std::string display;  // conventional name
  std::string params;   // parameter ranges, empty when none
  bool derived = false;  // semigroup data computed from a parametrization, not tabulated
};

/// Metadata every entry is checked against when loaded.
struct Expected {
  LatticePoint m;
  LatticePoint c;
  std::int64_t delta = 0;
  std::int64_t milnor = 0;
  CMType type;
  UnimodalFamily family = UnimodalFamily::None;
};

namespace detail {

inline MultiPoly poly(int r, const std::vector<std::pair<LatticePoint, std::int64_t>>& terms) {
  MultiPoly p(r);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

inline RationalSeries smooth_branch() { return {poly(1, {{{0}, 1}}), {{1}}}; }

// (1 + t^a) / (1 - t^2): the branch y^2 = x^a, a odd.
inline RationalSeries cusp_branch(int a) { return {poly(1, {{{0}, 1}, {{a}, 1}}), {{2}}}; }

inline Subset subset(std::initializer_list<int> one_based) {
  Subset J = 0;
  for (int i : one_based) J |= Subset{1} << (i - 1);
  return J;
}

inline std::vector<LatticePoint> numerical_elements(const std::vector<int>& gens, int& c) {
  SemigroupTable S = numerical_semigroup(gens);
  c = (*S.conductor())[0];
  return S.elements();
}

inline GermDescriptor numerical(const std::string& germ, const std::vector<int>& gens) {
  int c = 0;
  std::vector<LatticePoint> el = numerical_elements(gens, c);
  return GermDescriptor{1, germ, 1, SemigroupSource{{c}, el}, {true, true}, std::nullopt};
}

inline GermDescriptor semigroup(const std::string& germ, LatticePoint c, std::vector<LatticePoint> el) {
  int r = static_cast<int>(c.size());
  return GermDescriptor{1, germ, r, SemigroupSource{std::move(c), std::move(el)}, {true, true}, std::nullopt};
}

inline GermDescriptor series(const std::string& germ, int r, std::map<Subset, RationalSeries> s) {
  return GermDescriptor{1, germ, r, PoincareSource{std::move(s)}, {true, true}, std::nullopt};
}

inline void need(bool ok, const std::string& msg) {
  if (!ok) throw BadParams(msg);
}

inline std::string join_params(const std::string& base, const std::vector<int>& p) {
  std::ostringstream os;
  os << base;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os.str();
}

}  // namespace detail

inline std::vector<Info> list() {
  return {
      {"A", "A_n", "n >= 0", false},
      {"D", "D_n", "n >= 4", false},
      {"E6", "E_6", "", false},
      {"E7", "E_7", "", true},
      {"E8", "E_8", "", false},
      {"T", "T_{4,4}", "p=4, q=4", false},
      {"T", "T_{3,6}", "p=3, q=6", false},
      {"T", "T_{3,2b+3}", "p=3, q odd >= 7", false},
      {"T", "T_{2a+3,2b+3}", "p, q odd >= 5", false},
      {"E12", "E_12", "", false},
      {"E13", "E_13", "", true},
      {"E14", "E_14", "", false},
      {"Z11", "Z_11", "", true},
      {"Z12", "Z_12", "", true},
      {"Z13", "Z_13", "", true},
      {"W12", "W_12", "", false},
      {"W13", "W_13", "", true},
      {"W10", "W_{1,0}", "", true},
      {"E18", "E_18", "", false},
  };
}

/// Descriptor of a built-in germ.
inline GermDescriptor get(const std::string& name, const std::vector<int>& params = {}) {
  using namespace detail;
  auto no_params = [&] { need(params.empty(), name + " takes no parameters"); };
  if (name == "A") {
    need(params.size() == 1 && params[0] >= 0, "A needs one parameter n >= 0");
    const int n = params[0];
    std::string germ = "A" + std::to_string(n);
    if (n == 0) return semigroup(germ, {0}, {{0}});
    if (n % 2 == 0) return numerical(germ, {2, n + 1});
    const int k = (n + 1) / 2;
    std::vector<std::pair<LatticePoint, std::int64_t>> pc;
    for (int j = 0; j < k; ++j) pc.push_back({{j, j}, 1});
    return series(germ, 2, {{1, smooth_branch()}, {2, smooth_branch()}, {3, {poly(2, pc), {}}}});
  }
  if (name == "D") {
    need(params.size() == 1 && params[0] >= 4, "D needs one parameter n >= 4");
    const int n = params[0];
    std::string germ = "D" + std::to_string(n);
    if (n % 2 == 1)
      return series(germ, 2,
                    {{1, cusp_branch(n - 2)}, {2, smooth_branch()}, {3, {poly(2, {{{0, 0}, 1}, {{n - 2, 1}, 1}}), {}}}});
    const int k = n / 2;
    std::vector<std::pair<LatticePoint, std::int64_t>> p12;
    for (int j = 0; j <= k - 2; ++j) p12.push_back({{j, j}, 1});
    return series(germ, 3,
                  {{subset({1}), smooth_branch()},
                   {subset({2}), smooth_branch()},
                   {subset({3}), smooth_branch()},
                   {subset({1, 2}), {poly(2, p12), {}}},
                   {subset({1, 3}), {poly(2, {{{0, 0}, 1}}), {}}},
                   {subset({2, 3}), {poly(2, {{{0, 0}, 1}}), {}}},
                   {subset({1, 2, 3}), {poly(3, {{{0, 0, 0}, 1}, {{k - 1, k - 1, 1}, -1}}), {}}}});
  }
  if (name == "T") {
    need(params.size() == 2, "T needs two parameters p,q");
    int p = std::min(params[0], params[1]);
    int q = std::max(params[0], params[1]);
    std::string germ = "T" + std::to_string(p) + "," + std::to_string(q);
    if (p == 4 && q == 4) {
      std::map<Subset, RationalSeries> s;
      for (Subset J = 1; J <= full_subset(4); ++J) {
        int k = popcount(J);
        if (k == 1) s[J] = smooth_branch();
        if (k == 2) s[J] = {poly(2, {{{0, 0}, 1}}), {}};
        if (k == 3) s[J] = {poly(3, {{{0, 0, 0}, 1}, {{1, 1, 1}, -1}}), {}};
        if (k == 4) s[J] = {poly(4, {{{0, 0, 0, 0}, 1}, {{1, 1, 1, 1}, -2}, {{2, 2, 2, 2}, 1}}), {}};
      }
      return series(germ, 4, std::move(s));
    }
    if (p == 3 && q == 6) {
      std::map<Subset, RationalSeries> s;
      for (Subset J = 1; J <= full_subset(3); ++J) {
        int k = popcount(J);
        if (k == 1) s[J] = smooth_branch();
        if (k == 2) s[J] = {poly(2, {{{0, 0}, 1}, {{1, 1}, 1}}), {}};
        if (k == 3) s[J] = {poly(3, {{{0, 0, 0}, 1}, {{2, 2, 2}, -2}, {{4, 4, 4}, 1}}), {{1, 1, 1}}};
      }
      return series(germ, 3, std::move(s));
    }
    if (p == 3 && q >= 7 && q % 2 == 1) {
      const int b = (q - 3) / 2;
      MultiPoly pc = poly(2, {{{0, 0}, 1}, {{2, 1}, 1}}) * poly(2, {{{0, 0}, 1}, {{2 * b + 1, 2}, 1}});
      return series(germ, 2, {{1, cusp_branch(2 * b + 1)}, {2, smooth_branch()}, {3, {pc, {}}}});
    }
    if (p >= 5 && p % 2 == 1 && q % 2 == 1) {
      const int a = (p - 3) / 2, b = (q - 3) / 2;
      MultiPoly pc = poly(2, {{{0, 0}, 1}, {{2 * a + 1, 2}, 1}}) * poly(2, {{{0, 0}, 1}, {{2, 2 * b + 1}, 1}});
      return series(germ, 2, {{1, cusp_branch(2 * a + 1)}, {2, cusp_branch(2 * b + 1)}, {3, {pc, {}}}});
    }
    throw BadParams("T_{p,q} is shipped for (4,4), (3,6), (3, odd q >= 7) and (odd p >= 5, odd q >= 5)");
  }
  if (name == "E6") return no_params(), numerical("E6", {3, 4});
  if (name == "E8") return no_params(), numerical("E8", {3, 5});
  if (name == "E12") return no_params(), numerical("E12", {3, 7});
  if (name == "E14") return no_params(), numerical("E14", {3, 8});
  if (name == "W12") return no_params(), numerical("W12", {4, 5});
  if (name == "E18") return no_params(), numerical("E18", {3, 10});
  if (name == "E7") {
    no_params();
    return semigroup("E7", {5, 3}, {{0, 0}, {2, 1}, {3, 2}, {3, 3}, {4, 2}, {5, 3}});
  }
  if (name == "E13") {
    no_params();
    return semigroup("E13", {9, 5},
                     {{0, 0}, {2, 1}, {4, 2}, {5, 3}, {5, 4}, {5, 5}, {6, 3}, {7, 4}, {7, 5}, {8, 4}, {9, 5}});
  }
  if (name == "Z11") {
    no_params();
    return semigroup("Z11", {9, 3},
                     {{0, 0}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {6, 2}, {6, 3}, {7, 2}, {7, 3}, {8, 2}, {9, 3}});
  }
  if (name == "Z13") {
    no_params();
    return semigroup("Z13", {11, 3},
                     {{0, 0}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {6, 2}, {6, 3}, {8, 2}, {8, 3}, {9, 2}, {9, 3}, {10, 2}, {11, 3}});
  }
  if (name == "W13") {
    no_params();
    return semigroup("W13", {10, 4},
                     {{0, 0}, {3, 1}, {4, 2}, {4, 3}, {4, 4}, {6, 2}, {7, 3}, {7, 4}, {8, 3}, {8, 4}, {9, 3}, {10, 4}});
  }
  if (name == "W10") {
    no_params();
    return semigroup("W_{1,0}", {8, 8},
                     {{0, 0}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {6, 7}, {6, 8}, {7, 6}, {7, 7}, {8, 6}, {8, 8}});
  }
  if (name == "Z12") {
    no_params();
    return semigroup("Z12", {7, 4, 3},
                     {{0, 0, 0}, {2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {3, 2, 1}, {3, 3, 1}, {3, 4, 1}, {4, 2, 2}, {4, 2, 3},
                      {5, 3, 2}, {5, 3, 3}, {5, 4, 2}, {5, 4, 3}, {6, 3, 2}, {6, 3, 3}, {6, 4, 2}, {7, 3, 2}, {7, 4, 3}});
  }
  throw UnknownGerm("unknown germ '" + name + "'");
}

/// Parses "D,5", "T,3,7", "E12" into a name and parameters.
inline std::pair<std::string, std::vector<int>> parse_reference(const std::string& ref) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : ref) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  std::vector<int> params;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoi(parts[i], &used));
      if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
    } catch (const std::exception&) {
      throw BadParams("germ parameter '" + parts[i] + "' is not an integer");
    }
  }
  return {parts[0], params};
}

/// Expected m, c, delta, Milnor number and verdict of a built-in germ.
inline Expected expected(const std::string& name, const std::vector<int>& params = {}) {
  auto finite = [](FiniteSubtype s) { return CMType{CMKind::Finite, s, std::nullopt}; };
  auto tame = [](Growth g) { return CMType{CMKind::Tame, std::nullopt, g}; };
  const CMType wild{CMKind::Wild, std::nullopt, std::nullopt};
  auto with_milnor = [](Expected e) {
    e.milnor = 2 * e.delta - static_cast<std::int64_t>(e.c.size()) + 1;
    return e;
  };
  get(name, params);
  if (name == "A") {
    const int n = params[0];
    if (n == 0) return with_milnor({{1}, {0}, 0, 0, finite(FiniteSubtype::A)});
    if (n % 2 == 0) return with_milnor({{2}, {n}, n / 2, 0, finite(FiniteSubtype::A)});
    const int k = (n + 1) / 2;
    return with_milnor({{1, 1}, {k, k}, k, 0, finite(FiniteSubtype::A)});
  }
  if (name == "D") {
    const int n = params[0];
    if (n % 2 == 1) return with_milnor({{2, 1}, {n - 1, 2}, (n + 1) / 2, 0, finite(FiniteSubtype::D)});
    const int k = n / 2;
    return with_milnor({{1, 1, 1}, {k, k, 2}, k + 1, 0, finite(FiniteSubtype::D)});
  }
  if (name == "E6") return with_milnor({{3}, {6}, 3, 0, finite(FiniteSubtype::E)});
  if (name == "E7") return with_milnor({{2, 1}, {5, 3}, 4, 0, finite(FiniteSubtype::E)});
  if (name == "E8") return with_milnor({{3}, {8}, 4, 0, finite(FiniteSubtype::E)});
  if (name == "T") {
    int p = std::min(params[0], params[1]);
    int q = std::max(params[0], params[1]);
    // Milnor number p + q + 1, and 2 delta = mu + branches - 1.
    const int branches = p == 4 ? 4 : (p == 3 && q == 6) ? 3 : 2;
    const std::int64_t delta = (p + q + 1 + branches - 1) / 2;
    if (p == 4) return with_milnor({{1, 1, 1, 1}, {3, 3, 3, 3}, delta, 0, tame(Growth::Finite), UnimodalFamily::Parabolic});
    if (q == 6) return with_milnor({{1, 1, 1}, {4, 4, 4}, delta, 0, tame(Growth::Finite), UnimodalFamily::Parabolic});
    if (p == 3)
      return with_milnor({{2, 1}, {q + 1, 4}, delta, 0, tame(Growth::Infinite), UnimodalFamily::Hyperbolic});
    return with_milnor({{2, 2}, {p + 1, q + 1}, delta, 0, tame(Growth::Infinite), UnimodalFamily::Hyperbolic});
  }
  if (name == "E12") return with_milnor({{3}, {12}, 6, 0, wild, UnimodalFamily::Exceptional});
  if (name == "E13") return with_milnor({{2, 1}, {9, 5}, 7, 0, wild, UnimodalFamily::Exceptional});
  if (name == "E14") return with_milnor({{3}, {14}, 7, 0, wild, UnimodalFamily::Exceptional});
  if (name == "Z11") return with_milnor({{3, 1}, {9, 3}, 6, 0, wild, UnimodalFamily::Exceptional});
  if (name == "Z12") return with_milnor({{2, 1, 1}, {7, 4, 3}, 7, 0, wild, UnimodalFamily::Exceptional});
  if (name == "Z13") return with_milnor({{3, 1}, {11, 3}, 7, 0, wild, UnimodalFamily::Exceptional});
  if (name == "W12") return with_milnor({{4}, {12}, 6, 0, wild, UnimodalFamily::Exceptional});
  if (name == "W13") return with_milnor({{3, 1}, {10, 4}, 7, 0, wild, UnimodalFamily::Exceptional});
  if (name == "W10") return with_milnor({{2, 2}, {8, 8}, 8, 0, wild, UnimodalFamily::None});
  if (name == "E18") return with_milnor({{3}, {18}, 9, 0, wild, UnimodalFamily::None});
  throw UnknownGerm("unknown germ '" + name + "'");
}

/// Every shipped germ reference used by the test suites.
inline std::vector<std::pair<std::string, std::vector<int>>> shipped() {
  std::vector<std::pair<std::string, std::vector<int>>> out;
  for (int n = 0; n <= 6; ++n) out.push_back({"A", {n}});
  for (int n = 4; n <= 8; ++n) out.push_back({"D", {n}});
  for (const char* e : {"E6", "E7", "E8"}) out.push_back({e, {}});
  out.push_back({"T", {4, 4}});
  out.push_back({"T", {3, 6}});
  out.push_back({"T", {3, 7}});
  out.push_back({"T", {3, 9}});
  out.push_back({"T", {5, 5}});
  out.push_back({"T", {5, 7}});
  out.push_back({"T", {7, 7}});
  out.push_back({"T", {7, 9}});
  for (const char* e : {"E12", "E13", "E14", "Z11", "Z12", "Z13", "W12", "W13", "W10", "E18"}) out.push_back({e, {}});
  return out;
}

inline std::string reference_name(const std::string& name, const std::vector<int>& params) {
  return params.empty() ? name : detail::join_params(name + ",", params);
}

}  // namespace latcurve::catalog

namespace latcurve {

/// The curve of any descriptor; builtin references go through the catalog.
inline Curve build_curve(const GermDescriptor& d) {
  if (const auto* b = std::get_if<BuiltinSource>(&d.source)) {
    GermDescriptor inner = catalog::get(b->name, b->params);
    if (inner.r != d.r)
      throw InconsistentInput("descriptor declares r=" + std::to_string(d.r) + " but built-in " + b->name + " has " +
                              std::to_string(inner.r) + " branches");
    if (d.bound) inner.bound = d.bound;
    return curve_from_source(inner);
  }
  return curve_from_source(d);
}

namespace catalog {

/// Built-in germ as a curve, with m, c and delta checked against the
/// stored metadata.
inline Curve load(const std::string& name, const std::vector<int>& params = {}) {
  Curve C = build_curve(get(name, params));
  Expected e = expected(name, params);
  if (C.multiplicity() != e.m || C.conductor() != e.c || C.delta() != e.delta)
    throw InvariantViolation("catalog metadata of " + reference_name(name, params) + " disagrees with recomputation: m=" +
                             to_string(C.multiplicity()) + " c=" + to_string(C.conductor()) + " delta=" + std::to_string(C.delta()));
  return C;
}

}  // namespace catalog

}  // namespace latcurve

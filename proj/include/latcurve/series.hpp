#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "lattice.hpp"

namespace latcurve {

/// Integer polynomial in r variables.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int r) : r_(r) {}

  static MultiPoly constant(int r, std::int64_t c) {
    MultiPoly p(r);
    p.add_term(zero_point(r), c);
    return p;
  }
  static MultiPoly monomial(const LatticePoint& exp, std::int64_t c = 1) {
    MultiPoly p(static_cast<int>(exp.size()));
    p.add_term(exp, c);
    return p;
  }

  int rank() const { return r_; }
  const std::map<LatticePoint, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const LatticePoint& exp, std::int64_t c) {
    if (static_cast<int>(exp.size()) != r_) throw InconsistentInput("monomial rank mismatch");
    if (!is_natural(exp)) throw InconsistentInput("negative exponent " + to_string(exp));
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, c);
      return;
    }
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  std::int64_t coefficient(const LatticePoint& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, checked::mul(-1, c));
    return out;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly out(r_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, checked::mul(c1, c2));
    return out;
  }
  bool operator==(const MultiPoly& o) const { return r_ == o.r_ && terms_ == o.terms_; }

 private:
  int r_ = 0;
  std::map<LatticePoint, std::int64_t> terms_;
};

/// numerator / prod (1 - t^a) over the listed exponents a.
struct RationalSeries {
  MultiPoly numerator;
  std::vector<LatticePoint> denominator;

  int rank() const { return numerator.rank(); }
};

/// Power-series coefficients of `s` on `box`, exact.
inline Grid<std::int64_t> expand(const RationalSeries& s, const Rectangle& box) {
  const int r = s.rank();
  if (box.rank() != r) throw InconsistentInput("expansion box rank mismatch");
  for (const auto& a : s.denominator) {
    if (static_cast<int>(a.size()) != r || !is_natural(a) || norm(a) == 0)
      throw InvalidSeries("denominator factor needs a nonzero non-negative exponent");
  }
  Rectangle full(box.hi());
  std::vector<std::int64_t> v(full.size(), 0);
  for (const auto& [e, c] : s.numerator.terms())
    if (full.contains(e)) v[full.index(e)] = checked::add(v[full.index(e)], c);
  for (const auto& a : s.denominator) {
    for (std::size_t k = 0; k < full.size(); ++k) {
      LatticePoint x = full.point(k);
      LatticePoint y = x - a;
      if (!is_natural(y)) continue;
      v[k] = checked::add(v[k], v[full.index(y)]);
    }
  }
  Grid<std::int64_t> out(box, std::int64_t{0});
  for (std::size_t k = 0; k < box.size(); ++k) out[k] = v[full.index(box.point(k))];
  return out;
}

/// The Hilbert function on R(0,L) from the Poincare series of every
/// nonempty subcurve (keyed by branch subset, variables in index order):
///   H = 1/prod(1-t_i) * sum_J (-1)^{|J|-1} t^{e^J} P_J(t_J).
inline HilbertGrid hilbert_from_poincare(const std::map<Subset, RationalSeries>& subseries, int r, const LatticePoint& L) {
  if (r < 1 || r > kMaxBranches) throw InvalidSeries("branch count out of range");
  if (static_cast<int>(L.size()) != r || !is_natural(L)) throw InvalidSeries("bad grid bound");
  Rectangle box(L);
  std::vector<std::int64_t> acc(box.size(), 0);
  for (Subset J = 1; J <= full_subset(r); ++J) {
    auto it = subseries.find(J);
    if (it == subseries.end()) throw InvalidSeries("missing Poincare series for a subcurve");
    const RationalSeries& P = it->second;
    if (P.rank() != popcount(J)) throw InvalidSeries("subcurve series has the wrong number of variables");
    LatticePoint top = project(L, J) - ones(popcount(J));
    if (!is_natural(top)) continue;
    Grid<std::int64_t> coeffs = expand(P, Rectangle(top));
    const std::int64_t sign = (popcount(J) % 2 == 1) ? 1 : -1;
    LatticePoint shift = indicator(r, J);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      LatticePoint target = embed(coeffs.box().point(k), J, r) + shift;
      std::size_t idx = box.index(target);
      acc[idx] = checked::add(acc[idx], checked::mul(sign, coeffs[k]));
    }
  }
  for (int i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < box.size(); ++k) {
      LatticePoint x = box.point(k);
      if (x[static_cast<std::size_t>(i)] == 0) continue;
      acc[k] = checked::add(acc[k], acc[k - box.stride(i)]);
    }
  }
  HilbertGrid h(L, std::move(acc));
  if (auto bad = hilbert_violation(h)) throw InvalidSeries("series do not define a Hilbert function: " + *bad);
  return h;
}

/// Poincare coefficients p(l) = sum_J (-1)^{|J|+1} h(l + e^J) on R(0, L-e).
inline MultiPoly poincare_from_hilbert(const HilbertGrid& h) {
  const int r = h.rank();
  LatticePoint M = h.bound() - ones(r);
  if (!is_natural(M)) throw MarginTooSmall("grid bound too small for Poincare coefficients");
  Rectangle box(M);
  MultiPoly out(r);
  for (std::size_t k = 0; k < box.size(); ++k) {
    LatticePoint l = box.point(k);
    std::int64_t p = 0;
    for (Subset J = 0; J <= full_subset(r); ++J) {
      std::int64_t v = h.at(l + indicator(r, J));
      p += (popcount(J) % 2 == 1) ? v : -v;
    }
    out.add_term(l, p);
  }
  return out;
}

}  // namespace latcurve

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "checked.hpp"
#include "curve.hpp"
#include "lattice.hpp"
#include "spectral.hpp"

namespace latcurve {

/// Integer polynomial in q; coefficient i belongs to q^i.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }

  static QPoly monomial(std::int64_t deg, std::int64_t coef = 1) {
    if (deg < 0) throw InconsistentInput("negative q-degree");
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg) + 1, 0);
    c.back() = coef;
    return QPoly(std::move(c));
  }

  /// q^a + q^(a+1) + ... + q^(b-1); zero when b <= a.
  static QPoly run(std::int64_t a, std::int64_t b) {
    QPoly p;
    for (std::int64_t i = a; i < b; ++i) p.add(i, 1);
    return p;
  }

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  std::int64_t coefficient(std::int64_t i) const {
    return (i < 0 || i >= static_cast<std::int64_t>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)];
  }

  /// Lowest degree with a nonzero coefficient.
  std::optional<std::int64_t> order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<std::int64_t>(i);
    return std::nullopt;
  }

  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (std::int64_t v : c_) s = checked::add(s, v);
    return s;
  }

  void add(std::int64_t deg, std::int64_t coef) {
    if (deg < 0) throw InconsistentInput("negative q-degree");
    if (static_cast<std::size_t>(deg) >= c_.size()) c_.resize(static_cast<std::size_t>(deg) + 1, 0);
    c_[static_cast<std::size_t>(deg)] = checked::add(c_[static_cast<std::size_t>(deg)], coef);
    trim();
  }

  QPoly operator+(const QPoly& o) const {
    QPoly out = *this;
    for (std::size_t i = 0; i < o.c_.size(); ++i) out.add(static_cast<std::int64_t>(i), o.c_[i]);
    return out;
  }
  QPoly operator-() const {
    QPoly out = *this;
    for (auto& v : out.c_) v = checked::mul(-1, v);
    return out;
  }
  QPoly operator-(const QPoly& o) const { return *this + (-o); }
  QPoly operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<std::int64_t> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = checked::add(c[i + j], checked::mul(c_[i], o.c_[j]));
    return QPoly(std::move(c));
  }
  QPoly shifted(std::int64_t k) const {
    if (is_zero()) return {};
    std::vector<std::int64_t> c(static_cast<std::size_t>(k), 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return QPoly(std::move(c));
  }
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      std::int64_t v = c_[i];
      if (v == 0) continue;
      bool neg = v < 0;
      std::int64_t a = neg ? -v : v;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      if (i == 0)
        s += std::to_string(a);
      else {
        if (a != 1) s += std::to_string(a);
        s += "q";
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

/// Laurent polynomial in omega holding the coefficients of orders
/// lowest .. truncation.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(std::int64_t lowest, std::vector<std::int64_t> coeffs, std::int64_t truncation)
      : lowest_(lowest), c_(std::move(coeffs)), truncation_(truncation) {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    lowest_ += static_cast<std::int64_t>(lead);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  bool is_zero() const { return c_.empty(); }
  std::optional<std::int64_t> order() const {
    if (c_.empty()) return std::nullopt;
    return lowest_;
  }
  std::int64_t leading() const { return c_.empty() ? 0 : c_.front(); }
  std::int64_t truncation() const { return truncation_; }
  std::int64_t coefficient(std::int64_t n) const {
    std::int64_t i = n - lowest_;
    return (i < 0 || i >= static_cast<std::int64_t>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)];
  }

 private:
  std::int64_t lowest_ = 0;
  std::vector<std::int64_t> c_;
  std::int64_t truncation_ = 0;
};

/// p^m_l(q) = sum_{J nonempty} (-1)^{|J|+1} (q^h(l) + ... + q^(h(l+e^J)-1)),
/// the telescoped form of sum_J (-1)^|J| q^h(l+e^J) / (1-q).
template <class HilbertFn>
QPoly motivic_coeff_with(HilbertFn&& h, const LatticePoint& l) {
  const int r = static_cast<int>(l.size());
  const std::int64_t h0 = h(l);
  QPoly out;
  for (Subset J = 1; J <= full_subset(r); ++J) {
    QPoly term = QPoly::run(h0, h(l + indicator(r, J)));
    out = (popcount(J) % 2 == 1) ? out + term : out - term;
  }
  return out;
}

/// Grid form: throws MarginTooSmall if l + e leaves the grid.
inline QPoly motivic_coeff(const HilbertGrid& h, const LatticePoint& l) {
  return motivic_coeff_with([&](const LatticePoint& p) { return h.at(p); }, l);
}

/// Curve form: exact anywhere in N^r.
inline QPoly motivic_coeff(const Curve& C, const LatticePoint& l) {
  return motivic_coeff_with([&](const LatticePoint& p) { return C.h(p); }, l);
}

inline QPoly univariate_motivic(const Curve& C, std::int64_t d) {
  QPoly out;
  for (const auto& l : compositions(C.r(), static_cast<int>(d))) out = out + motivic_coeff(C, l);
  return out;
}

inline QPoly univariate_motivic(const HilbertGrid& h, std::int64_t d) {
  QPoly out;
  for (const auto& l : compositions(h.rank(), static_cast<int>(d))) out = out + motivic_coeff(h, l);
  return out;
}

/// First d >= 1 with p^m_d nonzero.
inline std::int64_t motivic_multiplicity(const Curve& C) {
  for (std::int64_t d = 1;; ++d)
    if (!univariate_motivic(C, d).is_zero()) return d;
}

/// Coefficient of q^j in p^m_d.
inline std::int64_t motivic_pi(const Curve& C, std::int64_t d, std::int64_t j) {
  return univariate_motivic(C, d).coefficient(j);
}

/// f(omega): t_i -> omega^-1, q -> omega^2, through order D.  Past the
/// conductor w grows by one per coordinate step, so every contribution of
/// order <= D comes from R(0, c + (D - min w) e).
inline LaurentSeries omega_substitution(const Curve& C, std::int64_t D) {
  const int r = C.r();
  const LatticePoint& c = C.conductor();
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  Rectangle core(c);
  for (std::size_t k = 0; k < core.size(); ++k) lo = std::min(lo, C.w(core.point(k)));
  if (D < lo) return LaurentSeries(lo, {}, D);
  std::int64_t reach = D - lo;
  LatticePoint top = c + scaled(ones(r), static_cast<int>(reach));
  double cells = 1;
  for (int v : top) cells *= v + 1;
  if (cells > 5e6) throw TruncationUnsound("omega truncation region too large to certify: " + to_string(top));
  Rectangle region(top);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(D - lo) + 1, 0);
  for (std::size_t k = 0; k < region.size(); ++k) {
    LatticePoint l = region.point(k);
    if (C.w(l) > D) continue;
    QPoly p = motivic_coeff(C, l);
    for (std::int64_t j = 0; j <= p.degree(); ++j) {
      std::int64_t v = p.coefficient(j);
      if (v == 0) continue;
      std::int64_t ord = 2 * j - norm(l);
      if (ord < lo) throw InvariantViolation("omega term below min w at " + to_string(l));
      if (ord > D) continue;
      auto& slot = coeffs[static_cast<std::size_t>(ord - lo)];
      slot = checked::add(slot, v);
    }
  }
  return LaurentSeries(lo, std::move(coeffs), D);
}

struct SubstitutionCheck {
  bool ok = true;
  std::optional<std::string> first_mismatch;
};

/// PE with T_i -> t_i sqrt(q), Q -> sqrt(q), h -> -sqrt(q) against P^m,
/// monomial by monomial over `box`.
inline SubstitutionCheck pe_substitution_check(const std::map<PEKey, std::int64_t>& pe, const Curve& C, const Rectangle& box) {
  std::map<LatticePoint, QPoly> image;
  for (const auto& [key, rank] : pe) {
    if (!box.contains(key.l)) continue;
    std::int64_t twice = norm(key.l) + key.n + key.k;
    if (twice % 2 != 0) return {false, "odd q-exponent at l=" + to_string(key.l)};
    QPoly term = QPoly::monomial(twice / 2, (key.k % 2 == 0) ? rank : -rank);
    image[key.l] = image[key.l] + term;
  }
  for (std::size_t k = 0; k < box.size(); ++k) {
    LatticePoint l = box.point(k);
    QPoly want = motivic_coeff(C, l);
    QPoly got = image.count(l) ? image[l] : QPoly{};
    if (!(want == got))
      return {false, "l=" + to_string(l) + ": substituted " + got.to_string() + " vs motivic " + want.to_string()};
  }
  return {};
}

/// h from motivic coefficients on R(0,M): h(s) = ord p^m_s on the support,
/// and h(l) = h(s(l)) with s(l) the least support element above l.
inline HilbertGrid hilbert_from_motivic(const Grid<QPoly>& coeffs) {
  const Rectangle& box = coeffs.box();
  const int r = box.rank();
  if (box.lo() != zero_point(r)) throw InconsistentInput("motivic grid must start at 0");
  const LatticePoint& M = box.hi();
  if (coeffs.at(M).is_zero()) throw InconsistentInput("top grid point " + to_string(M) + " is not a value; enlarge the grid");
  std::vector<std::int64_t> h(box.size(), 0);
  for (std::size_t k = 0; k < box.size(); ++k) {
    LatticePoint l = box.point(k);
    LatticePoint s = M;
    Rectangle above(l, M);
    for (std::size_t a = 0; a < above.size(); ++a) {
      LatticePoint p = above.point(a);
      if (!coeffs.at(p).is_zero()) s = meet(s, p);
    }
    const QPoly& ps = coeffs.at(s);
    if (ps.is_zero()) throw InconsistentInput("support not closed under min at " + to_string(s));
    h[k] = *ps.order();
  }
  HilbertGrid out(M, std::move(h));
  if (auto bad = hilbert_violation(out)) throw InconsistentInput("motivic coefficients give no Hilbert function: " + *bad);
  return out;
}

/// p^m on R(0, M) as a grid (M = bound - e for a HilbertGrid).
inline Grid<QPoly> motivic_grid(const Curve& C, const LatticePoint& M) {
  Rectangle box(M);
  std::vector<QPoly> v(box.size());
  for (std::size_t k = 0; k < box.size(); ++k) v[k] = motivic_coeff(C, box.point(k));
  return Grid<QPoly>(box, std::move(v));
}

/// Numerator coefficient of P^m * prod(1 - t_i q) at l:
/// sum_J (-q)^|J| p^m_{l - e^J}.
inline QPoly motivic_numerator(const Curve& C, const LatticePoint& l) {
  const int r = C.r();
  QPoly out;
  for (Subset J = 0; J <= full_subset(r); ++J) {
    LatticePoint p = l - indicator(r, J);
    if (!is_natural(p)) continue;
    QPoly term = motivic_coeff(C, p).shifted(popcount(J));
    out = (popcount(J) % 2 == 0) ? out + term : out - term;
  }
  return out;
}

enum class FunctionalCheck { Holds, Fails, NotApplicable };

inline const char* to_string(FunctionalCheck f) {
  switch (f) {
    case FunctionalCheck::Holds: return "holds";
    case FunctionalCheck::Fails: return "fails";
    case FunctionalCheck::NotApplicable: return "not applicable";
  }
  return "?";
}

/// Numerator symmetry q^|l| N_{c-l} = q^delta N_l on R(0,c), with N
/// vanishing on R(0,c+e) outside R(0,c).  Only meaningful for Gorenstein germs.
inline FunctionalCheck gorenstein_functional_check(const Curve& C) {
  if (!C.flags().gorenstein && !C.flags().plane) return FunctionalCheck::NotApplicable;
  const LatticePoint& c = C.conductor();
  const std::int64_t d = C.delta();
  Rectangle outer(c + ones(C.r()));
  for (std::size_t k = 0; k < outer.size(); ++k) {
    LatticePoint l = outer.point(k);
    QPoly N = motivic_numerator(C, l);
    if (!leq(l, c)) {
      if (!N.is_zero()) return FunctionalCheck::Fails;
      continue;
    }
    if (!(motivic_numerator(C, c - l).shifted(norm(l)) == N.shifted(d))) return FunctionalCheck::Fails;
  }
  return FunctionalCheck::Holds;
}

}  // namespace latcurve

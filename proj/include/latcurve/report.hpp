#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "classifier.hpp"
#include "homology.hpp"
#include "json_io.hpp"
#include "motivic.hpp"
#include "spectral.hpp"

// Command bodies of the command-line tool.  Each returns a JSON report and
// has a plain-text rendering; both are deterministic for a fixed input.
namespace latcurve::report {

using detail::point_json;

inline std::string point_text(const LatticePoint& p) { return to_string(p); }

// ------------------------------------------------------------- invariants

inline Json invariants(const Curve& C) {
  HomologyReport rep = lattice_homology(C.weights());
  Json j;
  j["germ"] = C.name();
  j["r"] = C.r();
  j["m"] = point_json(C.multiplicity());
  j["c"] = point_json(C.conductor());
  j["delta"] = C.delta();
  j["min_w"] = min_weight(C.weights());
  j["gorenstein_symmetric"] = C.gorenstein_symmetric();
  j["euler"] = euler_characteristic(rep, C.delta());
  if (C.flags().plane) j["milnor"] = 2 * C.delta() - C.r() + 1;
  j["bound"] = point_json(C.bound());
  return j;
}

inline std::string invariants_text(const Json& j) {
  std::ostringstream os;
  os << "germ      " << j["germ"].get<std::string>() << "\n";
  os << "branches  " << j["r"] << "\n";
  os << "m         " << point_text(j["m"].get<LatticePoint>()) << "\n";
  os << "c         " << point_text(j["c"].get<LatticePoint>()) << "\n";
  os << "delta     " << j["delta"] << "\n";
  os << "min w     " << j["min_w"] << "\n";
  os << "Gorenstein symmetric  " << (j["gorenstein_symmetric"].get<bool>() ? "yes" : "no") << "\n";
  os << "euler     " << j["euler"] << "\n";
  if (j.contains("milnor")) os << "milnor    " << j["milnor"] << "\n";
  return os.str();
}

// ------------------------------------------------------------------ table

/// w on R(0,c).  Text layout: one block per value of coordinates 3..r, rows
/// by the second coordinate descending, columns by the first ascending;
/// semigroup elements carry `*`, the conductor is bracketed.
inline Json table(const Curve& C) {
  const LatticePoint& c = C.conductor();
  Rectangle box(c);
  Json rows = Json::array();
  for (std::size_t k = 0; k < box.size(); ++k) {
    LatticePoint l = box.point(k);
    rows.push_back({{"l", point_json(l)}, {"w", C.w(l)}, {"semigroup", C.in_semigroup(l)}});
  }
  return {{"germ", C.name()}, {"c", point_json(c)}, {"cells", rows}};
}

inline std::string table_text(const Curve& C) {
  const int r = C.r();
  const LatticePoint& c = C.conductor();
  auto cell = [&](const LatticePoint& l) {
    std::string s = std::to_string(C.w(l));
    if (l == c) return "[" + s + "]";
    if (C.in_semigroup(l)) s += "*";
    return s;
  };
  std::size_t width = 1;
  Rectangle box(c);
  for (std::size_t k = 0; k < box.size(); ++k) width = std::max(width, cell(box.point(k)).size());
  const int rows = r >= 2 ? c[1] : 0;
  const std::size_t label = std::to_string(rows).size();
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };

  std::ostringstream os;
  LatticePoint outer_hi(static_cast<std::size_t>(std::max(r - 2, 0)), 0);
  for (int i = 2; i < r; ++i) outer_hi[static_cast<std::size_t>(i - 2)] = c[static_cast<std::size_t>(i)];
  Rectangle outer = r > 2 ? Rectangle(outer_hi) : Rectangle(LatticePoint{0});
  for (std::size_t b = 0; b < outer.size(); ++b) {
    if (r > 2) {
      LatticePoint tail = outer.point(b);
      if (b > 0) os << "\n";
      os << "#";
      for (int i = 2; i < r; ++i) os << " l" << (i + 1) << "=" << tail[static_cast<std::size_t>(i - 2)];
      os << "\n";
    }
    for (int row = rows; row >= 0; --row) {
      if (r >= 2) os << pad(std::to_string(row), label) << " |";
      for (int col = 0; col <= c[0]; ++col) {
        LatticePoint l(static_cast<std::size_t>(r), 0);
        l[0] = col;
        if (r >= 2) l[1] = row;
        if (r > 2) {
          LatticePoint tail = outer.point(b);
          for (int i = 2; i < r; ++i) l[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i - 2)];
        }
        os << " " << pad(cell(l), width);
      }
      os << "\n";
    }
    if (r >= 2) {
      os << std::string(label, ' ') << " +" << std::string(static_cast<std::size_t>(c[0] + 1) * (width + 1), '-') << "\n";
      os << std::string(label, ' ') << "  ";
      for (int col = 0; col <= c[0]; ++col) os << " " << pad(std::to_string(col), width);
      os << "\n";
    }
  }
  return os.str();
}

// --------------------------------------------------------------- homology

inline Json homology(const Curve& C) {
  HomologyReport rep = lattice_homology(C.weights());
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    if (e.rank == 0 && e.torsion.empty()) continue;
    entries.push_back({{"k", e.k}, {"n", e.n}, {"rank", e.rank}, {"torsion", e.torsion}, {"u_rank", e.u_rank}});
  }
  Json totals = Json::array();
  for (int k = 0; k <= C.r(); ++k) totals.push_back(rep.total_rank(k));
  return {{"germ", C.name()},
          {"min_level", rep.min_level},
          {"max_level", rep.max_level},
          {"entries", entries},
          {"total_rank", totals},
          {"euler", euler_sum(rep)}};
}

inline std::string homology_text(const Json& j) {
  std::ostringstream os;
  os << "levels " << j["min_level"] << ".." << j["max_level"] << "\n";
  os << "   k     n  rank  U-rank  torsion\n";
  char buf[128];
  for (const auto& e : j["entries"]) {
    std::string tors;
    for (const auto& t : e["torsion"]) tors += (tors.empty() ? "Z/" : " Z/") + std::to_string(t.get<std::int64_t>());
    std::snprintf(buf, sizeof buf, "%4d %5lld %5lld %7lld  %s", e["k"].get<int>(), static_cast<long long>(e["n"].get<std::int64_t>()),
                  static_cast<long long>(e["rank"].get<std::int64_t>()), static_cast<long long>(e["u_rank"].get<std::int64_t>()),
                  tors.empty() ? "-" : tors.c_str());
    os << buf << "\n";
  }
  os << "total rank by degree";
  for (const auto& t : j["total_rank"]) os << " " << t;
  os << "\neuler " << j["euler"] << "\n";
  return os.str();
}

// --------------------------------------------------------------- spectral

struct SpectralQueries {
  std::vector<std::pair<int, std::int64_t>> minimal;  // (k, n)
  std::vector<std::tuple<LatticePoint, int, std::int64_t>> refined;
  std::vector<std::tuple<std::int64_t, int, std::int64_t>> levels;  // (d, k, n)
};

/// M_{k,n} for k = 1, 2 at the first two levels j = 1, 2.
inline SpectralQueries default_spectral_queries(const Curve& C) {
  SpectralQueries q;
  const std::int64_t mm = norm(C.multiplicity());
  if (mm < 3) return q;
  for (std::int64_t j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k) q.minimal.push_back({k, k - j * (mm - 2)});
  return q;
}

inline Json spectral(const Curve& C, const SpectralQueries& q) {
  const WeightGrid& w = C.weights();
  Json minimal = Json::array();
  for (const auto& [k, n] : q.minimal) {
    MinimalCycleGroup g = minimal_spectral_cycles(w, k, n);
    minimal.push_back({{"k", k},
                       {"n", n},
                       {"j", g.j},
                       {"rank", g.rank},
                       {"maximal_rank", binomial(norm(C.multiplicity()) - 1, k)},
                       {"maximal", has_maximal_rank(g, C.multiplicity())}});
  }
  Json refined = Json::array();
  for (const auto& [l, k, n] : q.refined) {
    if (static_cast<int>(l.size()) != C.r()) throw BadParams("refined entry point " + to_string(l) + " has the wrong rank");
    E1Entry e = e1_refined(w, l, k, n);
    refined.push_back({{"l", point_json(l)}, {"k", k}, {"n", n}, {"rank", e.rank}});
  }
  Json levels = Json::array();
  for (const auto& [d, k, n] : q.levels) {
    E1Entry e = e1_level(w, d, k, n);
    levels.push_back({{"d", d}, {"k", k}, {"n", n}, {"rank", e.rank}});
  }
  return {{"germ", C.name()}, {"m", point_json(C.multiplicity())}, {"minimal", minimal}, {"refined", refined}, {"levels", levels}};
}

inline std::string spectral_text(const Json& j) {
  std::ostringstream os;
  if (j["minimal"].empty() && j["refined"].empty() && j["levels"].empty()) os << "no queries (minimal cycle groups need |m| >= 3)\n";
  for (const auto& g : j["minimal"])
    os << "M_{" << g["k"] << "," << g["n"] << "}  level j=" << g["j"] << "  rank " << g["rank"] << " of at most "
       << g["maximal_rank"] << (g["maximal"].get<bool>() ? "  (maximal)" : "") << "\n";
  for (const auto& e : j["refined"])
    os << "E1 at " << point_text(e["l"].get<LatticePoint>()) << " k=" << e["k"] << " n=" << e["n"] << "  rank " << e["rank"] << "\n";
  for (const auto& e : j["levels"])
    os << "E1 level d=" << e["d"] << " k=" << e["k"] << " n=" << e["n"] << "  rank " << e["rank"] << "\n";
  return os.str();
}

// ---------------------------------------------------------------- motivic

inline Json motivic(const Curve& C, std::int64_t depth) {
  Json p = Json::array();
  for (std::int64_t d = 0; d <= depth; ++d) {
    QPoly pd = univariate_motivic(C, d);
    Json coeffs = Json::array();
    for (std::int64_t i = 0; i <= pd.degree(); ++i) coeffs.push_back(pd.coefficient(i));
    p.push_back({{"d", d}, {"poly", pd.to_string()}, {"q_coefficients", coeffs}});
  }
  LaurentSeries f = omega_substitution(C, depth);
  Json fc = Json::array();
  if (f.order())
    for (std::int64_t n = *f.order(); n <= depth; ++n) fc.push_back({{"order", n}, {"coefficient", f.coefficient(n)}});
  Json j{{"germ", C.name()}, {"depth", depth}, {"p", p}};
  j["omega_order"] = f.order() ? Json(*f.order()) : Json(nullptr);
  j["omega_series"] = fc;
  j["mu"] = motivic_multiplicity(C);
  j["gorenstein_functional_equation"] = to_string(gorenstein_functional_check(C));
  return j;
}

inline std::string motivic_text(const Json& j) {
  std::ostringstream os;
  for (const auto& e : j["p"]) os << "p_" << e["d"] << "(q) = " << e["poly"].get<std::string>() << "\n";
  os << "f(omega) =";
  bool first = true;
  for (const auto& e : j["omega_series"]) {
    std::int64_t c = e["coefficient"].get<std::int64_t>();
    if (c == 0) continue;
    os << (first ? " " : (c < 0 ? " - " : " + "));
    if (first && c < 0) os << "-";
    os << (c < 0 ? -c : c) << " w^" << e["order"];
    first = false;
  }
  if (first) os << " 0";
  os << " + O(w^" << (j["depth"].get<std::int64_t>() + 1) << ")\n";
  os << "mu " << j["mu"] << "\n";
  os << "Gorenstein functional equation: " << j["gorenstein_functional_equation"].get<std::string>() << "\n";
  return os.str();
}

// --------------------------------------------------------------- classify

inline Json route_json(const RouteResult& rr) {
  Json ev = Json::object();
  for (const auto& [k, v] : rr.evidence) ev[k] = v;
  return {{"type", rr.type.to_string()}, {"evidence", ev}};
}

/// The three routes side by side; "agree" is false on any disagreement.
inline Json classify(const Curve& C, const ClassifyOptions& opt = {}) {
  RouteResult w = classify_by_weights(C, opt);
  RouteResult h = classify_by_homology(C, opt);
  RouteResult m = classify_motivic(C);
  const bool agree = w.type == h.type && w.type == m.type;
  const std::int64_t min_w = h.evidence.at("min w");
  Json j{{"germ", C.name()}, {"agree", agree}};
  j["type"] = agree ? Json(w.type.to_string()) : Json(nullptr);
  j["min_w"] = min_w;
  j["delta"] = C.delta();
  j["family"] = agree ? Json(to_string(classify_unimodal_plane(w.type, min_w, C.delta(), C.flags().plane))) : Json(nullptr);
  j["routes"] = {{"weights", route_json(w)}, {"homological", route_json(h)}, {"motivic", route_json(m)}};
  return j;
}

inline std::string classify_text(const Json& j) {
  std::ostringstream os;
  if (j["agree"].get<bool>()) {
    os << "type    " << j["type"].get<std::string>() << " (3/3 routes)\n";
    os << "family  " << j["family"].get<std::string>() << "\n";
  } else {
    os << "type    routes disagree\n";
  }
  os << "min w   " << j["min_w"] << "\n";
  os << "delta   " << j["delta"] << "\n";
  for (const char* name : {"weights", "homological", "motivic"}) {
    const Json& r = j["routes"][name];
    os << name << ": " << r["type"].get<std::string>() << "\n";
    for (const auto& [k, v] : r["evidence"].items()) os << "  " << k << " = " << v << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- catalog

inline Json catalog_list() {
  Json a = Json::array();
  for (const auto& e : catalog::list())
    a.push_back({{"key", e.key}, {"display", e.display}, {"params", e.params}, {"derived", e.derived}});
  return a;
}

inline std::string catalog_list_text(const Json& j) {
  std::ostringstream os;
  for (const auto& e : j) {
    std::string line = e["key"].get<std::string>();
    line.resize(6, ' ');
    std::string disp = e["display"].get<std::string>();
    disp.resize(16, ' ');
    os << line << disp << e["params"].get<std::string>() << (e["derived"].get<bool>() ? "  (from parametrization)" : "") << "\n";
  }
  return os.str();
}

inline Json catalog_entry(const std::string& name, const std::vector<int>& params) {
  catalog::Expected e = catalog::expected(name, params);
  return {{"reference", catalog::reference_name(name, params)},
          {"m", point_json(e.m)},
          {"c", point_json(e.c)},
          {"delta", e.delta},
          {"milnor", e.milnor},
          {"type", e.type.to_string()},
          {"family", to_string(e.family)}};
}

inline std::string catalog_entry_text(const Json& j) {
  std::ostringstream os;
  os << "reference " << j["reference"].get<std::string>() << "\n";
  os << "m         " << point_text(j["m"].get<LatticePoint>()) << "\n";
  os << "c         " << point_text(j["c"].get<LatticePoint>()) << "\n";
  os << "delta     " << j["delta"] << "\n";
  os << "milnor    " << j["milnor"] << "\n";
  os << "type      " << j["type"].get<std::string>() << "\n";
  os << "family    " << j["family"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace latcurve::report

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "descriptor.hpp"
#include "errors.hpp"

namespace latcurve {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void schema_error(const std::string& where, const std::string& what) {
  throw ParseError("descriptor field '" + where + "': " + what);
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

inline std::int64_t as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer");
  return j.get<std::int64_t>();
}

inline LatticePoint as_point(const Json& j, const std::string& where, int rank) {
  if (!j.is_array()) schema_error(where, "expected an array of integers");
  LatticePoint p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::int64_t v = as_int(j[i], where + "[" + std::to_string(i) + "]");
    if (v < INT32_MIN || v > INT32_MAX) schema_error(where, "coordinate out of range");
    p.push_back(static_cast<int>(v));
  }
  if (rank >= 0 && static_cast<int>(p.size()) != rank)
    schema_error(where, "expected " + std::to_string(rank) + " coordinates, got " + std::to_string(p.size()));
  return p;
}

inline Subset as_branches(const Json& j, const std::string& where, int r) {
  if (!j.is_array() || j.empty()) schema_error(where, "expected a nonempty array of branch numbers");
  Subset J = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::int64_t b = as_int(j[i], where);
    if (b < 1 || b > r) schema_error(where, "branch " + std::to_string(b) + " out of range 1.." + std::to_string(r));
    Subset bit = Subset{1} << (b - 1);
    if (J & bit) schema_error(where, "branch " + std::to_string(b) + " repeated");
    J |= bit;
  }
  return J;
}

inline Json point_json(const LatticePoint& p) {
  Json a = Json::array();
  for (int v : p) a.push_back(v);
  return a;
}

}  // namespace detail

/// Descriptor from JSON text.  Syntax errors carry line and column;
/// schema errors name the offending field.
inline GermDescriptor parse_descriptor(const std::string& text) {
  using namespace detail;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string why = e.what();
    if (auto at = why.find("error while parsing"); at != std::string::npos) why = why.substr(at);
    else if (auto colon = why.rfind(": "); colon != std::string::npos) why = why.substr(colon + 2);
    throw ParseError("invalid JSON: " + why, line, col);
  }
  GermDescriptor d;
  if (!j.is_object()) schema_error("", "top level must be an object");
  d.version = static_cast<int>(as_int(field(j, "version", ""), "version"));
  if (d.version != 1) schema_error("version", "unsupported version " + std::to_string(d.version));
  const Json& germ = field(j, "germ", "");
  if (!germ.is_string()) schema_error("germ", "expected a string");
  d.germ = germ.get<std::string>();
  d.r = static_cast<int>(as_int(field(j, "r", ""), "r"));
  if (d.r < 1 || d.r > kMaxBranches) schema_error("r", "branch count out of range");
  if (auto it = j.find("flags"); it != j.end()) {
    if (!it->is_object()) schema_error("flags", "expected an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_boolean()) schema_error("flags." + k, "expected a boolean");
      if (k == "plane") d.flags.plane = v.get<bool>();
      else if (k == "gorenstein") d.flags.gorenstein = v.get<bool>();
      else schema_error("flags." + k, "unknown flag");
    }
  }
  if (auto it = j.find("bound"); it != j.end()) d.bound = as_point(*it, "bound", d.r);

  const Json& src = field(j, "source", "");
  const Json& kind = field(src, "kind", "source");
  if (!kind.is_string()) schema_error("source.kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "poincare") {
    PoincareSource p;
    const Json& list = field(src, "series", "source");
    if (!list.is_array()) schema_error("source.series", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = "source.series[" + std::to_string(i) + "]";
      Subset J = as_branches(field(list[i], "branches", at), at + ".branches", d.r);
      const int rk = popcount(J);
      RationalSeries s{MultiPoly(rk), {}};
      const Json& num = field(list[i], "numerator", at);
      if (!num.is_array()) schema_error(at + ".numerator", "expected an array of [exponent, coefficient] pairs");
      for (const auto& term : num) {
        if (!term.is_array() || term.size() != 2) schema_error(at + ".numerator", "expected [exponent, coefficient]");
        LatticePoint e = as_point(term[0], at + ".numerator", rk);
        if (!is_natural(e)) schema_error(at + ".numerator", "negative exponent");
        s.numerator.add_term(e, as_int(term[1], at + ".numerator"));
      }
      if (auto dit = list[i].find("denominator"); dit != list[i].end()) {
        if (!dit->is_array()) schema_error(at + ".denominator", "expected an array of exponents");
        for (const auto& e : *dit) s.denominator.push_back(as_point(e, at + ".denominator", rk));
      }
      if (!p.series.emplace(J, std::move(s)).second) schema_error(at, "branch set listed twice");
    }
    for (Subset J = 1; J <= full_subset(d.r); ++J)
      if (!p.series.count(J)) schema_error("source.series", "missing the series of a subcurve; every nonempty branch set is required");
    d.source = std::move(p);
  } else if (k == "semigroup") {
    SemigroupSource s;
    s.conductor = as_point(field(src, "conductor", "source"), "source.conductor", d.r);
    const Json& el = field(src, "elements", "source");
    if (!el.is_array()) schema_error("source.elements", "expected an array");
    for (const auto& e : el) s.elements.push_back(as_point(e, "source.elements", d.r));
    d.source = std::move(s);
  } else if (k == "hilbert") {
    HilbertSource h;
    h.bound = as_point(field(src, "bound", "source"), "source.bound", d.r);
    const Json& v = field(src, "values", "source");
    if (!v.is_array()) schema_error("source.values", "expected an array");
    for (const auto& x : v) h.values.push_back(as_int(x, "source.values"));
    d.source = std::move(h);
  } else if (k == "builtin") {
    BuiltinSource b;
    const Json& name = field(src, "name", "source");
    if (!name.is_string()) schema_error("source.name", "expected a string");
    b.name = name.get<std::string>();
    if (auto it = src.find("params"); it != src.end()) b.params = as_point(*it, "source.params", -1);
    d.source = std::move(b);
  } else {
    schema_error("source.kind", "unknown kind '" + k + "'");
  }
  return d;
}

inline Json descriptor_json(const GermDescriptor& d) {
  using detail::point_json;
  Json j;
  j["version"] = d.version;
  j["germ"] = d.germ;
  j["r"] = d.r;
  Json src;
  src["kind"] = source_kind(d.source);
  if (const auto* p = std::get_if<PoincareSource>(&d.source)) {
    Json list = Json::array();
    for (const auto& [J, s] : p->series) {
      Json item;
      Json br = Json::array();
      for (int i = 0; i < d.r; ++i)
        if (J & (Subset{1} << i)) br.push_back(i + 1);
      item["branches"] = br;
      Json num = Json::array();
      for (const auto& [e, c] : s.numerator.terms()) num.push_back(Json::array({point_json(e), c}));
      item["numerator"] = num;
      Json den = Json::array();
      for (const auto& e : s.denominator) den.push_back(point_json(e));
      item["denominator"] = den;
      list.push_back(item);
    }
    src["series"] = list;
  } else if (const auto* s = std::get_if<SemigroupSource>(&d.source)) {
    src["conductor"] = point_json(s->conductor);
    Json el = Json::array();
    for (const auto& e : s->elements) el.push_back(point_json(e));
    src["elements"] = el;
  } else if (const auto* h = std::get_if<HilbertSource>(&d.source)) {
    src["bound"] = point_json(h->bound);
    src["values"] = h->values;
  } else if (const auto* b = std::get_if<BuiltinSource>(&d.source)) {
    src["name"] = b->name;
    src["params"] = point_json(b->params);
  }
  j["source"] = src;
  j["flags"] = {{"plane", d.flags.plane}, {"gorenstein", d.flags.gorenstein}};
  if (d.bound) j["bound"] = point_json(*d.bound);
  return j;
}

}  // namespace latcurve

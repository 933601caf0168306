#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latcurve/latcurve.hpp"

namespace {

using namespace latcurve;

enum Exit { kOk = 0, kOther = 1, kParse = 2, kMargin = 3, kDisagree = 4 };

struct Options {
  std::string germ_file;
  std::string builtin;
  std::string bound;
  std::string format = "table";
  std::int64_t depth = 6;
  bool timing = false;
  bool no_shortcuts = false;
  std::vector<std::string> minimal;
  std::vector<std::string> entries;
  std::vector<std::string> levels;
};

std::vector<int> int_list(const std::string& s, char sep, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ParseError("cannot read " + what + " '" + s + "'");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open germ file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Curve load_curve(const Options& o) {
  if (o.germ_file.empty() == o.builtin.empty()) throw ParseError("give exactly one of --germ FILE and --builtin NAME");
  std::optional<LatticePoint> bound;
  if (!o.bound.empty()) bound = int_list(o.bound, ',', "bound");
  if (!o.builtin.empty()) {
    auto [name, params] = catalog::parse_reference(o.builtin);
    if (!bound) return catalog::load(name, params);
    GermDescriptor d = catalog::get(name, params);
    d.bound = bound;
    return build_curve(d);
  }
  GermDescriptor d;
  try {
    d = parse_descriptor(read_file(o.germ_file));
  } catch (const ParseError& e) {
    if (e.line() > 0) throw ParseError(o.germ_file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what(), e.line(), e.column());
    throw ParseError(o.germ_file + ": " + e.what());
  }
  if (bound) d.bound = bound;
  return build_curve(d);
}

report::SpectralQueries spectral_queries(const Options& o, const Curve& C) {
  if (o.minimal.empty() && o.entries.empty() && o.levels.empty()) return report::default_spectral_queries(C);
  report::SpectralQueries q;
  for (const auto& s : o.minimal) {
    auto v = int_list(s, ',', "--minimal k,n");
    if (v.size() != 2) throw ParseError("--minimal takes k,n");
    q.minimal.push_back({v[0], v[1]});
  }
  for (const auto& s : o.entries) {
    auto first = s.find(':');
    if (first == std::string::npos) throw ParseError("--entry takes l1,..,lr:k:n");
    LatticePoint l = int_list(s.substr(0, first), ',', "--entry point");
    auto kn = int_list(s.substr(first + 1), ':', "--entry k:n");
    if (kn.size() != 2) throw ParseError("--entry takes l1,..,lr:k:n");
    q.refined.push_back({l, kn[0], kn[1]});
  }
  for (const auto& s : o.levels) {
    auto v = int_list(s, ',', "--level d,k,n");
    if (v.size() != 3) throw ParseError("--level takes d,k,n");
    q.levels.push_back({v[0], v[1], v[2]});
  }
  return q;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int run(const std::string& cmd, const Options& o) {
  auto start = std::chrono::steady_clock::now();
  auto finish = [&] {
    if (!o.timing) return;
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "elapsed " << ms << " ms\n";
  };
  if (o.format != "table" && o.format != "json") throw ParseError("--format must be table or json");

  if (cmd == "catalog") {
    if (o.builtin.empty()) {
      Json j = report::catalog_list();
      emit(o, j, report::catalog_list_text(j));
    } else {
      auto [name, params] = catalog::parse_reference(o.builtin);
      if (o.format == "json") {
        std::cout << descriptor_json(catalog::get(name, params)).dump(2) << "\n";
      } else {
        std::cout << report::catalog_entry_text(report::catalog_entry(name, params));
      }
    }
    finish();
    return kOk;
  }

  Curve C = load_curve(o);
  int code = kOk;
  if (cmd == "invariants") {
    Json j = report::invariants(C);
    emit(o, j, report::invariants_text(j));
  } else if (cmd == "table") {
    emit(o, report::table(C), report::table_text(C));
  } else if (cmd == "homology") {
    Json j = report::homology(C);
    emit(o, j, report::homology_text(j));
  } else if (cmd == "spectral") {
    Json j = report::spectral(C, spectral_queries(o, C));
    emit(o, j, report::spectral_text(j));
  } else if (cmd == "motivic") {
    Json j = report::motivic(C, o.depth);
    emit(o, j, report::motivic_text(j));
  } else if (cmd == "classify") {
    Json j = report::classify(C, ClassifyOptions{!o.no_shortcuts});
    emit(o, j, report::classify_text(j));
    if (!j["agree"].get<bool>()) {
      std::cerr << "error: classification routes disagree\n";
      code = kDisagree;
    }
  }
  finish();
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice homology, spectral and motivic invariants of reduced curve germs"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"invariants", "multiplicity, conductor, delta, min w, Gorenstein symmetry, euler characteristic"},
      {"table", "weight function on R(0,c)"},
      {"homology", "lattice homology ranks, torsion and U-ranks"},
      {"spectral", "minimal cycle groups and refined E1 entries"},
      {"motivic", "univariate motivic coefficients and the omega series"},
      {"classify", "Cohen-Macaulay type by three independent routes"},
      {"catalog", "list built-in germs, or show one"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name != "catalog") sub->add_option("--germ", o.germ_file, "germ descriptor (JSON)");
    sub->add_option("--builtin", o.builtin, "built-in germ, e.g. D,5 or T,3,7 or E12");
    if (name != "catalog") sub->add_option("--bound", o.bound, "materialize the grid on R(0,L); L1,..,Lr");
    sub->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_flag("--timing", o.timing, "print elapsed time on stderr");
    if (name == "motivic") sub->add_option("--depth", o.depth, "highest t-degree and omega order");
    if (name == "classify") sub->add_flag("--no-shortcuts", o.no_shortcuts, "evaluate every tameness condition in full");
    if (name == "spectral") {
      sub->add_option("--minimal", o.minimal, "minimal cycle group k,n (repeatable)");
      sub->add_option("--entry", o.entries, "refined entry l1,..,lr:k:n (repeatable)");
      sub->add_option("--level", o.levels, "level-summed entry d,k,n (repeatable)");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const UnknownGerm& e) {
    std::cerr << "error: " << e.what() << "\nhint: `latcurve catalog` lists the built-in germs\n";
    return kParse;
  } catch (const BadParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const MarginTooSmall& e) {
    std::cerr << "error: " << e.what() << "\nhint: pass a larger --bound, or omit it to let the grid grow\n";
    return kMargin;
  } catch (const TruncationUnsound& e) {
    std::cerr << "error: " << e.what() << "\nhint: lower --depth\n";
    return kMargin;
  } catch (const RouteDisagreement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDisagree;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kOther;
  }
}

#pragma once

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wcell/cell_builder.hpp"
#include "wcell/hecke.hpp"
#include "wcell/kl_oracle.hpp"
#include "wcell/rsk.hpp"
#include "wcell/wgraph_checks.hpp"
#include "wcell/wgraph_io.hpp"

namespace wcell::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Partition parse_shape(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("malformed shape '" + text + "': expected weakly decreasing comma-separated parts");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

inline SColoredGraph load_graph(const std::string& path) {
  try {
    return from_json(read_file(path));
  } catch (const FormatError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline void print_report(std::ostream& out, const CheckReport& r) {
  if (r.ok()) {
    out << r.rule << ": pass\n";
    return;
  }
  out << r.rule << ": FAIL (" << r.total << " violations)\n";
  for (const Violation& v : r.violations) {
    out << "  " << v.message << " [vertices";
    for (int x : v.vertices) out << ' ' << x;
    out << "]\n";
  }
}

}  // namespace detail

// Runs one command line; output goes to out, diagnostics to err.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"W-graphs of Kazhdan-Lusztig left cells in type A"};
  app.require_subcommand(1);

  std::string shape, in_path, out_path, dot_path, rules = "all", perm_text;
  bool list = false, count = false, hecke = false;
  int n = 0, bound = 0;

  auto* tab = app.add_subcommand("tableaux", "enumerate standard tableaux of a shape");
  tab->add_option("--shape", shape, "column lengths, e.g. 3,2")->required();
  auto* list_flag = tab->add_flag("--list", list, "print every tableau");
  tab->add_flag("--count", count, "print the number of tableaux")->excludes(list_flag);

  auto* build = app.add_subcommand("build", "construct the cell graph of a shape");
  build->add_option("--shape", shape, "column lengths")->required();
  build->add_option("--out", out_path, "JSON output")->required();
  build->add_option("--dot", dot_path, "optional DOT output");

  auto* verify = app.add_subcommand("verify", "check a graph against the rules");
  verify->add_option("--in", in_path, "JSON graph")->required();
  verify->add_option("--rules", rules, "all, or a list of admissible,compatibility,simplicity,bonding,polygon,ordered");
  verify->add_flag("--hecke", hecke, "also check the Hecke relations");

  auto* oracle = app.add_subcommand("oracle", "compare the builder with Kazhdan-Lusztig polynomials");
  oracle->add_option("--n", n, "rank + 1")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--shape", shape, "restrict to one shape");
  oracle->add_option("--bound", bound, "largest n allowed (default WCELL_ORACLE_MAX or 6)");

  auto* rsk = app.add_subcommand("rsk", "Robinson-Schensted tableaux of a permutation");
  rsk->add_option("--perm", perm_text, "one-line notation, e.g. 3,1,4,2")->required();

  auto* exp = app.add_subcommand("export", "convert a JSON graph to DOT");
  exp->add_option("--in", in_path, "JSON graph")->required();
  exp->add_option("--dot", dot_path, "DOT output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*tab) {
      Partition lambda = detail::parse_shape(shape);
      if (list)
        for (const auto& t : enumerate_std(lambda)) out << t.to_string() << "\n";
      else
        out << count_std(lambda) << "\n";
      return kOk;
    }
    if (*build) {
      Partition lambda = detail::parse_shape(shape);
      SColoredGraph g = build_cell_graph(lambda);
      detail::write_file(out_path, to_json(g));
      if (!dot_path.empty()) detail::write_file(dot_path, to_dot(g));
      out << "vertices " << g.num_vertices() << ", nonzero weights " << g.entries().size() << "\n";
      return kOk;
    }
    if (*verify) {
      SColoredGraph g = detail::load_graph(in_path);
      std::vector<std::string> wanted;
      if (rules == "all") {
        wanted = {"admissible", "compatibility", "simplicity", "bonding", "polygon", "ordered"};
      } else {
        std::stringstream ss(rules);
        for (std::string r; std::getline(ss, r, ',');) wanted.push_back(r);
      }
      std::vector<CheckReport> reports;
      for (const auto& r : wanted) {
        if (r == "admissible") reports.push_back(check_admissible(g));
        else if (r == "compatibility") reports.push_back(check_compatibility(g));
        else if (r == "simplicity") reports.push_back(check_simplicity(g));
        else if (r == "bonding") reports.push_back(check_bonding(g));
        else if (r == "polygon") {
          reports.push_back(check_polygon(g, 2));
          reports.push_back(check_polygon(g, 3));
        } else if (r == "ordered") reports.push_back(check_ordered(g));
        else throw UsageError("unknown rule '" + r + "'");
      }
      if (hecke) reports.push_back(verify_hecke_relations(g));
      bool ok = true;
      for (const auto& r : reports) {
        detail::print_report(out, r);
        ok = ok && r.ok();
      }
      out << "cells: " << cells(g).blocks.size() << "\n";
      return ok ? kOk : kVerifyFailed;
    }
    if (*oracle) {
      int limit = bound > 0 ? bound : oracle_bound();
      if (n > limit) throw UsageError("n=" + std::to_string(n) + " exceeds the oracle bound " + std::to_string(limit));
      std::vector<Partition> shapes;
      if (shape.empty()) shapes = partitions_of(n);
      else shapes.push_back(detail::parse_shape(shape));
      for (const auto& lambda : shapes)
        if (lambda.size() != n) throw UsageError("shape " + lambda.to_string() + " is not a partition of " + std::to_string(n));
      KLTable kl = kl_polynomials(n, limit);
      bool ok = true;
      for (const auto& lambda : shapes) {
        SColoredGraph built = build_cell_graph(lambda);
        SColoredGraph ref = kl_left_cell_graph(kl, lambda);
        std::vector<int> id(built.num_vertices());
        std::iota(id.begin(), id.end(), 0);
        bool same = graphs_equal_under(built, ref, id);
        ok = ok && same;
        out << lambda.to_string() << ": " << (same ? "equal" : "DIFFERENT") << " (" << built.num_vertices()
            << " vertices)\n";
      }
      return ok ? kOk : kVerifyFailed;
    }
    if (*rsk) {
      Permutation w;
      try {
        w = Permutation::parse(perm_text);
      } catch (const std::exception&) {
        throw UsageError("malformed permutation '" + perm_text + "'");
      }
      RSPair pq = wcell::rs(w);
      out << "P " << pq.p.to_string() << "\nQ " << pq.q.to_string() << "\n";
      return kOk;
    }
    if (*exp) {
      detail::write_file(dot_path, to_dot(detail::load_graph(in_path)));
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace wcell::cli

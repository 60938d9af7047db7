// Command-line front end: scripted sessions, an interactive loop, the
// postulate suites, and the truth-table dump.

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "pacbr/pacbr.hpp"

namespace {

int run_suites(const std::vector<std::string>& names, pacbr::GenConfig cfg,
               const std::string& report_path) {
  std::set<std::string> which;
  for (const auto& n : names)
    if (n != "all") which.insert(n);
  try {
    cfg.validate();
    const pacbr::PostulateReport rep =
        pacbr::run_suite(pacbr::Semantics(), cfg, which);
    std::cout << rep.summary();
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) {
        std::cerr << "error: cannot write '" << report_path << "'\n";
        return 1;
      }
      out << rep.to_text();
    }
    std::cout << "suite: result=" << (rep.ok() ? "pass" : "fail") << "\n";
    return rep.ok() ? 0 : 2;
  } catch (const pacbr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pacbr: source-sensitive belief change over the three-valued "
               "paraconsistent logic PAC"};
  app.require_subcommand(1);

  std::string script_path;
  bool keep_going = false;
  std::size_t atom_cap = 12;
  auto* run = app.add_subcommand("run", "execute a session script");
  run->add_option("script", script_path, "script file")->required();
  run->add_flag("--keep-going", keep_going,
                "report command errors but keep executing");
  run->add_option("--atom-cap", atom_cap,
                  "enumeration bound on signature size (default 12)");

  auto* repl = app.add_subcommand("repl", "interactive session");
  repl->add_option("--atom-cap", atom_cap,
                   "enumeration bound on signature size (default 12)");

  std::vector<std::string> suite_names;
  pacbr::GenConfig cfg;
  cfg.cases = 200;
  std::string report_path;
  auto* suite = app.add_subcommand("suite", "run postulate suites");
  suite->add_option("names", suite_names,
                    "suites to run (default: all): hilbert deduction cn "
                    "epistemic reliability expansion contraction revision guard");
  suite->add_option("--seed", cfg.seed, "generator seed");
  suite->add_option("--cases", cfg.cases, "cases per suite");
  suite->add_option("--atoms", cfg.atoms, "signature size (1..4)");
  suite->add_option("--depth", cfg.max_depth, "formula depth (1..5)");
  suite->add_option("--base-size", cfg.base_size, "max base entries (0..6)");
  suite->add_option("--ceiling", cfg.ceiling, "rank ceiling T (1..5)");
  suite->add_option("--report", report_path, "write key=value report here");

  auto* tables = app.add_subcommand("tables", "print the connective matrices");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    pacbr::Session::Options opts;
    opts.stop_on_error = !keep_going;
    pacbr::Session session(std::cout, opts,
                           pacbr::Semantics(pacbr::Matrices::pac(), atom_cap));
    return session.run_file(script_path);
  }
  if (repl->parsed()) {
    pacbr::Session session(std::cout, pacbr::Session::Options{},
                           pacbr::Semantics(pacbr::Matrices::pac(), atom_cap));
    return session.repl(std::cin);
  }
  if (suite->parsed()) return run_suites(suite_names, cfg, report_path);
  if (tables->parsed()) {
    std::cout << pacbr::truth_table_dump();
    return 0;
  }
  return 0;
}

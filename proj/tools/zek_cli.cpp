// zek: command-line front end for the indexed-link calculus.
//
// Exit codes: 0 success, 1 validation failure (an axiom or domain side
// condition was violated; the message names it), 2 parse/usage error.

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zek/enumerate.hpp"
#include "zek/errors.hpp"
#include "zek/json_io.hpp"
#include "zek/knot.hpp"
#include "zek/rhd.hpp"
#include "zek/term.hpp"

namespace {

/// Inline s-expression, or the contents of a file when the argument names
/// one ("-" reads stdin).
std::string resolve_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw zek::ParseError("cannot read file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw zek::ParseError("cannot write file '" + out_path + "'", 0);
  out << text;
}

struct EnumOptions {
  int depth = 2;
  long long max_pq = 3;
  int max_branch = 4;

  zek::EnumCaps caps() const {
    zek::EnumCaps c;
    c.max_p = max_pq;
    c.max_q = max_pq;
    c.max_branch = max_branch;
    return c;
  }
};

void print_lints(const zek::LinkTerm& t) {
  for (const std::string& l : t.lints()) std::cerr << "lint: " << l << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"symbolic calculus for indexed links of nonsingular Morse-Smale flows"};
  app.require_subcommand(1);

  std::string expr, expr2, out_path;
  bool as_json = false;
  EnumOptions eo;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "emit JSON"); };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write output to FILE instead of stdout");
  };

  auto* canon = app.add_subcommand("canon", "canonical form of a knot expression");
  canon->add_option("expr", expr, "knot s-expression or file")->required();

  auto* genus_cmd = app.add_subcommand("genus", "genus of a knot expression");
  genus_cmd->add_option("expr", expr, "knot s-expression or file")->required();

  auto* eq = app.add_subcommand("eq", "knot-class equality of two expressions");
  eq->add_option("a", expr, "first knot")->required();
  eq->add_option("b", expr2, "second knot")->required();

  auto* validate_cmd = app.add_subcommand("validate", "check a link derivation term");
  validate_cmd->add_option("term", expr, "link term s-expression or file")->required();

  auto* components_cmd = app.add_subcommand("components", "indexed link of a derivation term");
  components_cmd->add_option("term", expr, "link term s-expression or file")->required();
  add_json(components_cmd);
  add_out(components_cmd);

  auto* derive = app.add_subcommand("derive", "membership certificate for a derivation term");
  derive->add_option("term", expr, "link term s-expression or file")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate the generated class");
  enumerate_cmd->add_option("--depth", eo.depth, "derivation depth bound");
  enumerate_cmd->add_option("--max-pq", eo.max_pq, "cable parameter cap for moves V/VI");
  enumerate_cmd->add_option("--max-branch", eo.max_branch,
                            "applications per (term, move kind) per level");
  add_json(enumerate_cmd);
  add_out(enumerate_cmd);

  auto* invariants = app.add_subcommand("invariants", "check class invariants over an enumeration");
  invariants->add_option("--depth", eo.depth, "derivation depth bound");
  invariants->add_option("--max-pq", eo.max_pq, "cable parameter cap for moves V/VI");
  invariants->add_option("--max-branch", eo.max_branch,
                         "applications per (term, move kind) per level");

  auto* rhd_build = app.add_subcommand("rhd-build", "round-handle plan from a stratified set");
  rhd_build->add_option("file", expr, "stratified set JSON file ('-' for stdin)")->required();
  add_json(rhd_build);
  add_out(rhd_build);

  auto* rhd_cores = app.add_subcommand("rhd-cores", "indexed core link of a round-handle plan");
  rhd_cores->add_option("file", expr, "stratified set JSON file ('-' for stdin)")->required();
  add_json(rhd_cores);
  add_out(rhd_cores);

  auto* seifert = app.add_subcommand("example-seifert",
                                     "stratified set with (2,2n+1) torus-knot strata");
  long long seifert_n = 1;
  seifert->add_option("n", seifert_n, "number of half-twists parameter (n >= 1)")->required();
  add_out(seifert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are parse errors
  }

  if (canon->parsed()) {
    std::cout << zek::print_knot(zek::parse_knot(resolve_input(expr))) << '\n';
  } else if (genus_cmd->parsed()) {
    std::cout << zek::genus(zek::parse_knot(resolve_input(expr))) << '\n';
  } else if (eq->parsed()) {
    bool same = zek::equals(zek::parse_knot(resolve_input(expr)),
                            zek::parse_knot(resolve_input(expr2)));
    std::cout << (same ? "true" : "false") << '\n';
  } else if (validate_cmd->parsed()) {
    zek::LinkTerm t = zek::parse_term(resolve_input(expr));
    print_lints(t);
    std::cout << "valid\n" << zek::to_string(t.link());
  } else if (components_cmd->parsed()) {
    zek::LinkTerm t = zek::parse_term(resolve_input(expr));
    write_output(out_path, as_json ? zek::link_to_json(t.link()) + "\n" : zek::to_string(t.link()));
  } else if (derive->parsed()) {
    std::cout << zek::parse_term(resolve_input(expr)).derivation() << '\n';
  } else if (enumerate_cmd->parsed()) {
    zek::EnumStats stats;
    std::ostringstream os;
    if (as_json) {
      os << zek::enumeration_to_json(eo.depth, eo.caps(), &stats) << '\n';
    } else {
      for (const std::string& line : zek::enumerate_snapshot(eo.depth, eo.caps(), &stats))
        os << line << '\n';
    }
    write_output(out_path, os.str());
    std::cerr << "emitted " << stats.emitted << " links, " << stats.applications
              << " applications" << (stats.truncated ? ", truncated by branch cap" : "") << '\n';
  } else if (invariants->parsed()) {
    std::size_t checked = 0, failures = 0;
    zek::enumerate_links(eo.depth, eo.caps(), [&](const zek::LinkTerm& t, const zek::Link& l) {
      zek::InvariantReport r = zek::check_invariants(l);
      ++checked;
      if (!r.pass()) {
        ++failures;
        std::cout << "FAIL " << l.key() << "  term " << t.to_sexpr() << '\n';
      }
    });
    std::cout << "checked " << checked << " links (depth " << eo.depth << ", max p,q "
              << eo.max_pq << ", branch " << eo.max_branch << ")\n";
    if (failures == 0) {
      std::cout << "all terms pass: unknots >= 2; index 0 and 2 present\n";
    } else {
      std::cout << failures << " links violate the class invariants\n";
      return 1;
    }
  } else if (rhd_build->parsed()) {
    zek::StratifiedSet s = zek::stratified_set_from_json(read_file(expr));
    zek::RHDPlan plan = zek::build_rhd(s);
    write_output(out_path, as_json ? zek::rhd_plan_to_json(plan) + "\n" : zek::to_string(plan));
  } else if (rhd_cores->parsed()) {
    zek::StratifiedSet s = zek::stratified_set_from_json(read_file(expr));
    zek::Link cores = zek::cores_link(zek::build_rhd(s));
    write_output(out_path, as_json ? zek::link_to_json(cores) + "\n" : zek::to_string(cores));
  } else if (seifert->parsed()) {
    write_output(out_path, zek::stratified_set_to_json(zek::seifert_example(seifert_n)) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const zek::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const zek::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

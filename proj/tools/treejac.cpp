#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "treejac/commands.hpp"
#include "treejac/error.hpp"

namespace {

using namespace treejac;
using namespace treejac::cli;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int finish(const CommandOutput& out) {
  std::cout << out.out;
  std::cerr << out.err;
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-1 torsion-free sheaf degree combinatorics on tree-like curves"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string curve_path;
  std::string format = "json";
  std::string ordering;
  bool dot = false;
  app.add_option("--curve", curve_path, "Curve description file (JSON)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--ordering", ordering, "Admissible ordering as a comma-separated id list");
  app.add_flag("--dot", dot, "Also emit the dual tree in DOT");

  std::int64_t d = 0;
  auto* validate = app.add_subcommand("validate", "Check a curve description");
  auto* order = app.add_subcommand("order", "Print the admissible ordering and its attachments");
  auto* analyze = app.add_subcommand("analyze", "Walls, stable multidegree or graded degrees at degree d");
  analyze->add_option("--d", d, "Total degree")->required();

  std::string degrees, nonlf;
  bool verbose = false;
  auto* check = app.add_subcommand("check", "Stability verdict for a multidegree or torsion-free profile");
  check->add_option("--d", d, "Total degree")->required();
  check->add_option("--degrees", degrees, "Per-component degrees, e.g. C1=0,C2=1")->required();
  check->add_option("--nonlf", nonlf, "Nodes where the sheaf is not locally free");
  check->add_flag("--verbose", verbose, "Print the per-subcurve bound table");

  std::string kind = "stable";
  EnumerateOptions enum_opts;
  auto* enumerate = app.add_subcommand("enumerate", "Brute-force list of (semi)stable profiles");
  enumerate->add_option("--d", d, "Total degree")->required();
  enumerate->add_option("--kind", kind, "stable or semistable")->check(CLI::IsMember({"stable", "semistable"}));
  enumerate->add_option("--window", enum_opts.window, "Search window around the bound box");
  enumerate->add_option("--cap", enum_opts.cap, "Maximum number of components");

  std::string pol, d_range = "0";
  ChambersOptions chamber_opts;
  auto* chambers = app.add_subcommand("chambers", "Sweep polarizations and degrees");
  chambers->add_option("--pol", pol, "Polarization ranges, e.g. C1=1..3,C2=2");
  chambers->add_option("--d-range", d_range, "Degree range, e.g. 0..5");
  chambers->add_flag("--csv", chamber_opts.csv, "CSV output");
  chambers->add_option("--max-points", chamber_opts.max_points, "Lattice point cap");

  int which = 1;
  auto* examples = app.add_subcommand("examples", "Reproduce the worked examples");
  examples->add_option("--which", which, "1, 2 or 3")->check(CLI::Range(1, 3));

  CLI11_PARSE(app, argc, argv);

  try {
    CommonOptions common;
    common.format = format == "table" ? OutputFormat::Table : OutputFormat::Json;
    common.dot = dot;
    if (!ordering.empty()) common.ordering = split_list(ordering);

    if (examples->parsed()) return finish(cmd_examples(which, common));

    if (curve_path.empty()) throw Error(ErrorKind::InvalidArgument, "--curve is required");
    const std::string text = read_file(curve_path);

    if (validate->parsed()) return finish(cmd_validate(text, common));
    if (order->parsed()) return finish(cmd_order(text, common));
    if (analyze->parsed()) return finish(cmd_analyze(text, d, common));
    if (check->parsed()) {
      CheckOptions opts;
      opts.degrees = parse_assignments(degrees);
      if (!nonlf.empty()) opts.non_locally_free = split_list(nonlf);
      opts.verbose = verbose;
      return finish(cmd_check(text, d, opts, common));
    }
    if (enumerate->parsed()) {
      enum_opts.kind = kind == "semistable" ? ProfileKind::Semistable : ProfileKind::Stable;
      return finish(cmd_enumerate(text, d, enum_opts, common));
    }
    if (chambers->parsed()) {
      if (!pol.empty()) chamber_opts.pol_ranges = parse_range_assignments(pol);
      chamber_opts.d_range = parse_range(d_range);
      return finish(cmd_chambers(text, chamber_opts, common));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 1;
}

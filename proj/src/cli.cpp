#include "spexcess/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "spexcess/analysis.hpp"
#include "spexcess/classify.hpp"
#include "spexcess/errors.hpp"
#include "spexcess/fixtures.hpp"
#include "spexcess/report.hpp"
#include "spexcess/theorems.hpp"

namespace spexcess::cli {

namespace {

struct InputOptions {
  std::string path;
  std::string format;
  AnalysisOptions analysis;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("path", in.path, "graph file")->required();
  cmd->add_option("--format", in.format, "edgelist or graph6 (default: by extension)")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  cmd->add_option("--tol", in.analysis.spectral.tol, "Jacobi off-diagonal tolerance")
      ->envname("SPEXCESS_TOL");
  cmd->add_option("--group-tol", in.analysis.spectral.group_tol, "eigenvalue grouping tolerance")
      ->envname("SPEXCESS_TOL_GROUP");
  cmd->add_option("--presence-tol", in.analysis.presence_tol,
                  "local multiplicities at or below this count as zero")
      ->envname("SPEXCESS_TOL_PRESENCE");
  cmd->add_option("--eq-tol", in.analysis.eq_tol, "relative equality tolerance")
      ->envname("SPEXCESS_TOL_EQ");
  cmd->add_option("--max-sweeps", in.analysis.spectral.max_sweeps, "Jacobi sweep cap");
}

Analysis load(const InputOptions& in) {
  GraphFormat format = GraphFormat::edgelist;
  if (in.format == "graph6" ||
      (in.format.empty() && std::filesystem::path(in.path).extension() == ".g6"))
    format = GraphFormat::graph6;
  std::ifstream file(in.path, std::ios::binary);
  if (!file) throw InputError("cannot open " + in.path);
  return analyze_graph(load_graph(file, format), in.analysis);
}

bool healthy(const TheoremReport& r, double eq_tol) {
  return r.sound(eq_tol) && r.consistent() && r.oracle_agrees.value_or(true);
}

int analyze(const InputOptions& in, bool pretty, bool witnesses, std::ostream& out,
            std::ostream& err) {
  const Analysis a = load(in);
  const Classification c = classify(a);
  const auto reports = run_all_checks(a, c);
  if (pretty)
    out << pretty_summary(a, c, reports);
  else
    out << analysis_report(a, c, reports, witnesses).dump(2) << "\n";
  for (const auto& r : reports) {
    if (!healthy(r, a.options.eq_tol)) {
      err << "invariant violated: " << to_string(r.id) << " " << r.verdict << "\n";
      return kInvariantViolated;
    }
  }
  return kOk;
}

struct CheckParams {
  std::string theorem;
  std::optional<int> vertex;
  std::optional<int> j;
  std::optional<int> m;
  std::vector<double> coeffs;
};

int check(const InputOptions& in, const CheckParams& p, std::ostream& out, std::ostream& err) {
  const auto id = parse_theorem_id(p.theorem);
  if (!id) throw MissingParamError("unknown theorem " + p.theorem);
  auto need = [&](const std::optional<int>& value, const char* flag) {
    if (!value)
      throw MissingParamError(std::string(flag) + " is required for " + p.theorem);
    return *value;
  };
  // Parameter errors surface before the (possibly expensive) pipeline runs.
  switch (*id) {
    case TheoremId::P31: need(p.vertex, "--vertex"); need(p.j, "--j"); break;
    case TheoremId::T32: need(p.vertex, "--vertex"); break;
    case TheoremId::T34: need(p.j, "--j"); break;
    case TheoremId::P35:
    case TheoremId::P36: need(p.m, "--m"); break;
    default: break;
  }

  const Analysis a = load(in);
  const Classification c = classify(a);
  TheoremReport r;
  switch (*id) {
    case TheoremId::P31: {
      const int u = *p.vertex;
      if (u < 0 || u >= a.order()) throw HypothesisError("vertex out of range");
      const int j = *p.j;
      if (j < 0 || j > a.local_spectra[u].du) throw DegreeError("j outside 0..d_u");
      const Poly poly = p.coeffs.empty() ? a.local[u].sums[j] : Poly(p.coeffs);
      r = check_local_bound(a, u, j, poly);
      break;
    }
    case TheoremId::T32: r = check_local_spet(a, c, *p.vertex); break;
    case TheoremId::T33: r = check_lee_weng(a); break;
    case TheoremId::T34: r = check_harmonic_bound(a, *p.j); break;
    case TheoremId::P35:
    case TheoremId::P36: r = check_partial_drg(a, c, *p.m, *id); break;
    case TheoremId::T37: r = check_chain(a); break;
    case TheoremId::T38: r = check_distance_polynomial_sufficient(a, c); break;
  }
  out << to_json(r, true).dump(2) << "\n";
  if (!healthy(r, a.options.eq_tol)) {
    err << "invariant violated: " << r.verdict << "\n";
    return kInvariantViolated;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral excess analysis of connected graphs", "spexcess"};
  app.require_subcommand(1);

  InputOptions analyze_in;
  bool pretty = false;
  bool witnesses = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "run the full pipeline, JSON to stdout");
  add_input_options(analyze_cmd, analyze_in);
  analyze_cmd->add_flag("--pretty", pretty, "human-readable summary instead of JSON");
  analyze_cmd->add_flag("--witnesses", witnesses, "include witness matrices");

  InputOptions check_in;
  CheckParams params;
  auto* check_cmd = app.add_subcommand("check", "evaluate a single theorem");
  add_input_options(check_cmd, check_in);
  check_cmd->add_option("--theorem", params.theorem, "P31 T32 T33 T34 P35 P36 T37 T38")
      ->required();
  check_cmd->add_option("--vertex", params.vertex, "vertex id (P31, T32)");
  check_cmd->add_option("--j", params.j, "index j (P31, T34)");
  check_cmd->add_option("--m", params.m, "index m (P35, P36)");
  check_cmd->add_option("--coeffs", params.coeffs, "P31 polynomial r, constant term first")
      ->delimiter(',');

  std::string fixtures_dir;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "write the bundled fixture graphs");
  fixtures_cmd->add_option("--out", fixtures_dir, "target directory")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(analyze_in, pretty, witnesses, out, err);
    if (check_cmd->parsed()) return check(check_in, params, out, err);
    for (const auto& path : fixtures::write_bundled(fixtures_dir))
      out << path.string() << "\n";
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalError;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kInvariantViolated;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace spexcess::cli

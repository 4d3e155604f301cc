// Command-line front end for the convex-position laboratory. Subcommands
// select the experiment; all numeric flags are shared and may also come
// from a flat key=value file via --config (command line wins).
//
// Exit codes: 0 = ran and every self-declared tolerance check passed,
// 2 = a tolerance check failed, 1 = usage or configuration error.

#include "sylvester/experiments.hpp"
#include "sylvester/report_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <exception>
#include <sstream>
#include <string>

namespace {

using namespace sylvester;
using ordered_json = nlohmann::ordered_json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json theory_value_json(const TheoryValue& tv) {
  ordered_json j;
  j["exact"] = tv.exact ? ordered_json(to_string(*tv.exact)) : ordered_json(nullptr);
  j["approx"] = tv.approx;
  j["description"] = tv.description;
  return j;
}

std::string render_theory(int d, int n, ReportFormat format) {
  const TheoryValue cpp = convex_position_probability(d);
  const TheoryValue bvp = bridge_vertex_probability(d);
  const TheoryValue king = kingman_ball_probability(d);
  const double asym = gaussian_nonconvex_asymptotic(d);
  TheoryValue evw;
  const bool have_n = n >= 1;
  if (have_n) evw = expected_vertices_walk(n, d);

  switch (format) {
    case ReportFormat::Json: {
      ordered_json j;
      j["schema"] = kSchemaVersion;
      j["mode"] = "theory";
      j["config"] = ordered_json{{"d", d}};
      if (have_n) j["config"]["n"] = n;
      ordered_json vals;
      vals["convex_position_probability"] = theory_value_json(cpp);
      vals["bridge_vertex_probability"] = theory_value_json(bvp);
      if (have_n) vals["expected_vertices_walk"] = theory_value_json(evw);
      vals["kingman_ball_probability"] = theory_value_json(king);
      vals["gaussian_nonconvex_asymptotic"] = asym;
      ordered_json consts;
      for (const auto& [name, tv] : classical_constants()) consts[name] = theory_value_json(tv);
      vals["classical_constants"] = std::move(consts);
      j["values"] = std::move(vals);
      return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream os;
      os << "name,d,n,exact,approx\n";
      auto row = [&](const std::string& name, const TheoryValue& tv, int nn) {
        os << name << ',' << d << ',' << nn << ',' << (tv.exact ? to_string(*tv.exact) : "")
           << ',' << fmt_double(tv.approx) << '\n';
      };
      row("convex_position_probability", cpp, 0);
      row("bridge_vertex_probability", bvp, 0);
      if (have_n) row("expected_vertices_walk", evw, n);
      row("kingman_ball_probability", king, 0);
      os << "gaussian_nonconvex_asymptotic," << d << ",0,," << fmt_double(asym) << '\n';
      for (const auto& [name, tv] : classical_constants()) row(name, tv, 0);
      return os.str();
    }
    case ReportFormat::Text: {
      std::ostringstream os;
      auto line = [&](const std::string& name, const TheoryValue& tv) {
        os << "  " << name << " = " << fmt_double(tv.approx);
        if (tv.exact) os << "  (= " << to_string(*tv.exact) << ")";
        os << "\n      " << tv.description << "\n";
      };
      os << "closed forms at d = " << d << (have_n ? " , n = " + std::to_string(n) : "") << "\n";
      line("P(convex position)", cpp);
      line("P(bridge point is vertex)", bvp);
      if (have_n) line("E[walk hull vertices]", evw);
      line("P(convex | iid uniform ball)", king);
      os << "  P(not convex) Gaussian large-d form = " << fmt_double(asym) << "\n";
      os << "classical iid constants:\n";
      for (const auto& [name, tv] : classical_constants()) line(name, tv);
      return os.str();
    }
  }
  throw std::invalid_argument("render_theory: unknown format");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex position of random walks and bridges: exact enumeration,\n"
               "Monte Carlo estimation, and closed-form evaluation."};
  app.fallthrough();
  app.set_config("--config", "", "flat key=value config file; command line overrides it");

  int d = 2;
  int n = 0;
  std::string law = "gaussian";
  uint64_t samples = 1'000'000;
  uint64_t seed = 0;
  int workers = 0;
  long long coord_bound = 10;
  std::string format = "text";
  std::string out_path;

  app.add_option("--d", d, "ambient dimension");
  app.add_option("--n", n, "walk length for the vertices experiment");
  app.add_option("--law", law, "increment law: gaussian|cube|sphere|cauchy");
  app.add_option("--samples", samples,
                 "Monte Carlo samples (oracle: number of enumerated input sets, default 20)");
  app.add_option("--seed", seed, "base seed; every estimate is a pure function of it");
  app.add_option("--workers", workers, "0 = hardware default, 1 = serial reference path");
  app.add_option("--coord-bound", coord_bound, "oracle integer coordinate bound");
  app.add_option("--format", format, "output format: json|csv|text");
  app.add_option("--out", out_path, "output path; '-' or empty = stdout");

  auto* cmd_walk = app.add_subcommand("walk", "convexity of d+2 random walk points");
  auto* cmd_bridge = app.add_subcommand("bridge", "convexity of d+2 exchangeable bridge points");
  auto* cmd_oracle =
      app.add_subcommand("oracle", "exact permutation enumeration over integer increments");
  auto* cmd_vertices = app.add_subcommand("vertices", "hull vertex count of S_0..S_n");
  auto* cmd_baseline =
      app.add_subcommand("baseline", "iid comparison points with classical constants");
  std::string target;
  cmd_baseline->add_option("target", target, "triangle|disk|gaussian_d2|gaussian_d3")->required();
  auto* cmd_theory = app.add_subcommand("theory", "closed forms for given d (and n)");
  auto* cmd_identities = app.add_subcommand("identities", "exact identity suite");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, returns 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const ReportFormat fmt = parse_format(format);

    if (cmd_theory->parsed()) {
      write_text(render_theory(d, n, fmt), out_path);
      return 0;
    }
    if (cmd_identities->parsed()) {
      const IdentitySuiteResult res = run_identity_suite();
      write_text(render_identity_suite(res, fmt), out_path);
      return res.all_ok ? 0 : 2;
    }

    ExperimentConfig config;
    config.d = d;
    config.n = n;
    config.law = parse_law(law);
    config.samples = samples;
    config.seed = seed;
    config.workers = workers;
    config.coord_bound = coord_bound;

    if (cmd_walk->parsed()) {
      config.mode = ExperimentMode::WalkConvexity;
    } else if (cmd_bridge->parsed()) {
      config.mode = ExperimentMode::BridgeConvexity;
    } else if (cmd_oracle->parsed()) {
      config.mode = ExperimentMode::PermutationOracle;
      if (app.count("--samples") == 0) config.samples = 20;
    } else if (cmd_vertices->parsed()) {
      config.mode = ExperimentMode::VertexCount;
    } else if (cmd_baseline->parsed()) {
      config.mode = ExperimentMode::Baseline;
      config.baseline_target = target;
    } else {
      std::fputs(app.help().c_str(), stderr);
      return 1;
    }

    config.validate();
    const ExperimentReport report = run_experiment(config);
    write_text(render_report(report, fmt), out_path);
    return report.tolerance_ok ? 0 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

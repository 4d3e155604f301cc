#include "sylvester/report_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sylvester {

namespace {

using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// CSV/text label for the sampling law column: the increment law where one
// applies, the named target for baselines, "exact" for the oracle.
std::string law_label(const ExperimentConfig& c) {
  switch (c.mode) {
    case ExperimentMode::Baseline: return c.baseline_target;
    case ExperimentMode::PermutationOracle: return "exact";
    default: return law_name(c.law);
  }
}

json theory_json(const TheoryValue& tv) {
  json t;
  t["exact"] = tv.exact ? json(to_string(*tv.exact)) : json(nullptr);
  t["approx"] = tv.approx;
  t["description"] = tv.description;
  return t;
}

json report_json(const ExperimentReport& r) {
  const ExperimentConfig& c = r.config;
  json j;
  j["schema"] = kSchemaVersion;
  j["mode"] = mode_name(c.mode);

  json cfg;
  cfg["d"] = c.d;
  switch (c.mode) {
    case ExperimentMode::VertexCount:
      cfg["n"] = c.n;
      cfg["law"] = law_name(c.law);
      cfg["law_param"] = c.law_param;
      break;
    case ExperimentMode::WalkConvexity:
    case ExperimentMode::BridgeConvexity:
      cfg["law"] = law_name(c.law);
      cfg["law_param"] = c.law_param;
      break;
    case ExperimentMode::PermutationOracle:
      cfg["coord_bound"] = c.coord_bound;
      break;
    case ExperimentMode::Baseline:
      cfg["target"] = c.baseline_target;
      break;
  }
  cfg["samples"] = c.samples;
  cfg["seed"] = c.seed;
  j["config"] = std::move(cfg);

  j["estimate"] = r.estimate;
  j["theory"] = theory_json(r.theory);
  j["ci99"] = json{{"low", r.ci_low}, {"high", r.ci_high}};
  j["z"] = r.z;
  j["tolerance"] = json{{"band", r.tolerance_band}, {"ok", r.tolerance_ok}};
  j["trials"] = json{{"total", r.trials_total},
                     {"classified", r.trials_classified},
                     {"degenerate", r.trials_degenerate}};
  j["rng"] = json{{"algorithm", "philox4x32-10"},
                  {"seed", c.seed},
                  {"fingerprint", r.rng_fingerprint}};

  if (!r.certificates.empty()) {
    json sets = json::array();
    for (const auto& cert : r.certificates) {
      json s;
      s["stream"] = cert.stream;
      s["rejected_sets"] = cert.rejected_sets;
      s["increments"] = cert.increments;
      s["convex"] = cert.convex_count.str();
      s["total"] = cert.total.str();
      s["probability"] = to_string(cert.probability);
      s["matches_theory"] = cert.matches_theory;
      sets.push_back(std::move(s));
    }
    j["oracle"] = json{{"sets", std::move(sets)}};
  }

  // Execution details only; excluded from the determinism contract.
  j["runtime"] = json{{"workers", c.workers}, {"wall_ms", r.wall_ms}};
  return j;
}

std::string report_csv(const ExperimentReport& r) {
  const ExperimentConfig& c = r.config;
  std::ostringstream os;
  os << "mode,d,n,law,samples,seed,estimate,theory,ci_low,ci_high,z,degenerate,wall_ms\n";
  os << mode_name(c.mode) << ',' << c.d << ',' << c.n << ',' << law_label(c) << ',' << c.samples
     << ',' << c.seed << ',' << fmt_double(r.estimate) << ',' << fmt_double(r.theory.approx) << ','
     << fmt_double(r.ci_low) << ',' << fmt_double(r.ci_high) << ',' << fmt_double(r.z) << ','
     << r.trials_degenerate << ',' << fmt_double(r.wall_ms) << '\n';
  return os.str();
}

std::string report_text(const ExperimentReport& r) {
  const ExperimentConfig& c = r.config;
  std::ostringstream os;
  os << "mode:       " << mode_name(c.mode) << "\n";
  os << "config:     d=" << c.d;
  if (c.mode == ExperimentMode::VertexCount) os << " n=" << c.n;
  if (c.mode == ExperimentMode::Baseline)
    os << " target=" << c.baseline_target;
  else if (c.mode == ExperimentMode::PermutationOracle)
    os << " coord_bound=" << c.coord_bound;
  else
    os << " law=" << law_name(c.law) << " param=" << c.law_param;
  os << " samples=" << c.samples << " seed=" << c.seed << " workers=" << c.workers << "\n";
  os << "estimate:   " << fmt_double(r.estimate) << "\n";
  os << "theory:     " << fmt_double(r.theory.approx);
  if (r.theory.exact) os << " (= " << to_string(*r.theory.exact) << ")";
  os << "\n            " << r.theory.description << "\n";
  if (c.mode == ExperimentMode::PermutationOracle) {
    os << "oracle:     " << r.certificates.size() << " input set(s), "
       << (r.certificates.empty() ? 0 : r.certificates.front().total.convert_to<long long>())
       << " permutations each, all exact counts "
       << (r.tolerance_ok ? "match" : "DO NOT match") << " theory\n";
  } else {
    os << "ci99:       [" << fmt_double(r.ci_low) << ", " << fmt_double(r.ci_high) << "]\n";
    os << "z:          " << fmt_double(r.z) << "\n";
  }
  os << "trials:     " << r.trials_total << " total, " << r.trials_classified << " classified, "
     << r.trials_degenerate << " degenerate\n";
  os << "tolerance:  band " << fmt_double(r.tolerance_band) << " -> "
     << (r.tolerance_ok ? "ok" : "FAILED") << "\n";
  os << "wall:       " << fmt_double(r.wall_ms) << " ms\n";
  return os.str();
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw std::invalid_argument("unknown format: " + name);
}

std::string render_report(const ExperimentReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return report_json(report).dump(2) + "\n";
    case ReportFormat::Csv: return report_csv(report);
    case ReportFormat::Text: return report_text(report);
  }
  throw std::invalid_argument("render_report: unknown format");
}

std::string render_identity_suite(const IdentitySuiteResult& result, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      json j;
      j["schema"] = kSchemaVersion;
      j["mode"] = "identities";
      json checks = json::array();
      for (const auto& c : result.checks)
        checks.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
      j["checks"] = std::move(checks);
      j["all_ok"] = result.all_ok;
      j["runtime"] = json{{"wall_ms", result.wall_ms}};
      return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream os;
      os << "name,ok,detail\n";
      for (const auto& c : result.checks)
        os << c.name << ',' << (c.ok ? 1 : 0) << ",\"" << c.detail << "\"\n";
      return os.str();
    }
    case ReportFormat::Text: {
      std::ostringstream os;
      for (const auto& c : result.checks)
        os << (c.ok ? "   ok  " : " FAIL  ") << c.name << "  (" << c.detail << ")\n";
      os << (result.all_ok ? "all identities hold" : "IDENTITY FAILURE") << "  ["
         << fmt_double(result.wall_ms) << " ms]\n";
      return os.str();
    }
  }
  throw std::invalid_argument("render_identity_suite: unknown format");
}

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

}  // namespace sylvester

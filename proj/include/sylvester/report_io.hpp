#pragma once

#include "sylvester/experiments.hpp"

#include <string>

namespace sylvester {

// Bump when the JSON layout changes shape; emitted as "schema" in every
// JSON report.
inline constexpr int kSchemaVersion = 1;

enum class ReportFormat { Json, Csv, Text };

// Parses {json|csv|text}; throws std::invalid_argument otherwise.
ReportFormat parse_format(const std::string& name);

// Everything in the rendered report except the runtime block (wall clock,
// worker count) is a deterministic function of the experiment config.
std::string render_report(const ExperimentReport& report, ReportFormat format);
std::string render_identity_suite(const IdentitySuiteResult& result, ReportFormat format);

// Writes to the file at out_path; empty or "-" means stdout.
void write_text(const std::string& text, const std::string& out_path);

}  // namespace sylvester

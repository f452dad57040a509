#pragma once

#include <string>
#include <vector>

#include "ellid/registry.hpp"

namespace ellid {

enum class ReportFormat { Json, Csv, Text };

// Parses "json", "csv", "text"; throws ConstraintError otherwise.
ReportFormat parse_report_format(const std::string& name);
const char* to_string(ReportFormat f);

// 17 significant digits; "null" for non-finite values.
std::string format_number(double v);

// JSON array of report objects with the fields identity, variant, params,
// lhs, rhs, abs_residual, rel_residual, classification, terms, note, in that
// order.
std::string to_json(const std::vector<ResidualReport>& reports);
// Header row plus one row per report, same columns.
std::string to_csv(const std::vector<ResidualReport>& reports);
// Human-readable table grouped by identity. Contested entries name the
// variants that pass at every point.
std::string to_text(const std::vector<ResidualReport>& reports, const Registry& registry = Registry::instance());

std::string render(const std::vector<ResidualReport>& reports, ReportFormat format);

}  // namespace ellid

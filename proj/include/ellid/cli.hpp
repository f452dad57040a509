#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ellid/registry.hpp"
#include "ellid/report.hpp"

namespace ellid {

struct RunConfig {
  double tolerance = 1e-14;
  std::size_t cap = 10000;
  std::string output;  // empty: standard output
  ReportFormat format = ReportFormat::Text;
  std::vector<std::string> filter;
  std::size_t parallelism = 0;  // 0: available cores
  GridOverrides grid;

  // Throws ConstraintError naming the offending field.
  void validate() const;
  [[nodiscard]] TruncationPolicy policy() const;
  [[nodiscard]] RunOptions run_options() const;
};

std::string to_json_text(const RunConfig& config);
// Throws ConstraintError naming the offending field.
RunConfig run_config_from_json_text(const std::string& text);

// Parses "name=v1,v2,..." into an override entry; throws ConstraintError.
std::pair<std::string, std::vector<double>> parse_grid_override(const std::string& spec);

// Exit codes: 0 success, 1 an ExpectPass entry has a non-PASS base point (or
// an eval failed numerically), 2 usage errors and unknown identities.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Exit status for a finished report set under the check semantics.
int check_exit_code(const std::vector<ResidualReport>& reports, const Registry& registry = Registry::instance());

std::string list_table(const std::vector<std::string>& filter, const Registry& registry = Registry::instance());

}  // namespace ellid

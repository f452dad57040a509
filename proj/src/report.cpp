#include "ellid/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ellid/errors.hpp"

namespace ellid {

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw ConstraintError("format: expected json, csv or text, got '" + name + "'");
}

const char* to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::Json: return "json";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Text: return "text";
  }
  return "?";
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out + "\"";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string short_number(double v) {
  if (!std::isfinite(v)) return "-";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string params_compact(const ParamMap& params, bool full = true) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ";";
    out += k + "=" + (full ? format_number(v) : short_number(v));
  }
  return out;
}


std::string sci(double v) {
  if (!std::isfinite(v)) return "-";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

}  // namespace

std::string to_json(const std::vector<ResidualReport>& reports) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const ResidualReport& r = reports[i];
    os << (i == 0 ? "\n" : ",\n");
    os << "  {\"identity\": " << json_string(r.identity) << ", \"variant\": " << json_string(r.variant)
       << ", \"params\": {";
    bool first = true;
    for (const auto& [k, v] : r.params) {
      os << (first ? "" : ", ") << json_string(k) << ": " << format_number(v);
      first = false;
    }
    os << "}, \"lhs\": " << format_number(r.lhs) << ", \"rhs\": " << format_number(r.rhs)
       << ", \"abs_residual\": " << format_number(r.abs_residual)
       << ", \"rel_residual\": " << format_number(r.rel_residual)
       << ", \"classification\": " << json_string(to_string(r.classification)) << ", \"terms\": {\"lhs\": "
       << r.terms.lhs << ", \"rhs\": " << r.terms.rhs << "}, \"note\": " << json_string(r.note) << "}";
  }
  os << (reports.empty() ? "]\n" : "\n]\n");
  return os.str();
}

std::string to_csv(const std::vector<ResidualReport>& reports) {
  std::ostringstream os;
  os << "identity,variant,params,lhs,rhs,abs_residual,rel_residual,classification,terms,note\n";
  for (const ResidualReport& r : reports) {
    os << csv_field(r.identity) << ',' << csv_field(r.variant) << ',' << csv_field(params_compact(r.params)) << ','
       << format_number(r.lhs) << ',' << format_number(r.rhs) << ',' << format_number(r.abs_residual) << ','
       << format_number(r.rel_residual) << ',' << to_string(r.classification) << ',' << r.terms.lhs << '/'
       << r.terms.rhs << ',' << csv_field(r.note) << '\n';
  }
  return os.str();
}

std::string to_text(const std::vector<ResidualReport>& reports, const Registry& registry) {
  std::ostringstream os;
  std::size_t i = 0;
  while (i < reports.size()) {
    const std::string& id = reports[i].identity;
    std::size_t j = i;
    while (j < reports.size() && reports[j].identity == id) ++j;
    const std::vector<ResidualReport> group(reports.begin() + static_cast<std::ptrdiff_t>(i),
                                            reports.begin() + static_cast<std::ptrdiff_t>(j));
    const IdentityRecord* record = registry.find(id);
    const std::vector<std::string> winners = passing_variants(group, id);
    os << id;
    if (record != nullptr) {
      os << "  [" << to_string(record->expected) << "]";
      if (record->expected == Expectation::Contested) {
        os << "  winner: ";
        if (winners.empty()) {
          os << "none";
        } else {
          for (std::size_t w = 0; w < winners.size(); ++w) os << (w ? ", " : "") << winners[w];
        }
      } else if (record->expected == Expectation::ExpectPass) {
        const bool base_ok = !winners.empty() && winners.front() == "base";
        os << "  " << (base_ok ? "expected pass: met" : "expected pass: NOT MET");
      }
      os << "\n  " << record->anchor << "\n";
    } else {
      os << "\n";
    }
    char line[512];
    for (const ResidualReport& r : group) {
      std::snprintf(line, sizeof line, "  %-20s %-28s %18s %18s %9s  %s", r.variant.c_str(),
                    params_compact(r.params, false).c_str(), short_number(r.lhs).c_str(), short_number(r.rhs).c_str(),
                    sci(r.rel_residual).c_str(), to_string(r.classification));
      os << line;
      if (!r.note.empty()) os << "  (" << r.note << ")";
      os << "\n";
    }
    os << "\n";
    i = j;
  }
  return os.str();
}

std::string render(const std::vector<ResidualReport>& reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return to_json(reports);
    case ReportFormat::Csv: return to_csv(reports);
    case ReportFormat::Text: return to_text(reports);
  }
  return {};
}

}  // namespace ellid

#include "ellid/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "ellid/elliptic.hpp"
#include "ellid/errors.hpp"
#include "ellid/nome.hpp"
#include "ellid/series.hpp"
#include "ellid/singular.hpp"
#include "ellid/theta.hpp"

namespace ellid {

using nlohmann::json;

void RunConfig::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw ConstraintError("tolerance: must be a positive finite number");
  }
  if (cap < 1) throw ConstraintError("cap: must be at least 1");
  for (const auto& [name, values] : grid) {
    if (name.empty()) throw ConstraintError("grid: parameter name is empty");
    if (values.empty()) throw ConstraintError("grid: no values for '" + name + "'");
    for (double v : values) {
      if (!std::isfinite(v)) throw ConstraintError("grid: non-finite value for '" + name + "'");
    }
  }
  for (const std::string& id : filter) {
    if (id.empty()) throw ConstraintError("filter: empty identity id");
  }
}

TruncationPolicy RunConfig::policy() const {
  TruncationPolicy p;
  p.tolerance = tolerance;
  p.cap = cap;
  return p;
}

RunOptions RunConfig::run_options() const {
  RunOptions o;
  o.policy = policy();
  o.parallelism = parallelism;
  o.overrides = grid;
  return o;
}

std::string to_json_text(const RunConfig& config) {
  json j;
  j["tolerance"] = config.tolerance;
  j["cap"] = config.cap;
  j["output"] = config.output;
  j["format"] = to_string(config.format);
  j["filter"] = config.filter;
  j["parallelism"] = config.parallelism;
  j["grid"] = config.grid;
  return j.dump();
}

namespace {

template <typename T>
T field(const json& j, const char* name, T fallback) {
  auto it = j.find(name);
  if (it == j.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ConstraintError(std::string(name) + ": wrong type");
  }
}

}  // namespace

RunConfig run_config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConstraintError(std::string("config: not valid JSON (") + e.what() + ")");
  }
  if (!j.is_object()) throw ConstraintError("config: expected a JSON object");
  RunConfig c;
  c.tolerance = field(j, "tolerance", c.tolerance);
  if (auto it = j.find("cap"); it != j.end() && !(it->is_number_unsigned() || (it->is_number_integer() && *it >= 0))) {
    throw ConstraintError("cap: must be a nonnegative integer");
  }
  c.cap = field(j, "cap", c.cap);
  c.output = field(j, "output", c.output);
  c.format = parse_report_format(field<std::string>(j, "format", to_string(c.format)));
  c.filter = field(j, "filter", c.filter);
  if (auto it = j.find("parallelism");
      it != j.end() && !(it->is_number_unsigned() || (it->is_number_integer() && *it >= 0))) {
    throw ConstraintError("parallelism: must be a nonnegative integer");
  }
  c.parallelism = field(j, "parallelism", c.parallelism);
  c.grid = field(j, "grid", c.grid);
  c.validate();
  return c;
}

std::pair<std::string, std::vector<double>> parse_grid_override(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConstraintError("grid: expected name=v1,v2,..., got '" + spec + "'");
  }
  std::pair<std::string, std::vector<double>> out;
  out.first = spec.substr(0, eq);
  std::stringstream ss(spec.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v)) {
      throw ConstraintError("grid: bad value '" + item + "' for '" + out.first + "'");
    }
    out.second.push_back(v);
  }
  if (out.second.empty()) throw ConstraintError("grid: no values for '" + out.first + "'");
  return out;
}

int check_exit_code(const std::vector<ResidualReport>& reports, const Registry& registry) {
  for (const ResidualReport& r : reports) {
    if (r.variant != "base") continue;
    const IdentityRecord* rec = registry.find(r.identity);
    if (rec != nullptr && rec->expected == Expectation::ExpectPass && r.classification != Classification::Pass) {
      return 1;
    }
  }
  return 0;
}

std::string list_table(const std::vector<std::string>& filter, const Registry& registry) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-13s %5s  %-44s %s\n", "id", "expected", "grid", "variants", "anchor");
  os << line;
  for (const IdentityRecord& r : registry.records()) {
    if (!filter.empty() && std::find(filter.begin(), filter.end(), r.id) == filter.end()) continue;
    std::string variants;
    for (const Variant& v : r.variants) variants += (variants.empty() ? "" : ",") + v.id;
    std::snprintf(line, sizeof line, "%-6s %-13s %5zu  %-44s ", r.id.c_str(), to_string(r.expected), r.grid_size(),
                  variants.c_str());
    os << line << r.anchor << "\n";
  }
  return os.str();
}

namespace {

struct EvalOutput {
  double value;
  std::size_t terms;
  double tail;
};

EvalOutput from_series(const SeriesResult& r) { return {r.value, r.terms_used, r.tail_bound}; }

class EvalArgs {
 public:
  void add(CLI::App* app, const std::string& name, const std::string& help) {
    values_[name] = std::numeric_limits<double>::quiet_NaN();
    options_[name] = app->add_option("--" + name, values_[name], help);
  }
  [[nodiscard]] bool has(const std::string& name) const { return options_.at(name)->count() > 0; }
  [[nodiscard]] double get(const std::string& name) const {
    if (!has(name)) throw ConstraintError("missing required option --" + name);
    return values_.at(name);
  }

 private:
  std::map<std::string, double> values_;
  std::map<std::string, CLI::Option*> options_;
};

EllipticArgument elliptic_arg(const EvalArgs& args) {
  if (args.has("k") == args.has("m")) throw ConstraintError("give exactly one of --k or --m");
  return args.has("k") ? EllipticArgument::modulus(args.get("k")) : EllipticArgument::parameter(args.get("m"));
}

Nome nome_arg(const EvalArgs& args) { return Nome::from_q(args.get("q")); }

series::S1Form s1_form(const std::string& s) {
  if (s == "statement") return series::S1Form::Statement;
  if (s == "restated") return series::S1Form::Restated;
  if (s == "trig") return series::S1Form::Trigonometric;
  throw ConstraintError("form: expected statement, restated or trig, got '" + s + "'");
}

series::SquareKind square_kind(const std::string& s) {
  if (s == "sin") return series::SquareKind::Sin;
  if (s == "sinh") return series::SquareKind::Sinh;
  throw ConstraintError("kind: expected sin or sinh, got '" + s + "'");
}

std::vector<double> coefficient_list(const std::string& s) {
  if (s.empty()) throw ConstraintError("missing required option --coeffs");
  return parse_grid_override("coeffs=" + s).second;
}

using EvalFn = std::function<EvalOutput(const EvalArgs&, const TruncationPolicy&, const std::string&,
                                        const std::string&, const std::string&)>;

const std::map<std::string, EvalFn>& eval_table() {
  using P = const TruncationPolicy&;
  using A = const EvalArgs&;
  using S = const std::string&;
  static const std::map<std::string, EvalFn> table = {
      {"K",
       [](A a, P, S, S, S) {
         int it = 0;
         const EllipticArgument arg = elliptic_arg(a);
         const double v = ellint_K(arg);
         if (arg.complement() > 0.0) agm(1.0, arg.complementary_modulus(), it);
         return EvalOutput{v, static_cast<std::size_t>(it), 0.0};
       }},
      {"E", [](A a, P, S, S, S) { return EvalOutput{ellint_E(elliptic_arg(a)), 0, 0.0}; }},
      {"dK", [](A a, P, S, S, S) { return EvalOutput{dK(elliptic_arg(a)), 0, 0.0}; }},
      {"a_of_k", [](A a, P, S, S, S) { return EvalOutput{a_of_k(elliptic_arg(a)), 0, 0.0}; }},
      {"dadk_fd",
       [](A a, P, S, S, S) {
         const DerivativeEstimate d = dadk_fd_estimate(elliptic_arg(a));
         return EvalOutput{dadk_fd(elliptic_arg(a)), 0, d.error};
       }},
      {"solve_k",
       [](A a, P, S, S, S) {
         const SingularSolve s = solve_k(a.get("a"));
         return EvalOutput{s.k.value(), static_cast<std::size_t>(s.iterations), s.residual};
       }},
      {"theta2", [](A a, P p, S, S, S) { return from_series(theta2(a.get("z"), nome_arg(a), p)); }},
      {"theta3", [](A a, P p, S, S, S) { return from_series(theta3(a.get("z"), nome_arg(a), p)); }},
      {"theta4",
       [](A a, P p, S, S, S) {
         if (a.has("u") == a.has("z")) throw ConstraintError("give exactly one of --u or --z");
         return from_series(theta4(a.has("u") ? a.get("u") : a.get("z"), nome_arg(a), p));
       }},
      {"theta4_imag", [](A a, P p, S, S, S) { return from_series(theta4_imag(a.get("t"), nome_arg(a), p)); }},
      {"P0", [](A a, P p, S, S, S) { return from_series(q_product_P0(nome_arg(a), p)); }},
      {"euler_product", [](A a, P p, S, S, S) { return from_series(euler_product(nome_arg(a), p)); }},
      {"S1",
       [](A a, P p, S form, S, S) {
         return from_series(series::cosh_over_n_sinh(a.get("a"), a.get("t"), s1_form(form), p));
       }},
      {"S2",
       [](A a, P p, S, S kind, S) {
         return from_series(series::alt_square_over_n_expm1(a.get("theta"), a.get("c"), square_kind(kind), p));
       }},
      {"S3", [](A a, P p, S, S, S) { return from_series(series::alt_n_over_expm1(a.get("c"), p)); }},
      {"S4", [](A a, P p, S, S, S) { return from_series(series::n_over_sinh(a.get("b"), p)); }},
      {"S5", [](A a, P p, S, S, S) { return from_series(series::sech_sum(a.get("a"), p)); }},
      {"S5sq", [](A a, P p, S, S, S) { return from_series(series::sech2_sum(a.get("x"), p)); }},
      {"S6", [](A a, P p, S, S, S) { return from_series(series::alt_sin_over_expm1(a.get("a"), a.get("v"), p)); }},
      {"S6closed",
       [](A a, P p, S, S, S) { return from_series(series::sin_over_cos_plus_cosh(a.get("a"), a.get("v"), p)); }},
      {"S7", [](A a, P p, S, S, S) { return from_series(series::csch_sinh(a.get("a"), a.get("v"), p)); }},
      {"S8", [](A a, P p, S, S, S) { return from_series(series::exp_over_cube(a.get("b"), p)); }},
      {"S9", [](A a, P p, S, S, S) { return from_series(series::lambert_e2(nome_arg(a), p)); }},
      {"S10", [](A a, P p, S, S, S) { return from_series(series::alt_sin_lambert(a.get("z"), nome_arg(a), p)); }},
      {"S11", [](A a, P p, S, S, S) { return from_series(series::n_cosh_over_sinh_double(a.get("a"), p)); }},
      {"S12",
       [](A a, P p, S, S, S coeffs) {
         return from_series(series::alt_poly_over_expm1(a.get("c"), coefficient_list(coeffs), p));
       }},
      {"S13",
       [](A a, P p, S, S, S coeffs) {
         return from_series(series::poly_over_sinh(a.get("b"), coefficient_list(coeffs), p));
       }},
  };
  return table;
}

struct CommonFlags {
  double tol = 1e-14;
  std::size_t cap = 10000;
  std::vector<std::string> grid;
  std::string out;
  std::string format = "text";
  std::size_t parallel = 0;
  CLI::Option* cap_opt = nullptr;
};

void add_common(CLI::App* app, CommonFlags& f, bool reporting) {
  app->add_option("--tol", f.tol, "series truncation tolerance")->capture_default_str();
  f.cap_opt = app->add_option("--cap", f.cap, "maximum number of series terms (overrides ELLID_CAP)")
                  ->capture_default_str();
  if (!reporting) return;
  app->add_option("--grid", f.grid, "parameter override name=v1,v2,... (repeatable)");
  app->add_option("--out", f.out, "write the report to this file instead of standard output");
  app->add_option("--format", f.format, "json, csv or text")->capture_default_str();
  app->add_option("--parallel", f.parallel, "worker threads (0: available cores)");
}

RunConfig config_from(const CommonFlags& f, const std::vector<std::string>& filter) {
  RunConfig c;
  c.tolerance = f.tol;
  c.cap = f.cap;
  if (f.cap_opt != nullptr && f.cap_opt->count() == 0) {
    if (const char* env = std::getenv("ELLID_CAP"); env != nullptr && *env != '\0') {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(env, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || env[used] != '\0') {
        throw ConstraintError(std::string("cap: ELLID_CAP is not a count: '") + env + "'");
      }
      c.cap = static_cast<std::size_t>(v);
    }
  }
  c.output = f.out;
  c.format = parse_report_format(f.format);
  c.filter = filter;
  c.parallelism = f.parallel;
  for (const std::string& g : f.grid) {
    auto [name, values] = parse_grid_override(g);
    c.grid[name] = std::move(values);
  }
  c.validate();
  return c;
}

int emit(const std::vector<ResidualReport>& reports, const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string text = render(reports, config.format);
  if (config.output.empty()) {
    out << text;
  } else {
    std::ofstream f(config.output, std::ios::binary);
    f << text;
    if (!f) {
      err << "ellid: cannot write '" << config.output << "'\n";
      return 2;
    }
  }
  return check_exit_code(reports);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Residual audit of elliptic-integral, theta and Lambert-series identities", "ellid"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list registered identities");
  std::vector<std::string> list_filter;
  list->add_option("--filter", list_filter, "identity ids to show");

  auto* check = app.add_subcommand("check", "evaluate one identity on its grid");
  std::string check_id;
  check->add_option("id", check_id, "identity id")->required();
  CommonFlags check_flags;
  add_common(check, check_flags, true);

  auto* check_all = app.add_subcommand("check-all", "evaluate every identity");
  std::vector<std::string> all_filter;
  check_all->add_option("--filter", all_filter, "restrict to these identity ids");
  CommonFlags all_flags;
  add_common(check_all, all_flags, true);

  auto* eval = app.add_subcommand("eval", "evaluate a single function");
  std::string function;
  eval->add_option("function", function, "K, E, dK, a_of_k, dadk_fd, solve_k, theta2, theta3, theta4, "
                                          "theta4_imag, P0, euler_product, S1..S13")
      ->required();
  CommonFlags eval_flags;
  add_common(eval, eval_flags, false);
  EvalArgs eval_args;
  for (const char* name : {"k", "m", "a", "b", "c", "t", "u", "v", "x", "z", "q", "theta"}) {
    eval_args.add(eval, name, std::string("value of ") + name);
  }
  std::string form = "statement";
  std::string kind = "sin";
  std::string coeffs;
  eval->add_option("--form", form, "S1 form: statement, restated or trig");
  eval->add_option("--kind", kind, "S2 square: sin or sinh");
  eval->add_option("--coeffs", coeffs, "S12/S13 polynomial coefficients p0,p1,...");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ellid: " << e.what() << "\n";
    return 2;
  }

  try {
    if (list->parsed()) {
      for (const std::string& id : list_filter) {
        if (Registry::instance().find(id) == nullptr) {
          err << "ellid: unknown identity '" << id << "'\n";
          return 2;
        }
      }
      out << list_table(list_filter);
      return 0;
    }
    if (check->parsed()) {
      const RunConfig config = config_from(check_flags, {check_id});
      if (Registry::instance().find(check_id) == nullptr) {
        err << "ellid: unknown identity '" << check_id << "'\n";
        return 2;
      }
      return emit(run_grid(check_id, config.run_options()), config, out, err);
    }
    if (check_all->parsed()) {
      const RunConfig config = config_from(all_flags, all_filter);
      for (const std::string& id : config.filter) {
        if (Registry::instance().find(id) == nullptr) {
          err << "ellid: unknown identity '" << id << "'\n";
          return 2;
        }
      }
      return emit(run_all(config.run_options(), config.filter), config, out, err);
    }
    if (eval->parsed()) {
      const RunConfig config = config_from(eval_flags, {});
      const auto& table = eval_table();
      auto it = table.find(function);
      if (it == table.end()) {
        err << "ellid: unknown function '" << function << "'\n";
        return 2;
      }
      EvalOutput r{};
      try {
        r = it->second(eval_args, config.policy(), form, kind, coeffs);
      } catch (const ConstraintError&) {
        throw;
      } catch (const Error& e) {
        err << "ellid: " << function << ": " << e.what() << "\n";
        return 1;
      }
      out << "value: " << format_number(r.value) << "\n"
          << "terms_used: " << r.terms << "\n"
          << "tail_bound: " << format_number(r.tail) << "\n";
      return 0;
    }
  } catch (const ConstraintError& e) {
    err << "ellid: " << e.what() << "\n";
    return 2;
  } catch (const UnknownIdentityError& e) {
    err << "ellid: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace ellid

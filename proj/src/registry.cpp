#include "ellid/registry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "ellid/errors.hpp"

namespace ellid {

const char* to_string(Expectation e) {
  switch (e) {
    case Expectation::ExpectPass: return "ExpectPass";
    case Expectation::Contested: return "Contested";
    case Expectation::DocumentOnly: return "DocumentOnly";
  }
  return "?";
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Pass: return "PASS";
    case Classification::Inconclusive: return "INCONCLUSIVE";
    case Classification::Fail: return "FAIL";
  }
  return "?";
}

Classification classify(double rel_residual) {
  if (rel_residual <= kPassThreshold) return Classification::Pass;
  if (rel_residual > kFailThreshold) return Classification::Fail;
  return Classification::Inconclusive;
}

const std::vector<std::string>& primitive_names() {
  static const std::vector<std::string> names = {
      "agm",       "ellint_K",        "ellint_E",  "dK",          "solve_k",    "a_of_k",     "dadk_fd",
      "theta2",    "theta3",          "theta4",    "theta4_imag", "theta_derivatives", "log_theta_derivatives",
      "P0",        "euler_product",   "S1",        "S2",          "S3",         "S4",         "S5",
      "S5sq",      "S6",              "S6closed",  "S7",          "S8",         "S9",         "S10",
      "S11",       "S12",             "S13",       "zeta",        "polynomial", "elementary",
  };
  return names;
}

std::vector<ParamMap> IdentityRecord::grid() const {
  std::vector<ParamMap> points{ParamMap{}};
  for (const ParamDomain& d : domain) {
    std::vector<ParamMap> next;
    next.reserve(points.size() * d.grid.size());
    for (const ParamMap& p : points) {
      for (double v : d.grid) {
        ParamMap q = p;
        q[d.name] = v;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::size_t IdentityRecord::grid_size() const { return grid().size(); }

const Variant* IdentityRecord::find_variant(const std::string& variant_id) const {
  for (const Variant& v : variants) {
    if (v.id == variant_id) return &v;
  }
  return nullptr;
}

Registry::Registry(std::vector<IdentityRecord> records) : records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(),
            [](const IdentityRecord& x, const IdentityRecord& y) { return x.id < y.id; });
  for (std::size_t i = 1; i < records_.size(); ++i) {
    if (records_[i].id == records_[i - 1].id) throw Error("duplicate identity id " + records_[i].id);
  }
  for (const IdentityRecord& r : records_) {
    if (r.variants.empty() || r.variants.front().id != "base") {
      throw Error("identity " + r.id + " must declare a base variant first");
    }
    std::set<std::string> seen;
    for (const Variant& v : r.variants) {
      if (!seen.insert(v.id).second) throw Error("identity " + r.id + " repeats variant " + v.id);
    }
  }
}

const Registry& Registry::instance() {
  static const Registry registry(build_identity_catalog());
  return registry;
}

const IdentityRecord* Registry::find(const std::string& id) const {
  auto it = std::lower_bound(records_.begin(), records_.end(), id,
                             [](const IdentityRecord& r, const std::string& key) { return r.id < key; });
  if (it == records_.end() || it->id != id) return nullptr;
  return &*it;
}

const IdentityRecord& Registry::get(const std::string& id) const {
  const IdentityRecord* r = find(id);
  if (r == nullptr) throw UnknownIdentityError("unknown identity '" + id + "'");
  return *r;
}

std::size_t Registry::report_count() const {
  std::size_t n = 0;
  for (const IdentityRecord& r : records_) n += r.variants.size() * r.grid_size();
  return n;
}

namespace {

std::string describe_point(const ParamMap& point) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [k, v] : point) {
    if (!first) os << ", ";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

// Empty string if the point is admissible for the record.
std::string admissibility(const IdentityRecord& record, const ParamMap& point) {
  for (const ParamDomain& d : record.domain) {
    auto it = point.find(d.name);
    if (it == point.end()) return "missing parameter '" + d.name + "'";
    if (!std::isfinite(it->second)) return "parameter '" + d.name + "' is not finite";
  }
  for (const auto& [k, v] : point) {
    (void)v;
    const bool known = std::any_of(record.domain.begin(), record.domain.end(),
                                   [&](const ParamDomain& d) { return d.name == k; });
    if (!known) return "unknown parameter '" + k + "'";
  }
  if (record.constraint) {
    std::string why = record.constraint(point);
    if (!why.empty()) return why;
  }
  return {};
}

ResidualReport blank_report(const IdentityRecord& record, const Variant& variant, const ParamMap& point) {
  ResidualReport rep;
  rep.identity = record.id;
  rep.variant = variant.id;
  rep.params = point;
  return rep;
}

void mark_inconclusive(ResidualReport& rep, std::string note) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  rep.lhs = rep.rhs = rep.abs_residual = rep.rel_residual = nan;
  rep.classification = Classification::Inconclusive;
  rep.note = std::move(note);
}

ResidualReport evaluate_admissible(const IdentityRecord& record, const Variant& variant, const ParamMap& point,
                                   const TruncationPolicy& policy) {
  ResidualReport rep = blank_report(record, variant, point);
  SideValue lhs;
  SideValue rhs;
  try {
    lhs = variant.lhs.eval(point, policy);
    rhs = variant.rhs.eval(point, policy);
  } catch (const NonConvergenceError& e) {
    mark_inconclusive(rep, std::string("non-convergence: ") + e.what());
    return rep;
  } catch (const PoleError& e) {
    mark_inconclusive(rep, std::string("pole: ") + e.what());
    return rep;
  } catch (const Error& e) {
    mark_inconclusive(rep, std::string("error: ") + e.what());
    return rep;
  }
  rep.lhs = lhs.value;
  rep.rhs = rhs.value;
  rep.terms = {lhs.terms, rhs.terms};
  if (!std::isfinite(lhs.value) || !std::isfinite(rhs.value)) {
    rep.abs_residual = rep.rel_residual = std::numeric_limits<double>::quiet_NaN();
    rep.classification = Classification::Inconclusive;
    rep.note = "non-finite side value";
    return rep;
  }
  rep.abs_residual = std::fabs(lhs.value - rhs.value);
  rep.rel_residual = rep.abs_residual / std::max({1.0, std::fabs(lhs.value), std::fabs(rhs.value)});
  rep.classification = classify(rep.rel_residual);
  return rep;
}

}  // namespace

ResidualReport evaluate_identity(const IdentityRecord& record, const Variant& variant, const ParamMap& point,
                                 const TruncationPolicy& policy) {
  policy.validate();
  const std::string why = admissibility(record, point);
  if (!why.empty()) {
    throw ConstraintError(record.id + " at {" + describe_point(point) + "}: " + why);
  }
  return evaluate_admissible(record, variant, point, policy);
}

ResidualReport evaluate_identity(const std::string& id, const std::string& variant, const ParamMap& point,
                                 const TruncationPolicy& policy) {
  const IdentityRecord& record = Registry::instance().get(id);
  const Variant* v = record.find_variant(variant);
  if (v == nullptr) throw UnknownIdentityError("identity " + id + " has no variant '" + variant + "'");
  return evaluate_identity(record, *v, point, policy);
}

namespace {

struct Task {
  const IdentityRecord* record;
  const Variant* variant;
  ParamMap point;
};

std::vector<ParamMap> points_for(const IdentityRecord& record, const GridOverrides& overrides) {
  if (overrides.empty()) return record.grid();
  IdentityRecord copy;
  copy.domain = record.domain;
  for (ParamDomain& d : copy.domain) {
    auto it = overrides.find(d.name);
    if (it != overrides.end()) d.grid = it->second;
  }
  return copy.grid();
}

std::vector<ResidualReport> run_tasks(const std::vector<Task>& tasks, const RunOptions& options) {
  options.policy.validate();
  std::vector<ResidualReport> out(tasks.size());
  auto run_one = [&](std::size_t i) {
    const Task& t = tasks[i];
    const std::string why = admissibility(*t.record, t.point);
    if (!why.empty()) {
      out[i] = blank_report(*t.record, *t.variant, t.point);
      mark_inconclusive(out[i], "constraint: " + why);
      return;
    }
    out[i] = evaluate_admissible(*t.record, *t.variant, t.point, options.policy);
  };
  std::size_t workers = options.parallelism;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, tasks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) run_one(i);
    });
  }
  for (std::thread& th : pool) th.join();
  return out;
}

void append_tasks(std::vector<Task>& tasks, const IdentityRecord& record, const GridOverrides& overrides) {
  const std::vector<ParamMap> points = points_for(record, overrides);
  for (const Variant& v : record.variants) {
    for (const ParamMap& p : points) tasks.push_back({&record, &v, p});
  }
}

void check_override_names(const std::vector<const IdentityRecord*>& records, const GridOverrides& overrides) {
  for (const auto& [name, values] : overrides) {
    const bool used = std::any_of(records.begin(), records.end(), [&](const IdentityRecord* r) {
      return std::any_of(r->domain.begin(), r->domain.end(), [&](const ParamDomain& d) { return d.name == name; });
    });
    if (!used) throw ConstraintError("grid override names unknown parameter '" + name + "'");
    if (values.empty()) throw ConstraintError("grid override for '" + name + "' is empty");
  }
}

}  // namespace

std::vector<ResidualReport> run_grid(const std::string& id, const RunOptions& options) {
  const IdentityRecord& record = Registry::instance().get(id);
  check_override_names({&record}, options.overrides);
  std::vector<Task> tasks;
  append_tasks(tasks, record, options.overrides);
  return run_tasks(tasks, options);
}

std::vector<ResidualReport> run_all(const RunOptions& options, const std::vector<std::string>& ids) {
  const Registry& registry = Registry::instance();
  std::vector<const IdentityRecord*> selected;
  if (ids.empty()) {
    for (const IdentityRecord& r : registry.records()) selected.push_back(&r);
  } else {
    std::set<std::string> wanted(ids.begin(), ids.end());
    for (const std::string& id : wanted) selected.push_back(&registry.get(id));
  }
  check_override_names(selected, options.overrides);
  std::vector<Task> tasks;
  for (const IdentityRecord* r : selected) append_tasks(tasks, *r, options.overrides);
  return run_tasks(tasks, options);
}

std::vector<std::string> passing_variants(const std::vector<ResidualReport>& reports, const std::string& id) {
  std::vector<std::string> order;
  std::map<std::string, bool> all_pass;
  for (const ResidualReport& r : reports) {
    if (r.identity != id) continue;
    auto [it, inserted] = all_pass.emplace(r.variant, true);
    if (inserted) order.push_back(r.variant);
    if (r.classification != Classification::Pass) it->second = false;
  }
  std::vector<std::string> out;
  for (const std::string& v : order) {
    if (all_pass[v]) out.push_back(v);
  }
  return out;
}

}  // namespace ellid

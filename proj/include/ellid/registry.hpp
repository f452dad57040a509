#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ellid/summation.hpp"

namespace ellid {

// Grid point: parameter name -> value. std::map keeps names sorted, which
// gives the lexicographic point order used by reports.
using ParamMap = std::map<std::string, double>;

struct SideValue {
  double value = 0.0;
  std::size_t terms = 0;
};

// One side of an identity. `depends` lists the library primitives the
// evaluator calls, so independence of the two sides can be inspected.
struct Side {
  std::function<SideValue(const ParamMap&, const TruncationPolicy&)> eval;
  std::vector<std::string> depends;
};

struct Variant {
  std::string id;
  Side lhs;
  Side rhs;
  std::string rationale;
};

struct ParamDomain {
  std::string name;
  std::vector<double> grid;
};

enum class Expectation { ExpectPass, Contested, DocumentOnly };
const char* to_string(Expectation e);

struct IdentityRecord {
  std::string id;
  std::string anchor;
  std::vector<ParamDomain> domain;
  // Returns an empty string when the point is admissible, otherwise the
  // reason it is not.
  std::function<std::string(const ParamMap&)> constraint;
  std::string constraint_text;
  std::vector<Variant> variants;  // variants[0] is "base"
  Expectation expected = Expectation::Contested;
  std::string note;

  // Cartesian product of the parameter grids, sorted lexicographically.
  [[nodiscard]] std::vector<ParamMap> grid() const;
  [[nodiscard]] std::size_t grid_size() const;
  [[nodiscard]] const Variant* find_variant(const std::string& variant_id) const;
};

// Library primitives an identity side may depend on.
const std::vector<std::string>& primitive_names();

class Registry {
 public:
  // The built-in catalog. Immutable after construction.
  static const Registry& instance();

  explicit Registry(std::vector<IdentityRecord> records);

  // Records ordered by id.
  [[nodiscard]] const std::vector<IdentityRecord>& records() const { return records_; }
  [[nodiscard]] const IdentityRecord* find(const std::string& id) const;
  // Throws UnknownIdentityError.
  [[nodiscard]] const IdentityRecord& get(const std::string& id) const;
  [[nodiscard]] std::size_t size() const { return records_.size(); }
  // Sum over records of |variants| * |grid|.
  [[nodiscard]] std::size_t report_count() const;

 private:
  std::vector<IdentityRecord> records_;
};

// Builds the catalog of identities; used by Registry::instance().
std::vector<IdentityRecord> build_identity_catalog();

enum class Classification { Pass, Inconclusive, Fail };
const char* to_string(Classification c);

inline constexpr double kPassThreshold = 1e-9;
inline constexpr double kFailThreshold = 1e-6;

// PASS for rel <= 1e-9, FAIL for rel > 1e-6, INCONCLUSIVE otherwise
// (including NaN).
Classification classify(double rel_residual);

struct TermCounts {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
};

struct ResidualReport {
  std::string identity;
  std::string variant;
  ParamMap params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  Classification classification = Classification::Inconclusive;
  TermCounts terms;
  std::string note;
};

// Evaluates both sides at one point. Unknown id or variant throws
// UnknownIdentityError; a point outside the domain throws ConstraintError.
// Numerical errors during evaluation are embedded as INCONCLUSIVE.
ResidualReport evaluate_identity(const std::string& id, const std::string& variant, const ParamMap& point,
                                 const TruncationPolicy& policy = {});
ResidualReport evaluate_identity(const IdentityRecord& record, const Variant& variant, const ParamMap& point,
                                 const TruncationPolicy& policy = {});

// Replacement grids for named parameters.
using GridOverrides = std::map<std::string, std::vector<double>>;

struct RunOptions {
  TruncationPolicy policy;
  // 0 means std::thread::hardware_concurrency().
  std::size_t parallelism = 1;
  GridOverrides overrides;
};

// Every variant at every grid point of one identity, in canonical order.
// Unknown override names throw ConstraintError; points violating the
// domain constraint are reported as INCONCLUSIVE.
std::vector<ResidualReport> run_grid(const std::string& id, const RunOptions& options = {});
// Every record (optionally only those in `ids`), in canonical order.
std::vector<ResidualReport> run_all(const RunOptions& options = {}, const std::vector<std::string>& ids = {});

// Variant ids whose reports all PASS for the given identity, in declaration
// order.
std::vector<std::string> passing_variants(const std::vector<ResidualReport>& reports, const std::string& id);

}  // namespace ellid

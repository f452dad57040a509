#pragma once

#include <string>

namespace ellid {

// Nome q in [0, 1). When built as q = exp(-c * a) the exponent is stored
// exactly so that log(q) never has to be recovered from a rounded q.
class Nome {
 public:
  // q given directly; q = 0 is the degenerate nome (every theta series is its
  // constant term).
  static Nome from_q(double q);
  // q = exp(-coefficient * parameter), both positive. `label` describes the
  // build for report provenance, e.g. "exp(-pi*a)".
  static Nome from_exponent(double coefficient, double parameter, std::string label = {});
  // q = exp(-pi * a).
  static Nome pi_times(double a);

  [[nodiscard]] double q() const { return q_; }
  // log(q); -inf for q = 0.
  [[nodiscard]] double log_q() const { return log_q_; }
  [[nodiscard]] double coefficient() const { return coefficient_; }
  [[nodiscard]] double parameter() const { return parameter_; }
  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] bool is_zero() const { return q_ == 0.0; }

 private:
  Nome(double q, double log_q, double coefficient, double parameter, std::string label)
      : q_(q), log_q_(log_q), coefficient_(coefficient), parameter_(parameter), label_(std::move(label)) {}

  double q_;
  double log_q_;
  double coefficient_;
  double parameter_;
  std::string label_;
};

}  // namespace ellid

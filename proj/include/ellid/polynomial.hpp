#pragma once

#include <string>
#include <vector>

namespace ellid {

inline constexpr int kMaxPolynomialDegree = 8;

// Real polynomial f(x) = sum f_n x^n with n <= 8, used as the test function
// for the polynomial-instance propositions.
class PolynomialSpec {
 public:
  PolynomialSpec() = default;
  // Coefficients f_0..f_d, ascending. Trailing zeros are dropped. Throws
  // DomainError for degree > 8 or non-finite coefficients.
  explicit PolynomialSpec(std::vector<double> coefficients);

  static PolynomialSpec monomial(int degree, double coefficient = 1.0);

  // -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  [[nodiscard]] const std::vector<double>& coefficients() const { return coefficients_; }
  // f_n, zero beyond the degree.
  [[nodiscard]] double coefficient(int n) const;
  [[nodiscard]] bool is_zero() const { return coefficients_.empty(); }

  [[nodiscard]] double operator()(double x) const;

  // (f(x) + f(-x))/2 and (f(x) - f(-x))/2.
  [[nodiscard]] PolynomialSpec even_part() const;
  [[nodiscard]] PolynomialSpec odd_part() const;
  [[nodiscard]] bool is_even() const;

  // g_n = n! f_n
  [[nodiscard]] double g(int n) const;

  // F(i y) for an even polynomial: sum f_{2k} (-1)^k y^{2k}. Throws
  // ConstraintError if odd coefficients are present.
  [[nodiscard]] double eval_imaginary_even(double y) const;

  // Coefficients of f(x)/x; requires f(0) = 0.
  [[nodiscard]] PolynomialSpec divided_by_x() const;

  [[nodiscard]] std::string describe() const;

  friend PolynomialSpec operator+(const PolynomialSpec& lhs, const PolynomialSpec& rhs);
  friend bool operator==(const PolynomialSpec&, const PolynomialSpec&) = default;

 private:
  std::vector<double> coefficients_;
};

}  // namespace ellid

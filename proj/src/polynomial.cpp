#include "ellid/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "ellid/errors.hpp"

namespace ellid {

PolynomialSpec::PolynomialSpec(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
  for (double c : coefficients_) {
    if (!std::isfinite(c)) throw DomainError("polynomial coefficients must be finite");
  }
  while (!coefficients_.empty() && coefficients_.back() == 0.0) coefficients_.pop_back();
  if (degree() > kMaxPolynomialDegree) {
    std::ostringstream os;
    os << "polynomial degree " << degree() << " exceeds " << kMaxPolynomialDegree;
    throw DomainError(os.str());
  }
}

PolynomialSpec PolynomialSpec::monomial(int degree, double coefficient) {
  if (degree < 0 || degree > kMaxPolynomialDegree) {
    std::ostringstream os;
    os << "monomial degree " << degree << " outside [0, " << kMaxPolynomialDegree << "]";
    throw DomainError(os.str());
  }
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = coefficient;
  return PolynomialSpec(std::move(c));
}

double PolynomialSpec::coefficient(int n) const {
  if (n < 0 || n > degree()) return 0.0;
  return coefficients_[static_cast<std::size_t>(n)];
}

double PolynomialSpec::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolynomialSpec PolynomialSpec::even_part() const {
  std::vector<double> c = coefficients_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = 0.0;
  return PolynomialSpec(std::move(c));
}

PolynomialSpec PolynomialSpec::odd_part() const {
  std::vector<double> c = coefficients_;
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = 0.0;
  return PolynomialSpec(std::move(c));
}

bool PolynomialSpec::is_even() const {
  for (std::size_t i = 1; i < coefficients_.size(); i += 2) {
    if (coefficients_[i] != 0.0) return false;
  }
  return true;
}

double PolynomialSpec::g(int n) const { return std::tgamma(n + 1.0) * coefficient(n); }

double PolynomialSpec::eval_imaginary_even(double y) const {
  if (!is_even()) throw ConstraintError("F(iy) needs an even polynomial; odd coefficients present");
  double acc = 0.0;
  const double y2 = y * y;
  for (int k = degree() / 2; k >= 0; --k) {
    const double c = coefficient(2 * k) * ((k & 1) ? -1.0 : 1.0);
    acc = acc * y2 + c;
  }
  return acc;
}

PolynomialSpec PolynomialSpec::divided_by_x() const {
  if (coefficient(0) != 0.0) throw ConstraintError("f(x)/x needs f(0) = 0");
  if (coefficients_.empty()) return {};
  return PolynomialSpec(std::vector<double>(coefficients_.begin() + 1, coefficients_.end()));
}

std::string PolynomialSpec::describe() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (int n = degree(); n >= 0; --n) {
    const double c = coefficient(n);
    if (c == 0.0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const double mag = std::fabs(c);
    if (mag != 1.0 || n == 0) os << mag;
    if (n >= 1) os << "x";
    if (n >= 2) os << "^" << n;
    first = false;
  }
  return os.str();
}

PolynomialSpec operator+(const PolynomialSpec& lhs, const PolynomialSpec& rhs) {
  std::vector<double> c(std::max(lhs.coefficients_.size(), rhs.coefficients_.size()), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = lhs.coefficient(static_cast<int>(i)) + rhs.coefficient(static_cast<int>(i));
  }
  return PolynomialSpec(std::move(c));
}

}  // namespace ellid

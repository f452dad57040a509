#include "ellid/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ellid/compensated.hpp"
#include "ellid/errors.hpp"

namespace ellid {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

[[noreturn]] void bad_argument(const char* what, double v) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": " << v;
  throw DomainError(os.str());
}

void require_not_singular(const EllipticArgument& arg, const char* op) {
  if (arg.near_singular()) {
    std::ostringstream os;
    os.precision(17);
    os << op << ": argument " << arg.value() << " (" << to_string(arg.convention())
       << ") is within the singular band at 1";
    throw SingularArgumentError(os.str());
  }
}

void require_interior(const EllipticArgument& arg, const char* op) {
  if (!(arg.value() > 0.0) || !(arg.complement() > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << op << ": argument must lie strictly inside (0, 1), got " << arg.value();
    throw DomainError(os.str());
  }
  require_not_singular(arg, op);
}

}  // namespace

std::string_view to_string(Convention c) {
  return c == Convention::Modulus ? "modulus" : "parameter";
}

EllipticArgument EllipticArgument::modulus(double k) {
  if (!std::isfinite(k) || std::fabs(k) > 1.0) bad_argument("modulus must satisfy |k| <= 1", k);
  return {k, std::sqrt((1.0 - k) * (1.0 + k)), Convention::Modulus, false};
}

EllipticArgument EllipticArgument::parameter(double m) {
  if (!std::isfinite(m) || m > 1.0) bad_argument("parameter must satisfy m <= 1", m);
  return {m, 1.0 - m, Convention::Parameter, false};
}

EllipticArgument EllipticArgument::modulus_from_complement(double k_prime) {
  if (!(k_prime >= 0.0 && k_prime <= 1.0)) bad_argument("complementary modulus must lie in [0, 1]", k_prime);
  return {std::sqrt((1.0 - k_prime) * (1.0 + k_prime)), k_prime, Convention::Modulus, true};
}

EllipticArgument EllipticArgument::parameter_from_complement(double one_minus_m) {
  if (!(one_minus_m >= 0.0 && one_minus_m <= 1.0)) bad_argument("1 - m must lie in [0, 1]", one_minus_m);
  return {1.0 - one_minus_m, one_minus_m, Convention::Parameter, true};
}

double EllipticArgument::complementary_modulus() const {
  return convention_ == Convention::Modulus ? complement_ : std::sqrt(complement_);
}

double EllipticArgument::parameter_value() const {
  return convention_ == Convention::Modulus ? value_ * value_ : value_;
}

EllipticArgument EllipticArgument::to_modulus() const {
  if (convention_ == Convention::Modulus) return *this;
  if (value_ < 0.0) bad_argument("negative parameter has no real modulus", value_);
  return {std::sqrt(value_), std::sqrt(complement_), Convention::Modulus, exact_complement_};
}

EllipticArgument EllipticArgument::to_parameter() const {
  if (convention_ == Convention::Parameter) return *this;
  return {value_ * value_, complement_ * complement_, Convention::Parameter, exact_complement_};
}

EllipticArgument EllipticArgument::in(Convention c) const {
  return c == Convention::Modulus ? to_modulus() : to_parameter();
}

EllipticArgument EllipticArgument::complementary() const {
  if (value_ < 0.0) bad_argument("complementary argument needs a nonnegative value", value_);
  return {complement_, value_, convention_, true};
}

bool EllipticArgument::near_singular() const {
  if (!(complement_ > 0.0)) return true;
  return !exact_complement_ && value_ >= 1.0 - kSingularCutoff;
}

double agm(double x, double y, int& iterations) {
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    std::ostringstream os;
    os.precision(17);
    os << "agm requires positive finite inputs, got (" << x << ", " << y << ")";
    throw DomainError(os.str());
  }
  double a = x;
  double b = y;
  iterations = 0;
  // 64 is far beyond the quadratic-convergence regime for any finite pair.
  while (std::fabs(a - b) > 4.0 * kEps * a && iterations < 64) {
    const double next_a = 0.5 * (a + b);
    const double next_b = std::sqrt(a * b);
    ++iterations;
    if (next_a == a && next_b == b) break;
    a = next_a;
    b = next_b;
  }
  return a;
}

double agm(double x, double y) {
  int iterations = 0;
  return agm(x, y, iterations);
}

double ellint_K(const EllipticArgument& arg) {
  require_not_singular(arg, "ellint_K");
  return std::numbers::pi / (2.0 * agm(1.0, arg.complementary_modulus()));
}

double ellint_E(const EllipticArgument& arg) {
  if (!(arg.complement() > 0.0)) return 1.0;
  require_not_singular(arg, "ellint_E");
  // E = K (1 - sum_{n>=0} 2^{n-1} c_n^2), c_0^2 = m, c_{n+1} = (a_n - b_n)/2.
  double a = 1.0;
  double b = arg.complementary_modulus();
  CompensatedSum correction(0.5 * arg.parameter_value());
  double weight = 0.5;
  for (int i = 0; i < 64; ++i) {
    const double c = 0.5 * (a - b);
    const double next_a = 0.5 * (a + b);
    const double next_b = std::sqrt(a * b);
    weight *= 2.0;
    correction += weight * c * c;
    a = next_a;
    b = next_b;
    if (std::fabs(c) <= 4.0 * kEps * a) break;
  }
  const double K = std::numbers::pi / (2.0 * a);
  return K * (1.0 - correction.value());
}

double dK(const EllipticArgument& arg) {
  require_interior(arg, "dK");
  const double K = ellint_K(arg);
  const double E = ellint_E(arg);
  if (arg.convention() == Convention::Modulus) {
    const double k = arg.value();
    const double kp2 = arg.complement() * arg.complement();
    return (E - kp2 * K) / (k * kp2);
  }
  const double m = arg.value();
  const double m1 = arg.complement();
  return (E - m1 * K) / (2.0 * m * m1);
}

double legendre_defect(const EllipticArgument& arg) {
  require_interior(arg, "legendre_defect");
  const EllipticArgument comp = arg.complementary();
  const double K = ellint_K(arg);
  const double E = ellint_E(arg);
  const double Kc = ellint_K(comp);
  const double Ec = ellint_E(comp);
  return E * Kc + Ec * K - K * Kc - std::numbers::pi / 2.0;
}

}  // namespace ellid

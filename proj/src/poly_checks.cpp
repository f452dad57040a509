#include "ellid/poly_checks.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ellid/errors.hpp"
#include "ellid/nome.hpp"
#include "ellid/series.hpp"
#include "ellid/theta.hpp"

namespace ellid {

namespace {

constexpr double kPi = std::numbers::pi;

void require_collapse_shape(const PolynomialSpec& F) {
  if (!F.is_even()) throw ConstraintError("collapse: F must be even; odd coefficients present");
  if (F.coefficient(0) != 0.0 || F.coefficient(2) != 0.0) {
    throw ConstraintError("collapse: F(0) = F'(0) = F''(0) = 0 required");
  }
}

void require_positive(double a, const char* what) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": parameter a must be positive, got " << a;
    throw DomainError(os.str());
  }
}

// |f|(x) with absolute coefficients, x >= 0.
double abs_poly(const PolynomialSpec& f, double x) {
  double acc = 0.0;
  for (int n = f.degree(); n >= 0; --n) acc = acc * x + std::fabs(f.coefficient(n));
  return acc;
}

// sum_{N>=1} [f(xN) e^{-alpha N} + sign * f(-xN) e^{alpha N}] / (w(N) sinh(beta N))
// with w(N) = 2N or 1. Each hyperbolic ratio is folded into exponentials of
// negative argument.
SeriesResult two_sided_sum(const PolynomialSpec& f, double x_scale, double alpha, double beta, double sign,
                           bool over_2n, const TruncationPolicy& policy, const char* what) {
  return sum_series(
      [&](std::int64_t n) {
        const double N = static_cast<double>(n);
        const double x = x_scale * N;
        const double denom = -std::expm1(-2.0 * beta * N) * (over_2n ? N : 0.5);
        const double down = std::exp(-alpha * N - beta * N);
        const double up = std::exp(alpha * N - beta * N);
        const double value = (f(x) * down + sign * f(-x) * up) / denom;
        const double envelope = abs_poly(f, x) * (down + up) / denom;
        return Term{value, envelope};
      },
      policy, 1, 0.0, what);
}

double log_P0(double a, const TruncationPolicy& policy, std::size_t& terms) {
  const SeriesResult p0 = q_product_P0(Nome::pi_times(a), policy);
  terms += p0.terms_used;
  return std::log(p0.value);
}

}  // namespace

std::vector<double> collapse_inner_coefficients(const PolynomialSpec& F) {
  require_collapse_shape(F);
  std::vector<double> c(static_cast<std::size_t>(std::max(F.degree(), 0)) + 1, 0.0);
  for (int k = 2; 2 * k <= F.degree(); ++k) {
    const double sign = (k & 1) ? -1.0 : 1.0;
    c[static_cast<std::size_t>(2 * k)] = F.g(2 * k) * sign * series::zeta_even(k) / std::pow(2.0 * kPi, 2 * k);
  }
  return c;
}

double collapse_inner_sum(const PolynomialSpec& F, double t) {
  const std::vector<double> c = collapse_inner_coefficients(F);
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double collapse_integral_term(const PolynomialSpec& F) {
  const std::vector<double> c = collapse_inner_coefficients(F);
  CompensatedSum acc;
  for (std::size_t p = 4; p < c.size(); p += 2) {
    const double pd = static_cast<double>(p);
    acc += 2.0 * c[p] * (std::pow(2.0, pd) - 1.0) / pd;
  }
  return acc.value();
}

double collapse_zeta_term(const PolynomialSpec& fe) {
  if (!fe.is_even()) throw ConstraintError("collapse: f_e must be even; odd coefficients present");
  CompensatedSum acc;
  for (int nu = 1; 2 * nu <= fe.degree(); ++nu) {
    acc += fe.coefficient(2 * nu) * (std::pow(2.0, 2 * nu) - 1.0) * series::zeta_neg(nu);
  }
  return acc.value();
}

SeriesResult collapse_alternating_sum(const PolynomialSpec& F, double a, const TruncationPolicy& policy) {
  require_positive(a, "collapse_alternating_sum");
  const PolynomialSpec p = F.divided_by_x();
  SeriesResult r = series::alt_poly_over_expm1(a, p.coefficients(), policy);
  r.value *= 2.0;
  r.tail_bound *= 2.0;
  return r;
}

SeriesResult collapse_sinh_sum(const PolynomialSpec& F, double b, const TruncationPolicy& policy) {
  require_positive(b, "collapse_sinh_sum");
  if (!F.is_even()) throw ConstraintError("collapse: F must be even; odd coefficients present");
  if (F.coefficient(0) != 0.0) throw ConstraintError("collapse: F(0) = 0 required");
  // F(ibn)/n = sum_k f_{2k} (-1)^k b^{2k} n^{2k-1}
  std::vector<double> p(static_cast<std::size_t>(std::max(F.degree(), 1)), 0.0);
  for (int k = 1; 2 * k <= F.degree(); ++k) {
    const double sign = (k & 1) ? -1.0 : 1.0;
    p[static_cast<std::size_t>(2 * k - 1)] = F.coefficient(2 * k) * sign * std::pow(b, 2 * k);
  }
  return series::poly_over_sinh(b, p, policy);
}

SeriesResult laplace_theta4_lhs(const PolynomialSpec& f, double a, double s, LaplaceForm which,
                        const TruncationPolicy& policy) {
  require_positive(a, "laplace_theta4_lhs");
  const Nome q = Nome::pi_times(a);
  SeriesResult out;
  if (f.is_zero()) return out;
  if (which == LaplaceForm::Derivative) {
    const LogThetaSeries g = log_theta_series(ThetaKind::Theta4ImagHalf, f.degree(), s, q, policy);
    CompensatedSum acc;
    for (int n = 0; n <= f.degree(); ++n) {
      const double sign = (n & 1) ? -1.0 : 1.0;
      acc += sign * f.coefficient(n) * g.values[static_cast<std::size_t>(n)];
    }
    return {acc.value(), g.terms_used, g.tail_bound};
  }
  CompensatedSum acc;
  for (int n = 0; n <= f.degree(); ++n) {
    if (f.coefficient(n) == 0.0) continue;
    const double t = 0.5 * (s + n);
    const ThetaEval th = theta4_imag(t, q, policy);
    if (!(th.value > 0.0)) {
      std::ostringstream os;
      os.precision(17);
      os << "theta4(i t) is not positive at t = " << t << " (value " << th.value << ")";
      if (th.value == 0.0) throw PoleError(os.str());
      throw DomainError(os.str());
    }
    acc += f.coefficient(n) * std::log(th.value);
    out.terms_used += th.terms_used;
    out.tail_bound += std::fabs(f.coefficient(n)) * th.tail_bound / th.value;
  }
  out.value = acc.value();
  return out;
}

SeriesResult laplace_theta4_rhs(const PolynomialSpec& f, double a, double s, LaplaceForm which,
                        const TruncationPolicy& policy) {
  require_positive(a, "laplace_theta4_rhs");
  const double beta = kPi * a;
  std::size_t terms = 0;
  if (which == LaplaceForm::Derivative) {
    if (!(std::fabs(s) < beta)) {
      std::ostringstream os;
      os.precision(17);
      os << "laplace derivative form: |s| < pi a required for convergence, got s = " << s << ", a = " << a;
      throw DomainError(os.str());
    }
    const double head = f.coefficient(0) == 0.0 ? 0.0 : f.coefficient(0) * log_P0(a, policy, terms);
    const SeriesResult tail = two_sided_sum(f, 1.0, s, beta, 1.0, true, policy, "laplace derivative form");
    return {head - tail.value, terms + tail.terms_used, tail.tail_bound};
  }
  const double d = std::max(f.degree(), 0);
  if (!(d + s < beta) || !(-s < beta)) {
    std::ostringstream os;
    os.precision(17);
    os << "laplace shifted form: deg f + s < pi a and -s < pi a required, got deg " << d << ", s = " << s << ", a = " << a;
    throw DomainError(os.str());
  }
  const double f1 = f(1.0);
  const double head = f1 == 0.0 ? 0.0 : f1 * log_P0(a, policy, terms);
  // f(e^{-N}) e^{-Ns} + f(e^{N}) e^{Ns} = sum_j f_j 2 cosh(N (j + s))
  const SeriesResult tail = sum_series(
      [&](std::int64_t n) {
        const double N = static_cast<double>(n);
        const double denom = -std::expm1(-2.0 * beta * N) * N;
        double value = 0.0;
        double envelope = 0.0;
        for (int j = 0; j <= f.degree(); ++j) {
          const double fj = f.coefficient(j);
          if (fj == 0.0) continue;
          const double w = std::exp(N * (j + s) - beta * N) + std::exp(-N * (j + s) - beta * N);
          value += fj * w;
          envelope += std::fabs(fj) * w;
        }
        return Term{value / denom, envelope / denom};
      },
      policy, 1, 0.0, "laplace shifted form");
  return {head - tail.value, terms + tail.terms_used, tail.tail_bound};
}

SeriesResult laplace_theta2_lhs(const PolynomialSpec& f, double a, double s, const TruncationPolicy& policy) {
  require_positive(a, "laplace_theta2_lhs");
  if (f.is_zero()) return {};
  const Nome q = Nome::from_exponent(1.0 / a, 1.0, "exp(-1/a)");
  const LogThetaSeries g = log_theta_series(ThetaKind::Theta2, f.degree(), s, q, policy);
  CompensatedSum acc;
  for (int n = 0; n <= f.degree(); ++n) {
    const double sign = (n & 1) ? -1.0 : 1.0;
    acc += sign * f.coefficient(n) * g.values[static_cast<std::size_t>(n)];
  }
  return {acc.value(), g.terms_used, g.tail_bound};
}

namespace {

void require_theta2_s(double s) {
  if (!(std::fabs(s) < kPi / 2.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "laplace theta2: |s| < pi/2 required for convergence, got s = " << s;
    throw DomainError(os.str());
  }
}

}  // namespace

SeriesResult laplace_theta2_rhs_printed(const PolynomialSpec& f, double a, double s, const TruncationPolicy& policy) {
  require_positive(a, "laplace_theta2_rhs");
  require_theta2_s(s);
  const SeriesResult tail =
      two_sided_sum(f, 2.0 * kPi * a, 2.0 * kPi * a * s, kPi * kPi * a, -1.0, false, policy, "laplace theta2");
  const double value = 2.0 * a - 2.0 * a * f(0.0) * s + a * kPi * tail.value;
  return {value, tail.terms_used, a * kPi * tail.tail_bound};
}

SeriesResult laplace_theta2_rhs_derived(const PolynomialSpec& f, double a, double s, const TruncationPolicy& policy) {
  require_positive(a, "laplace_theta2_rhs");
  require_theta2_s(s);
  if (f.coefficient(0) != 0.0) throw ConstraintError("laplace theta2: f(0) = 0 required");
  const SeriesResult tail =
      two_sided_sum(f, 2.0 * kPi * a, 2.0 * kPi * a * s, kPi * kPi * a, 1.0, true, policy, "laplace theta2");
  const double value = 2.0 * a * f.coefficient(1) * s - 2.0 * a * f.coefficient(2) - tail.value;
  return {value, tail.terms_used, tail.tail_bound};
}

}  // namespace ellid

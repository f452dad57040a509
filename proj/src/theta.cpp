#include "ellid/theta.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ellid/errors.hpp"

namespace ellid {

Nome Nome::from_q(double q) {
  if (!(q >= 0.0 && q < 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "nome must lie in [0, 1), got " << q;
    throw DomainError(os.str());
  }
  const double log_q = q == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(q);
  return {q, log_q, -log_q, 1.0, "q"};
}

Nome Nome::from_exponent(double coefficient, double parameter, std::string label) {
  const double exponent = coefficient * parameter;
  if (!(coefficient > 0.0) || !(parameter > 0.0) || !std::isfinite(exponent)) {
    std::ostringstream os;
    os.precision(17);
    os << "nome exponent must be positive and finite, got " << coefficient << " * " << parameter;
    throw DomainError(os.str());
  }
  if (label.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << "exp(-" << coefficient << "*" << parameter << ")";
    label = os.str();
  }
  return {std::exp(-exponent), -exponent, coefficient, parameter, std::move(label)};
}

Nome Nome::pi_times(double a) { return from_exponent(std::numbers::pi, a, "exp(-pi*a)"); }

namespace {

// q^{x} for x >= 0 using the stored exponent; exact zero for q = 0.
double nome_power(const Nome& q, double x) { return std::exp(x * q.log_q()); }

double sign_alt(std::int64_t n) { return (n & 1) ? -1.0 : 1.0; }

// d^j/dx^j cos(x) evaluated from precomputed cos and sin.
double cos_derivative(int j, double c, double s) {
  switch (j & 3) {
    case 0: return c;
    case 1: return -s;
    case 2: return -c;
    default: return s;
  }
}

}  // namespace

ThetaEval theta4(double u, const Nome& q, const TruncationPolicy& policy) {
  policy.validate();
  if (q.is_zero()) return {1.0, 0, 0.0};
  return sum_series(
      [&](std::int64_t n) {
        const double w = 2.0 * nome_power(q, static_cast<double>(n * n));
        return Term{sign_alt(n) * w * std::cos(2.0 * static_cast<double>(n) * u), w};
      },
      policy, 1, 1.0, "theta4");
}

ThetaEval theta4_imag(double t, const Nome& q, const TruncationPolicy& policy) {
  policy.validate();
  if (q.is_zero()) return {1.0, 0, 0.0};
  return sum_series(
      [&](std::int64_t n) {
        const double nn = static_cast<double>(n);
        // q^{n^2} cosh(2nt) split so neither factor overflows.
        const double up = std::exp(nn * nn * q.log_q() + 2.0 * nn * t);
        const double down = std::exp(nn * nn * q.log_q() - 2.0 * nn * t);
        const double w = up + down;
        return Term{sign_alt(n) * w, w};
      },
      policy, 1, 1.0, "theta4_imag");
}

ThetaEval theta2(double z, const Nome& q, const TruncationPolicy& policy) {
  policy.validate();
  if (q.is_zero()) return {0.0, 0, 0.0};
  return sum_series(
      [&](std::int64_t n) {
        const double h = static_cast<double>(n) + 0.5;
        const double w = 2.0 * nome_power(q, h * h);
        return Term{w * std::cos(2.0 * h * z), w};
      },
      policy, 0, 0.0, "theta2");
}

ThetaEval theta3(double z, const Nome& q, const TruncationPolicy& policy) {
  policy.validate();
  if (q.is_zero()) return {1.0, 0, 0.0};
  return sum_series(
      [&](std::int64_t n) {
        const double w = 2.0 * nome_power(q, static_cast<double>(n * n));
        return Term{w * std::cos(2.0 * static_cast<double>(n) * z), w};
      },
      policy, 1, 1.0, "theta3");
}

ThetaDerivatives theta_raw_derivatives(ThetaKind kind, double s, const Nome& q, int order,
                                       const TruncationPolicy& policy) {
  policy.validate();
  if (order < 0 || order > kMaxLogDerivativeOrder) {
    std::ostringstream os;
    os << "theta derivative order " << order << " outside [0, " << kMaxLogDerivativeOrder << "]";
    throw UnsupportedOrderError(os.str());
  }
  const std::size_t count = static_cast<std::size_t>(order) + 1;
  ThetaDerivatives out;
  out.values.assign(count, 0.0);
  const double constant = kind == ThetaKind::Theta2 ? 0.0 : 1.0;
  if (q.is_zero()) {
    out.values[0] = constant;
    out.scale = constant;
    return out;
  }

  std::vector<CompensatedSum> acc(count);
  acc[0] += constant;
  std::vector<detail::StoppingRule> rules(count, detail::StoppingRule(policy));
  CompensatedSum scale(constant);
  std::vector<double> envelope(count);

  const std::int64_t first = kind == ThetaKind::Theta2 ? 0 : 1;
  for (std::size_t i = 0; i < policy.cap; ++i) {
    const std::int64_t n = first + static_cast<std::int64_t>(i);
    const double nn = static_cast<double>(n);
    double base = 0.0;      // magnitude of the order-0 term
    double frequency = 0.0; // chain-rule factor per derivative
    double even_part = 0.0; // value multiplying even-order derivatives
    double odd_part = 0.0;  // value multiplying odd-order derivatives
    bool trigonometric = true;
    switch (kind) {
      case ThetaKind::Theta2: {
        const double h = nn + 0.5;
        base = 2.0 * nome_power(q, h * h);
        frequency = 2.0 * h;
        even_part = std::cos(frequency * s);
        odd_part = std::sin(frequency * s);
        break;
      }
      case ThetaKind::Theta4: {
        base = 2.0 * nome_power(q, nn * nn);
        frequency = 2.0 * nn;
        even_part = sign_alt(n) * std::cos(frequency * s);
        odd_part = sign_alt(n) * std::sin(frequency * s);
        break;
      }
      case ThetaKind::Theta4ImagHalf: {
        trigonometric = false;
        frequency = nn;
        const double up = std::exp(nn * nn * q.log_q() + nn * s);
        const double down = std::exp(nn * nn * q.log_q() - nn * s);
        base = up + down;  // 2 q^{n^2} cosh(ns)
        even_part = sign_alt(n);
        odd_part = sign_alt(n) * (up - down) / base;
        break;
      }
    }
    double power = 1.0;
    bool done = true;
    for (std::size_t j = 0; j < count; ++j) {
      double term = 0.0;
      if (trigonometric) {
        term = base * power * cos_derivative(static_cast<int>(j), even_part, odd_part);
      } else {
        term = base * power * ((j & 1) ? odd_part : even_part);
      }
      envelope[j] = base * power;
      if (!std::isfinite(term) || !std::isfinite(envelope[j])) {
        detail::throw_non_convergence("theta derivatives", i + 1);
      }
      acc[j] += term;
      power *= frequency;
    }
    scale += base;
    for (std::size_t j = 0; j < count; ++j) {
      if (!rules[j].observe(envelope[j], acc[j].value())) done = false;
    }
    if (done) {
      out.terms_used = i + 1;
      for (std::size_t j = 0; j < count; ++j) {
        out.values[j] = acc[j].value();
        out.tail_bound = std::max(out.tail_bound, rules[j].tail());
      }
      out.scale = scale.value();
      return out;
    }
  }
  detail::throw_non_convergence("theta derivatives", policy.cap);
}

double theta_u_derivative(ThetaKind kind, double z, const Nome& q, const TruncationPolicy& policy) {
  return theta_raw_derivatives(kind, z, q, 1, policy).values[1];
}

std::vector<double> log_derivatives_from_raw(const std::vector<double>& raw) {
  std::vector<double> g(raw.size(), 0.0);
  if (raw.empty()) return g;
  const double f0 = raw[0];
  g[0] = std::log(f0);
  for (std::size_t n = 1; n < raw.size(); ++n) {
    // binomial C(n-1, j), built incrementally
    CompensatedSum known;
    double binom = 1.0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      known += binom * g[j + 1] * raw[n - 1 - j];
      binom = binom * static_cast<double>(n - 1 - j) / static_cast<double>(j + 1);
    }
    g[n] = (raw[n] - known.value()) / f0;
  }
  return g;
}

LogThetaSeries log_theta_series(ThetaKind kind, int order, double s, const Nome& q,
                                const TruncationPolicy& policy) {
  const ThetaDerivatives raw = theta_raw_derivatives(kind, s, q, order, policy);
  const double value = raw.values[0];
  if (!(std::fabs(value) > 1e-8 * raw.scale)) {
    std::ostringstream os;
    os.precision(17);
    os << "theta vanishes at s = " << s << " (value " << value << ", scale " << raw.scale << ")";
    throw PoleError(os.str());
  }
  if (value < 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "theta is negative at s = " << s << "; log is undefined on the real line";
    throw DomainError(os.str());
  }
  return {log_derivatives_from_raw(raw.values), raw.terms_used, raw.tail_bound};
}

std::vector<double> log_theta_derivatives(ThetaKind kind, int order, double s, const Nome& q,
                                          const TruncationPolicy& policy) {
  return log_theta_series(kind, order, s, q, policy).values;
}

LogThetaDerivative log_theta_derivative(ThetaKind kind, int order, double s, const Nome& q,
                                        const TruncationPolicy& policy) {
  const std::vector<double> all = log_theta_derivatives(kind, order, s, q, policy);
  return {order, s, q, all.back()};
}

SeriesResult q_product_P0(const Nome& q, const TruncationPolicy& policy) {
  policy.validate();
  if (q.is_zero()) return {1.0, 0, 0.0};
  const SeriesResult log_sum = sum_series(
      [&](std::int64_t n) { return std::log1p(-nome_power(q, 2.0 * static_cast<double>(n))); }, policy, 1, 0.0,
      "P0");
  const double value = std::exp(log_sum.value);
  return {value, log_sum.terms_used, value * std::expm1(log_sum.tail_bound)};
}

SeriesResult euler_product(const Nome& q, const TruncationPolicy& policy) {
  policy.validate();
  if (q.is_zero()) return {1.0, 0, 0.0};
  const SeriesResult log_sum = sum_series(
      [&](std::int64_t n) { return std::log1p(-nome_power(q, static_cast<double>(n))); }, policy, 1, 0.0,
      "euler_product");
  const double value = std::exp(log_sum.value);
  return {value, log_sum.terms_used, value * std::expm1(log_sum.tail_bound)};
}

}  // namespace ellid

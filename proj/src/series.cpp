#include "ellid/series.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ellid/errors.hpp"

namespace ellid::series {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(const char* series, const char* name, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << series << ": " << name << " must be positive and finite, got " << v;
    throw DomainError(os.str());
  }
}

void require_finite(const char* series, const char* name, double v) {
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << series << ": " << name << " must be finite";
    throw DomainError(os.str());
  }
}

double alt(std::int64_t n) { return (n & 1) ? -1.0 : 1.0; }

// 1 / sinh(x), x > 0, without overflow.
double csch(double x) { return 2.0 * std::exp(-x) / -std::expm1(-2.0 * x); }

// 1 / cosh(x) without overflow.
double sech(double x) {
  const double e = std::exp(-std::fabs(x));
  return 2.0 * e / (1.0 + e * e);
}

double horner(std::span<const double> c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double abs_horner(std::span<const double> c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + std::fabs(*it);
  return acc;
}

}  // namespace

SeriesResult cosh_over_n_sinh(double a, double t, S1Form form, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S1", "a", a);
  require_finite("S1", "t", t);
  const double pa = kPi * a;
  if (form == S1Form::Trigonometric) {
    return sum_series(
        [&](std::int64_t n) {
          const double nn = static_cast<double>(n);
          const double env = csch(pa * nn) / nn;
          return Term{std::cos(2.0 * t * nn) * env, env};
        },
        policy, 1, 0.0, "S1");
  }
  const double rate = form == S1Form::Statement ? 2.0 * t : t;
  if (!(std::fabs(rate) < pa)) {
    std::ostringstream os;
    os.precision(17);
    os << "S1: requires " << (form == S1Form::Statement ? "2|t|" : "|t|") << " < pi a (t = " << t << ", a = " << a
       << ")";
    throw DomainError(os.str());
  }
  return sum_series(
      [&](std::int64_t n) {
        const double nn = static_cast<double>(n);
        const double numer = std::exp((rate - pa) * nn) + std::exp((-rate - pa) * nn);
        return numer / (-std::expm1(-2.0 * pa * nn) * nn);
      },
      policy, 1, 0.0, "S1");
}

SeriesResult alt_square_over_n_expm1(double theta, double c, SquareKind kind, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S2", "c", c);
  require_finite("S2", "theta", theta);
  if (kind == SquareKind::Sin) {
    return sum_series(
        [&](std::int64_t n) {
          const double nn = static_cast<double>(n);
          const double env = 1.0 / (nn * std::expm1(c * nn));
          const double s = std::sin(theta * nn);
          return Term{alt(n) * s * s * env, env};
        },
        policy, 1, 0.0, "S2");
  }
  const double th = std::fabs(theta);
  if (!(2.0 * th < c)) {
    std::ostringstream os;
    os.precision(17);
    os << "S2: sinh^2 form requires 2|theta| < c (theta = " << theta << ", c = " << c << ")";
    throw DomainError(os.str());
  }
  return sum_series(
      [&](std::int64_t n) {
        const double nn = static_cast<double>(n);
        const double m = std::expm1(-2.0 * th * nn);
        const double v = std::exp((2.0 * th - c) * nn) * m * m / (4.0 * -std::expm1(-c * nn) * nn);
        return alt(n) * v;
      },
      policy, 1, 0.0, "S2");
}

SeriesResult alt_n_over_expm1(double c, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S3", "c", c);
  return sum_series(
      [&](std::int64_t n) {
        const double nn = static_cast<double>(n);
        return alt(n) * nn / std::expm1(c * nn);
      },
      policy, 1, 0.0, "S3");
}

SeriesResult n_over_sinh(double b, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S4", "b", b);
  return sum_series(
      [&](std::int64_t n) {
        const double nn = static_cast<double>(n);
        return nn * csch(kPi * b * nn);
      },
      policy, 1, 0.0, "S4");
}

SeriesResult sech_sum(double a, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S5", "a", a);
  return sum_series([&](std::int64_t n) { return sech(kPi * a * static_cast<double>(n)); }, policy, 1, 0.0,
                    "S5");
}

SeriesResult sech2_sum(double x, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S5sq", "x", x);
  return sum_series(
      [&](std::int64_t n) {
        const double s = sech(kPi * x * static_cast<double>(n));
        return s * s;
      },
      policy, 1, 0.0, "S5sq");
}

SeriesResult alt_sin_over_expm1(double a, double v, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S6", "a", a);
  require_finite("S6", "v", v);
  return sum_series(
      [&](std::int64_t n) {
        const double nn = static_cast<double>(n);
        const double env = 1.0 / std::expm1(a * nn);
        return Term{alt(n) * std::sin(nn * v) * env, env};
      },
      policy, 1, 0.0, "S6");
}

SeriesResult sin_over_cos_plus_cosh(double a, double v, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S6closed", "a", a);
  require_finite("S6closed", "v", v);
  const double sv = std::sin(v);
  const double cv = std::cos(v);
  return sum_series(
      [&](std::int64_t n) {
        // sin v / (cos v + cosh x) = 2 e^{-x} sin v / (1 + 2 cos v e^{-x} + e^{-2x})
        const double e = std::exp(-a * static_cast<double>(n));
        const double env = e / ((1.0 - e) * (1.0 - e));
        return Term{-sv * e / (1.0 + 2.0 * cv * e + e * e), env};
      },
      policy, 1, 0.0, "S6closed");
}

SeriesResult csch_sinh(double a, double v, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S7", "a", a);
  if (!(std::fabs(v) < kPi)) {
    std::ostringstream os;
    os.precision(17);
    os << "S7: requires |v| < pi, got v = " << v;
    throw DomainError(os.str());
  }
  const double sign = v < 0.0 ? -1.0 : 1.0;
  const double alpha = 2.0 * kPi * std::fabs(v) / a;
  const double beta = 2.0 * kPi * kPi / a;
  return sum_series(
      [&](std::int64_t n) {
        const double nn = static_cast<double>(n);
        const double env = std::exp((alpha - beta) * nn) / -std::expm1(-2.0 * beta * nn);
        return Term{sign * env * -std::expm1(-2.0 * alpha * nn), env};
      },
      policy, 1, 0.0, "S7");
}

SeriesResult exp_over_cube(double b, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S8", "b", b);
  return sum_series(
      [&](std::int64_t n) {
        const double e = std::exp(-2.0 * kPi * static_cast<double>(n) / b);
        const double d = 1.0 + e;
        return e * e / (d * d * d);
      },
      policy, 1, 0.0, "S8");
}

SeriesResult lambert_e2(const Nome& q, const TruncationPolicy& policy) {
  policy.validate();
  if (q.is_zero()) return {0.0, 0, 0.0};
  return sum_series(
      [&](std::int64_t n) {
        const double x = static_cast<double>(n) * q.log_q();
        return static_cast<double>(n) * std::exp(x) / -std::expm1(x);
      },
      policy, 1, 0.0, "S9");
}

SeriesResult alt_sin_lambert(double z, const Nome& q, const TruncationPolicy& policy) {
  policy.validate();
  require_finite("S10", "z", z);
  if (q.is_zero()) return {0.0, 0, 0.0};
  return sum_series(
      [&](std::int64_t n) {
        const double nn = static_cast<double>(n);
        const double x = 2.0 * nn * q.log_q();
        const double env = std::exp(x) / -std::expm1(x);
        return Term{alt(n) * std::sin(2.0 * nn * z) * env, env};
      },
      policy, 1, 0.0, "S10");
}

SeriesResult n_cosh_over_sinh_double(double a, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S11", "a", a);
  return sum_series(
      [&](std::int64_t n) {
        const double nn = static_cast<double>(n);
        const double x = a * nn * kPi;
        // cosh(x) / sinh(2x) = e^{-x} (1 + e^{-2x}) / (1 - e^{-4x})
        const double e = std::exp(-x);
        return nn * e * (1.0 + e * e) / -std::expm1(-4.0 * x);
      },
      policy, 1, 0.0, "S11");
}

SeriesResult alt_poly_over_expm1(double c, std::span<const double> coefficients, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S12", "c", c);
  return sum_series(
      [&](std::int64_t n) {
        const double nn = static_cast<double>(n);
        const double d = std::expm1(c * nn);
        return Term{alt(n) * horner(coefficients, nn) / d, abs_horner(coefficients, nn) / d};
      },
      policy, 1, 0.0, "S12");
}

SeriesResult poly_over_sinh(double b, std::span<const double> coefficients, const TruncationPolicy& policy) {
  policy.validate();
  require_positive("S13", "b", b);
  return sum_series(
      [&](std::int64_t n) {
        const double nn = static_cast<double>(n);
        const double w = csch(kPi * b * nn);
        return Term{horner(coefficients, nn) * w, abs_horner(coefficients, nn) * w};
      },
      policy, 1, 0.0, "S13");
}

namespace {

// B_{2n} for n = 0..20.
constexpr std::array<double, kBernoulliTableSize> kBernoulli = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
};

}  // namespace

double bernoulli_B2n(int n) {
  if (n < 0 || n >= kBernoulliTableSize) {
    std::ostringstream os;
    os << "bernoulli_B2n: index " << n << " outside table [0, " << kBernoulliTableSize - 1 << "]";
    throw RangeError(os.str());
  }
  return kBernoulli[static_cast<std::size_t>(n)];
}

double zeta_neg(int nu) {
  if (nu < 1) throw RangeError("zeta_neg: nu must be a positive integer");
  return -bernoulli_B2n(nu) / (2.0 * nu);
}

double zeta_even(int k) {
  if (k < 1) throw RangeError("zeta_even: k must be a positive integer");
  const double b = bernoulli_B2n(k);
  double factorial = 1.0;
  for (int i = 2; i <= 2 * k; ++i) factorial *= i;
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;
  return sign * b * std::pow(2.0 * kPi, 2 * k) / (2.0 * factorial);
}

}  // namespace ellid::series

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ellid/elliptic.hpp"
#include "ellid/errors.hpp"
#include "ellid/series.hpp"
#include "ellid/theta.hpp"
#include "oracle_helpers.hpp"
#include "series_grid.hpp"

using namespace ellid;
using namespace ellid::series;
using oracle::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr long double kPiL = std::numbers::pi_v<long double>;

template <typename F>
double direct(F&& term, long last = 400) {
  return static_cast<double>(oracle::direct_sum(term, 1, last));
}

long double alt(long n) { return (n & 1) ? -1.0L : 1.0L; }
}  // namespace

TEST_CASE("S1 values, parity and domain") {
  CHECK(rel_err(cosh_over_n_sinh(1.0, 0.0).value, 0.088512592659163109184) < 1e-14);
  const double d = direct([](long n) { return std::cosh(0.6L * n) / (n * std::sinh(kPiL * n)); }, 60);
  CHECK(rel_err(cosh_over_n_sinh(1.0, 0.3).value, d) < 1e-14);
  const Nome q = Nome::pi_times(1.0);
  CHECK(std::fabs(cosh_over_n_sinh(1.0, 0.0).value -
                  (std::log(q_product_P0(q).value) - std::log(theta4(0.0, q).value))) < 1e-11);
  CHECK(cosh_over_n_sinh(2.0, 1e-9).value == doctest::Approx(cosh_over_n_sinh(2.0, 0.0).value).epsilon(1e-15));
  for (double t : {0.1, 0.7, 1.4}) {
    CHECK(cosh_over_n_sinh(1.0, t).value == cosh_over_n_sinh(1.0, -t).value);
    CHECK(cosh_over_n_sinh(1.0, t, S1Form::Restated).value == cosh_over_n_sinh(1.0, -t, S1Form::Restated).value);
  }
  CHECK(cosh_over_n_sinh(1.0, 0.25, S1Form::Restated).value ==
        doctest::Approx(cosh_over_n_sinh(1.0, 0.125).value).epsilon(1e-15));
  CHECK_THROWS_AS(cosh_over_n_sinh(1.0, kPi / 2), DomainError);
  CHECK_THROWS_AS(cosh_over_n_sinh(1.0, -2.0), DomainError);
  CHECK_THROWS_AS(cosh_over_n_sinh(1.0, kPi, S1Form::Restated), DomainError);
  CHECK_NOTHROW(cosh_over_n_sinh(1.0, 10.0, S1Form::Trigonometric));
  CHECK_THROWS_AS(cosh_over_n_sinh(0.0, 0.0), DomainError);
}

TEST_CASE("S2 against direct summation") {
  const double sin_form = direct([](long n) {
    const long double s = std::sin(0.4L * n);
    return alt(n) * s * s / (n * std::expm1(2 * kPiL * n));
  });
  CHECK(rel_err(alt_square_over_n_expm1(0.4, 2 * kPi, SquareKind::Sin).value, sin_form) < 1e-13);
  const double sinh_form = direct([](long n) {
    const long double s = std::sinh(0.4L * n);
    return alt(n) * s * s / (n * std::expm1(2 * kPiL * n));
  });
  CHECK(rel_err(alt_square_over_n_expm1(0.4, 2 * kPi, SquareKind::Sinh).value, sinh_form) < 1e-13);
  CHECK_THROWS_AS(alt_square_over_n_expm1(2.0, 3.0, SquareKind::Sinh), DomainError);
  CHECK_THROWS_AS(alt_square_over_n_expm1(0.1, -1.0, SquareKind::Sin), DomainError);
}

TEST_CASE("S3 values") {
  CHECK(rel_err(alt_n_over_expm1(2 * kPi).value, -0.0018639813783286376412) < 1e-14);
  CHECK(rel_err(alt_n_over_expm1(50.0).value, -1.928749847963917783e-22) < 1e-14);
  CHECK(rel_err(alt_n_over_expm1(50.0).value, -std::exp(-50.0)) < 1e-20 + 1e-15);
  const double d = direct([](long n) { return alt(n) * n / std::expm1(2 * kPiL * n); });
  CHECK(rel_err(alt_n_over_expm1(2 * kPi).value, d) < 1e-14);
  CHECK_THROWS_AS(alt_n_over_expm1(0.0), DomainError);
}

TEST_CASE("S4 values") {
  CHECK(rel_err(n_over_sinh(1.0).value, 0.094573019664761939514) < 1e-14);
  CHECK(rel_err(n_over_sinh(2.0).value, 0.0037488870297035679073) < 1e-14);
  const double d = direct([](long n) { return n / std::sinh(kPiL * n); }, 60);
  CHECK(rel_err(n_over_sinh(1.0).value, d) < 1e-14);
  const auto k = EllipticArgument::modulus(1.0 / std::sqrt(2.0));
  const double K = ellint_K(k);
  const double E = ellint_E(k);
  CHECK(std::fabs(n_over_sinh(1.0).value - K * (K - E) / (kPi * kPi)) < 1e-10);
}

TEST_CASE("S5 and S5sq values") {
  CHECK(rel_err(sech_sum(1.0).value, 0.090170299508048113023) < 1e-14);
  CHECK(rel_err(sech2_sum(1.0).value, 0.0074559255133145505649) < 1e-14);
  const double K = ellint_K(EllipticArgument::modulus(1.0 / std::sqrt(2.0)));
  CHECK(std::fabs(sech_sum(1.0).value - (K / kPi - 0.5)) < 1e-10);
  CHECK(std::fabs(sech2_sum(1.0).value + 4 * alt_n_over_expm1(2 * kPi).value) < 1e-10);
  const double d = direct([](long n) { return 1.0L / std::cosh(kPiL * n * 0.5L); }, 200);
  CHECK(rel_err(sech_sum(0.5).value, d) < 1e-14);
}

TEST_CASE("S6 and its closed form") {
  CHECK(alt_sin_over_expm1(2.0, 0.0).value == 0.0);
  CHECK(std::fabs(alt_sin_over_expm1(2.0, kPi).value) < 1e-15);
  CHECK(rel_err(alt_sin_over_expm1(2.0, 1.0).value, -0.11530322195080932674) < 1e-14);
  CHECK(std::fabs(alt_sin_over_expm1(2.0, 1.0).value - sin_over_cos_plus_cosh(2.0, 1.0).value) < 1e-12);
  for (double v : {0.3, 1.0, 2.5}) {
    CHECK(alt_sin_over_expm1(1.5, -v).value == -alt_sin_over_expm1(1.5, v).value);
  }
}

TEST_CASE("S7 values, parity and domain") {
  CHECK(csch_sinh(2.0, 0.0).value == 0.0);
  const SeriesResult r = csch_sinh(2.0, 1.0);
  CHECK(rel_err(r.value, 0.0011961095017268149997) < 1e-14);
  CHECK(r.tail_bound < 1e-14);
  for (double v : {0.2, 1.0, 3.0}) CHECK(csch_sinh(2.0, -v).value == -csch_sinh(2.0, v).value);
  CHECK_THROWS_AS(csch_sinh(2.0, kPi), DomainError);
  CHECK_THROWS_AS(csch_sinh(2.0, -4.0), DomainError);
}

TEST_CASE("S8 values") {
  CHECK(rel_err(exp_over_cube(1.0).value, 3.4678900241373064195e-6) < 1e-14);
  CHECK(rel_err(exp_over_cube(0.5).value, 1.2161429475909136988e-11) < 1e-14);
  CHECK(rel_err(exp_over_cube(2.0).value, 0.0016483277155343337845) < 1e-14);
  const double first = std::exp(2 * kPi / 0.1) / std::pow(1 + std::exp(2 * kPi / 0.1), 3);
  CHECK(rel_err(exp_over_cube(0.1).value, first) < 1e-14);
  for (double b : {0.5, 1.0, 2.0}) {
    double prev = HUGE_VAL;
    for (int n = 1; n < 20; ++n) {
      const double e = std::exp(2 * n * kPi / b);
      const double term = e / std::pow(1 + e, 3);
      CHECK(term < prev);
      prev = term;
    }
  }
}

TEST_CASE("S9 values") {
  CHECK(lambert_e2(Nome::from_q(0.0)).value == 0.0);
  const double v = lambert_e2(Nome::from_exponent(2 * kPi, 1.0)).value;
  CHECK(rel_err(v, 0.0018779308936928327244) < 1e-14);
  CHECK(rel_err(v, (1 - 3 / kPi) / 24) < 1e-13);
  const double d = direct([](long n) { return n * std::pow(0.5L, n) / (1 - std::pow(0.5L, n)); }, 200);
  CHECK(rel_err(lambert_e2(Nome::from_q(0.5)).value, d) < 1e-13);
  CHECK(rel_err(lambert_e2(Nome::from_q(0.5)).value, 2.7440338887594883605) < 1e-14);
}

TEST_CASE("S10 values and parity") {
  CHECK(alt_sin_lambert(0.0, Nome::from_q(0.3)).value == 0.0);
  CHECK(std::fabs(alt_sin_lambert(kPi / 2, Nome::from_q(0.3)).value) < 1e-15);
  const SeriesResult r = alt_sin_lambert(0.4, Nome::from_q(0.3));
  CHECK(rel_err(r.value, -0.063277274113847271759) < 1e-14);
  CHECK(r.tail_bound < 1e-14);
  for (double z : {0.1, 0.4, 1.2}) {
    CHECK(alt_sin_lambert(-z, Nome::from_q(0.3)).value == -alt_sin_lambert(z, Nome::from_q(0.3)).value);
  }
}

TEST_CASE("S11, S12 and S13 against direct summation") {
  const double d11 = direct([](long n) { return n * std::cosh(kPiL * n) / std::sinh(2 * kPiL * n); }, 80);
  CHECK(rel_err(n_cosh_over_sinh_double(1.0).value, d11) < 1e-14);
  const std::vector<double> c{0.5, -1.0, 2.0};
  const double d12 = direct([](long n) { return alt(n) * (0.5L - n + 2.0L * n * n) / std::expm1(1.5L * n); }, 200);
  CHECK(rel_err(alt_poly_over_expm1(1.5, c).value, d12) < 1e-13);
  const double d13 = direct([](long n) { return (0.5L - n + 2.0L * n * n) / std::sinh(kPiL * 0.7L * n); }, 200);
  CHECK(rel_err(poly_over_sinh(0.7, c).value, d13) < 1e-13);
  const std::vector<double> n1{0.0, 1.0};
  CHECK(poly_over_sinh(1.0, n1).value == doctest::Approx(n_over_sinh(1.0).value).epsilon(1e-15));
  CHECK(alt_poly_over_expm1(2 * kPi, n1).value == doctest::Approx(alt_n_over_expm1(2 * kPi).value).epsilon(1e-15));
}

TEST_CASE("Bernoulli table and zeta values") {
  CHECK(bernoulli_B2n(0) == 1.0);
  CHECK(bernoulli_B2n(1) == doctest::Approx(1.0 / 6));
  CHECK(bernoulli_B2n(2) == doctest::Approx(-1.0 / 30));
  CHECK(bernoulli_B2n(3) == doctest::Approx(1.0 / 42));
  CHECK(bernoulli_B2n(20) == doctest::Approx(-261082718496449122051.0 / 13530.0));
  CHECK(zeta_neg(1) == doctest::Approx(-1.0 / 12).epsilon(1e-15));
  CHECK(zeta_neg(2) == doctest::Approx(1.0 / 120).epsilon(1e-15));
  CHECK(zeta_neg(3) == doctest::Approx(-1.0 / 252).epsilon(1e-15));
  CHECK(zeta_even(1) == doctest::Approx(kPi * kPi / 6).epsilon(1e-15));
  CHECK(zeta_even(2) == doctest::Approx(std::pow(kPi, 4) / 90).epsilon(1e-15));
  for (int k = 3; k <= 10; ++k) {
    const double d = direct([k](long n) { return std::pow((long double)n, -2.0L * k); }, 20000);
    CHECK(rel_err(zeta_even(k), d) < 1e-14);
  }
  CHECK_THROWS_AS(bernoulli_B2n(21), RangeError);
  CHECK_THROWS_AS(bernoulli_B2n(-1), RangeError);
  CHECK_THROWS_AS(zeta_neg(0), RangeError);
}

TEST_CASE("doubling the cap moves no value beyond its tail bound") {
  TruncationPolicy base;
  TruncationPolicy doubled;
  doubled.cap = 2 * base.cap;
  for (const auto& c : grid::standard_series_cases()) {
    const SeriesResult r1 = c.eval(base);
    const SeriesResult r2 = c.eval(doubled);
    CAPTURE(c.name);
    CHECK(std::fabs(r1.value - r2.value) <= r1.tail_bound);
    CHECK(r1.tail_bound <= base.tolerance);
    CHECK(r1.terms_used <= base.cap);
  }
}

TEST_CASE("loose and tight tolerances agree to 1.1e-10") {
  TruncationPolicy loose;
  loose.tolerance = 1e-10;
  for (const auto& c : grid::standard_series_cases()) {
    CAPTURE(c.name);
    CHECK(std::fabs(c.eval(loose).value - c.eval(TruncationPolicy{}).value) <= 1.1e-10);
  }
}

TEST_CASE("evaluators are bit-reproducible") {
  for (const auto& c : grid::standard_series_cases()) {
    const SeriesResult r1 = c.eval(TruncationPolicy{});
    const SeriesResult r2 = c.eval(TruncationPolicy{});
    CHECK(r1.value == r2.value);
    CHECK(r1.terms_used == r2.terms_used);
  }
}

TEST_CASE("policy validation and cap exhaustion") {
  TruncationPolicy bad;
  bad.tolerance = -1.0;
  CHECK_THROWS_AS(sech_sum(1.0, bad), DomainError);
  bad = {};
  bad.ratio_guard = 1.0;
  CHECK_THROWS_AS(sech_sum(1.0, bad), DomainError);
  bad = {};
  bad.cap = 0;
  CHECK_THROWS_AS(sech_sum(1.0, bad), DomainError);
  TruncationPolicy small;
  small.cap = 3;
  CHECK_THROWS_AS(sech_sum(0.01, small), NonConvergenceError);
}

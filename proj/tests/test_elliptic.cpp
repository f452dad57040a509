#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ellid/elliptic.hpp"
#include "ellid/errors.hpp"
#include "oracle_helpers.hpp"

using namespace ellid;
using oracle::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

TEST_CASE("agm fixed points and hand-iterated value") {
  CHECK(agm(1.0, 1.0) == 1.0);
  for (double x : {1e-5, 0.3, 7.0, 1e6}) CHECK(agm(x, x) == x);
  // a1 = 1.5, b1 = sqrt 2, ... ; frozen from tests/oracles/freeze_values.py
  CHECK(rel_err(agm(1.0, 2.0), 1.4567910310469068692) < 2e-16);
}

TEST_CASE("agm is symmetric and converges quickly") {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> expo(-5.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    const double x = std::pow(10.0, expo(rng));
    const double y = std::pow(10.0, expo(rng));
    CHECK(agm(x, y) == agm(y, x));
    int iterations = 0;
    agm(x, y, iterations);
    // inputs within 10 orders of magnitude
    CHECK(iterations <= 8);
  }
}

TEST_CASE("agm rejects nonpositive input") {
  CHECK_THROWS_AS(agm(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(agm(1.0, -2.0), DomainError);
}

TEST_CASE("K and E at the trivial points") {
  const auto zero = EllipticArgument::modulus(0.0);
  CHECK(ellint_K(zero) == doctest::Approx(kPi / 2).epsilon(1e-16));
  CHECK(std::fabs(ellint_K(zero) - kPi / 2) <= 2.3e-16);
  CHECK(std::fabs(ellint_E(zero) - kPi / 2) <= 2.3e-16);
  CHECK(ellint_E(EllipticArgument::modulus(1.0)) == 1.0);
  CHECK(ellint_E(EllipticArgument::parameter(1.0)) == 1.0);
}

TEST_CASE("K at the lemniscatic point matches Gamma(1/4)^2/(4 sqrt(pi))") {
  const double gamma_form = std::tgamma(0.25) * std::tgamma(0.25) / (4.0 * std::sqrt(kPi));
  const double K = ellint_K(EllipticArgument::modulus(kInvSqrt2));
  CHECK(rel_err(K, gamma_form) < 1e-12);
  CHECK(rel_err(K, 1.8540746773013719184) < 1e-15);
  CHECK(ellint_K(EllipticArgument::parameter(0.5)) == doctest::Approx(K).epsilon(1e-15));
  CHECK(rel_err(ellint_E(EllipticArgument::modulus(kInvSqrt2)), 1.3506438810476755025) < 1e-15);
}

TEST_CASE("K and E agree with quadrature of the defining integrals") {
  for (double k : {0.05, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    const auto arg = EllipticArgument::modulus(k);
    CAPTURE(k);
    CHECK(rel_err(ellint_K(arg), oracle::K_quadrature(k)) < 1e-13);
    CHECK(rel_err(ellint_E(arg), oracle::E_quadrature(k)) < 1e-13);
  }
  // negative parameter: imaginary-modulus continuation, frozen from mpmath
  CHECK(rel_err(ellint_K(EllipticArgument::parameter(-0.25)), 1.4844124734223864529) < 1e-14);
}

TEST_CASE("K increases and E decreases in k") {
  double prev_K = 0.0;
  double prev_E = 10.0;
  for (int i = 1; i < 100; ++i) {
    const auto arg = EllipticArgument::modulus(i / 100.0);
    const double K = ellint_K(arg);
    const double E = ellint_E(arg);
    CHECK(K > prev_K);
    CHECK(E < prev_E);
    prev_K = K;
    prev_E = E;
  }
}

TEST_CASE("convention round-trip recovers k") {
  for (int i = 1; i < 100; ++i) {
    const double k = i / 100.0;
    const auto back = EllipticArgument::modulus(k).to_parameter().to_modulus();
    CHECK(back.convention() == Convention::Modulus);
    CHECK(rel_err(back.value(), k) <= 1e-15);
  }
}

TEST_CASE("singular band near 1 is rejected") {
  CHECK_THROWS_AS(ellint_K(EllipticArgument::modulus(1.0 - 1e-13)), SingularArgumentError);
  CHECK_THROWS_AS(ellint_K(EllipticArgument::parameter(1.0)), SingularArgumentError);
  CHECK_NOTHROW(ellint_K(EllipticArgument::modulus(1.0 - 1e-11)));
  // an exact complement keeps K meaningful past the band
  const auto tight = EllipticArgument::modulus_from_complement(1e-13);
  CHECK(std::isfinite(ellint_K(tight)));
  CHECK(ellint_K(tight) > 30.0);
  CHECK_THROWS_AS(EllipticArgument::modulus(1.5), DomainError);
  CHECK_THROWS_AS(EllipticArgument::parameter(1.5), DomainError);
}

TEST_CASE("dK in the parameter convention") {
  const auto m = EllipticArgument::parameter(0.5);
  const double K = ellint_K(m);
  const double E = ellint_E(m);
  CHECK(dK(m) == doctest::Approx(2 * E - K).epsilon(1e-14));
  CHECK(rel_err(dK(m), 0.84721308479397908661) < 1e-13);
  // slope of K = (pi/2)(1 + m/4 + ...) at 0 is pi/8
  const double fd_slope = oracle::richardson_derivative(
      [](double x) { return ellint_K(EllipticArgument::parameter(x)); }, 0.0, 1e-3);
  CHECK(fd_slope == doctest::Approx(kPi / 8).epsilon(1e-10));
  CHECK(dK(EllipticArgument::parameter(1e-6)) == doctest::Approx(kPi / 8).epsilon(1e-5));
}

TEST_CASE("dK in the modulus convention") {
  const auto k = EllipticArgument::modulus(kInvSqrt2);
  CHECK(rel_err(dK(k), 1.1981402347355922074) < 1e-13);
}

TEST_CASE("dK matches Richardson finite differences in both conventions") {
  for (int i = 1; i <= 9; ++i) {
    const double x = i / 10.0;
    CAPTURE(x);
    const double fd_k = oracle::richardson_derivative(
        [](double v) { return ellint_K(EllipticArgument::modulus(v)); }, x, 1e-3);
    const double fd_m = oracle::richardson_derivative(
        [](double v) { return ellint_K(EllipticArgument::parameter(v)); }, x, 1e-3);
    CHECK(rel_err(dK(EllipticArgument::modulus(x)), fd_k) < 1e-8);
    CHECK(rel_err(dK(EllipticArgument::parameter(x)), fd_m) < 1e-8);
  }
}

TEST_CASE("dK rejects endpoints") {
  CHECK_THROWS_AS(dK(EllipticArgument::modulus(0.0)), DomainError);
  CHECK_THROWS_AS(dK(EllipticArgument::parameter(0.0)), DomainError);
  CHECK_THROWS_AS(dK(EllipticArgument::modulus(1.0)), DomainError);
}

TEST_CASE("Legendre defect vanishes") {
  CHECK(std::fabs(legendre_defect(EllipticArgument::modulus(kInvSqrt2))) < 1e-13);
  CHECK(std::fabs(legendre_defect(EllipticArgument::modulus(0.1))) < 1e-13);
  CHECK(std::fabs(legendre_defect(EllipticArgument::parameter(0.3))) < 1e-13);
  for (int i = 1; i <= 19; ++i) {
    const double k = 0.05 * i;
    CAPTURE(k);
    CHECK(std::fabs(legendre_defect(EllipticArgument::modulus(k))) <= 1e-12);
  }
}

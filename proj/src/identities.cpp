#include <cmath>
#include <numbers>
#include <sstream>

#include "ellid/elliptic.hpp"
#include "ellid/errors.hpp"
#include "ellid/nome.hpp"
#include "ellid/numdiff.hpp"
#include "ellid/polynomial.hpp"
#include "ellid/poly_checks.hpp"
#include "ellid/registry.hpp"
#include "ellid/series.hpp"
#include "ellid/singular.hpp"
#include "ellid/theta.hpp"

namespace ellid {

namespace {

constexpr double kPi = std::numbers::pi;

using Params = const ParamMap&;
using Policy = const TruncationPolicy&;
using Eval = std::function<SideValue(Params, Policy)>;

Side side(std::vector<std::string> depends, Eval eval) { return {std::move(eval), std::move(depends)}; }

SideValue of(const SeriesResult& r) { return {r.value, r.terms_used}; }

SideValue scaled(double factor, const SeriesResult& r) { return {factor * r.value, r.terms_used}; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct KE {
  double K;
  double E;
};

KE singular_KE(double a) {
  const EllipticArgument k = solve_k(a).k;
  return {ellint_K(k), ellint_E(k)};
}

double log_positive(const SeriesResult& r, const char* what) {
  if (!(r.value > 0.0)) throw DomainError(std::string(what) + " is not positive: " + fmt(r.value));
  return std::log(r.value);
}

// Degree parameter d: an integer in [lo, 8], optionally even.
std::string check_degree(Params p, int lo, bool even_only) {
  const double d = p.at("d");
  if (d != std::floor(d) || d < lo || d > kMaxPolynomialDegree) {
    return "d must be an integer in [" + std::to_string(lo) + ", 8], got " + fmt(d);
  }
  if (even_only && static_cast<int>(d) % 2 != 0) return "d must be even, got " + fmt(d);
  return {};
}

PolynomialSpec monomial(Params p) { return PolynomialSpec::monomial(static_cast<int>(p.at("d"))); }

std::string positive(Params p, const char* name) {
  if (!(p.at(name) > 0.0)) return std::string(name) + " must be positive, got " + fmt(p.at(name));
  return {};
}

std::string singular_range(Params p, const char* name) {
  const double a = p.at(name);
  if (!(a >= kMinSingularA && a <= kMaxSingularA)) {
    return std::string(name) + " must lie in [0.05, 20] for the singular modulus, got " + fmt(a);
  }
  return {};
}

// ---------------------------------------------------------------- records

IdentityRecord p1() {
  IdentityRecord r;
  r.id = "P1";
  r.anchor = "log(P_0) − log(𝒢4(it, e^{−aπ}))";
  r.domain = {{"a", {0.8, 1.0, 1.5}}, {"t", {0.0, 0.1, 0.3}}};
  r.constraint = [](Params p) -> std::string {
    if (auto e = positive(p, "a"); !e.empty()) return e;
    if (!(2.0 * std::fabs(p.at("t")) < kPi * p.at("a"))) return "2|t| < pi a required";
    return {};
  };
  r.constraint_text = "a > 0, 2|t| < pi a";
  r.expected = Expectation::ExpectPass;
  const Side rhs = side({"P0", "theta4_imag"}, [](Params p, Policy pol) {
    const Nome q = Nome::pi_times(p.at("a"));
    const SeriesResult p0 = q_product_P0(q, pol);
    const SeriesResult th = theta4_imag(p.at("t"), q, pol);
    return SideValue{std::log(p0.value) - log_positive(th, "theta4(it)"), p0.terms_used + th.terms_used};
  });
  r.variants.push_back({"base",
                        side({"S1"},
                             [](Params p, Policy pol) {
                               return of(series::cosh_over_n_sinh(p.at("a"), p.at("t"), series::S1Form::Statement,
                                                                  pol));
                             }),
                        rhs, "as stated: cosh(2tn) against theta4(it)"});
  r.variants.push_back(
      {"restated-half",
       side({"S1"},
            [](Params p, Policy pol) {
              return of(series::cosh_over_n_sinh(p.at("a"), p.at("t"), series::S1Form::Restated, pol));
            }),
       side({"P0", "theta4_imag"},
            [](Params p, Policy pol) {
              const Nome q = Nome::pi_times(p.at("a"));
              const SeriesResult p0 = q_product_P0(q, pol);
              const SeriesResult th = theta4_imag(0.5 * p.at("t"), q, pol);
              return SideValue{std::log(p0.value) - log_positive(th, "theta4(it/2)"),
                               p0.terms_used + th.terms_used};
            }),
       "later restatement: cosh(tn) against theta4(it/2), |t| < pi a"});
  return r;
}

SideValue p2_rhs(Params p, Policy pol, bool scaled_argument) {
  const double a = p.at("a");
  const double th = p.at("theta");
  const Nome q = Nome::from_exponent(kPi, 1.0 / a, "exp(-pi/a)");
  const SeriesResult num = theta4_imag(scaled_argument ? th / a : th, q, pol);
  const SeriesResult den = theta4(0.0, q, pol);
  const double value =
      log_positive(num, "theta4(i theta/a)") - std::log(den.value * std::cos(th)) - th * th / (a * kPi);
  return {value, num.terms_used + den.terms_used};
}

IdentityRecord p2() {
  IdentityRecord r;
  r.id = "P2";
  r.anchor = "4 Σ (−1)ⁿ sin(θn)²/((e^{2πna} − 1)n) = log(𝒢4(iθ/a, e^{−π/a})/(𝒢4(0, e^{−π/a}) cos(θ))) − θ²/(aπ)";
  r.domain = {{"a", {0.5, 1.0, 2.0}}, {"theta", {0.2, 0.5}}};
  r.constraint = [](Params p) -> std::string {
    if (auto e = positive(p, "a"); !e.empty()) return e;
    if (!(std::fabs(p.at("theta")) < kPi / 2.0)) return "|theta| < pi/2 required (cos(theta) > 0)";
    if (!(std::fabs(p.at("theta")) < kPi * p.at("a"))) return "|theta| < pi a required for the sinh^2 form";
    return {};
  };
  r.constraint_text = "a > 0, |theta| < min(pi/2, pi a)";
  r.expected = Expectation::Contested;
  r.note = "the admissible range of theta is not stated; the grid keeps theta small";
  auto sq = [](series::SquareKind kind) {
    return side({"S2"}, [kind](Params p, Policy pol) {
      return scaled(4.0, series::alt_square_over_n_expm1(p.at("theta"), 2.0 * kPi * p.at("a"), kind, pol));
    });
  };
  const Side rhs = side({"theta4_imag", "theta4"}, [](Params p, Policy pol) { return p2_rhs(p, pol, true); });
  r.variants.push_back({"base", sq(series::SquareKind::Sin), rhs, "as stated: sin^2 numerator"});
  r.variants.push_back({"sinh-squared", sq(series::SquareKind::Sinh), rhs,
                        "numerator sinh^2 as in the derivation display"});
  r.variants.push_back({"unscaled-argument", sq(series::SquareKind::Sin),
                        side({"theta4_imag", "theta4"}, [](Params p, Policy pol) { return p2_rhs(p, pol, false); }),
                        "theta4 argument i theta instead of i theta/a"});
  return r;
}

IdentityRecord p2b() {
  IdentityRecord r;
  r.id = "P2b";
  r.anchor = "Θ(iz, e^{−z}) + 2i𝒢4(iz, e^{−z}) = 0";
  r.domain = {{"z", {0.5, 1.0, 2.0}}};
  r.constraint = [](Params p) { return positive(p, "z"); };
  r.constraint_text = "z > 0";
  r.expected = Expectation::Contested;
  r.note = "read as 2 theta4(iz, e^{-z}) = 4 sum (-1)^n n q^{n^2} sinh(2nz) after substituting the series";
  const Side lhs = side({"theta4_imag"}, [](Params p, Policy pol) {
    const Nome q = Nome::from_exponent(1.0, p.at("z"), "exp(-z)");
    return scaled(2.0, theta4_imag(p.at("z"), q, pol));
  });
  auto rhs = [](double sign) {
    return side({"theta_derivatives"}, [sign](Params p, Policy pol) {
      const Nome q = Nome::from_exponent(1.0, p.at("z"), "exp(-z)");
      const ThetaDerivatives d = theta_raw_derivatives(ThetaKind::Theta4ImagHalf, 2.0 * p.at("z"), q, 1, pol);
      return SideValue{sign * 2.0 * d.values[1], d.terms_used};
    });
  };
  r.variants.push_back({"base", lhs, rhs(1.0), "real form of the printed relation"});
  r.variants.push_back({"minus", lhs, rhs(-1.0), "opposite sign of the derivative term"});
  return r;
}

IdentityRecord p2d() {
  IdentityRecord r;
  r.id = "P2d";
  r.anchor = "−ac²/π + log(cosh(c)) − 4Σ(−1)ⁿ sinh²(cn)/((e^{2πn/a} − 1)n)";
  r.domain = {{"a", {0.5, 1.0, 2.0}}, {"c", {0.2, 0.5}}};
  r.constraint = [](Params p) -> std::string {
    if (auto e = positive(p, "a"); !e.empty()) return e;
    const double c = std::fabs(p.at("c"));
    if (!(c < kPi / p.at("a"))) return "|c| < pi/a required for the sinh^2 series";
    if (!(c < kPi / 2.0)) return "|c| < pi/2 required";
    return {};
  };
  r.constraint_text = "a > 0, |c| < min(pi/a, pi/2)";
  r.expected = Expectation::Contested;
  const Side rhs = side({"S1"}, [](Params p, Policy pol) {
    const double a = p.at("a");
    const SeriesResult plain = series::cosh_over_n_sinh(a, 0.0, series::S1Form::Statement, pol);
    const SeriesResult trig = series::cosh_over_n_sinh(a, a * p.at("c"), series::S1Form::Trigonometric, pol);
    return SideValue{plain.value - trig.value, plain.terms_used + trig.terms_used};
  });
  r.variants.push_back(
      {"base", side({"S2", "elementary"},
                    [](Params p, Policy pol) {
                      const double a = p.at("a");
                      const double c = p.at("c");
                      const SeriesResult s =
                          series::alt_square_over_n_expm1(c, 2.0 * kPi / a, series::SquareKind::Sinh, pol);
                      return SideValue{-a * c * c / kPi + std::log(std::cosh(c)) - 4.0 * s.value, s.terms_used};
                    }),
       rhs, "derivation display with sinh^2 and log cosh"});
  r.variants.push_back(
      {"sin-squared", side({"S2", "elementary"},
                           [](Params p, Policy pol) {
                             const double a = p.at("a");
                             const double c = p.at("c");
                             const SeriesResult s =
                                 series::alt_square_over_n_expm1(c, 2.0 * kPi / a, series::SquareKind::Sin, pol);
                             return SideValue{-a * c * c / kPi + std::log(std::cos(c)) - 4.0 * s.value,
                                              s.terms_used};
                           }),
       rhs, "sin^2 and log cos, matching the stated form"});
  return r;
}

IdentityRecord p3() {
  IdentityRecord r;
  r.id = "P3";
  r.anchor = "K(k_a)E(k_a) − K(k_a)²";
  r.domain = {{"a", {0.5, 1.0, 2.0}}};
  r.constraint = [](Params p) { return singular_range(p, "a"); };
  r.constraint_text = "a in [0.05, 20]";
  r.expected = Expectation::Contested;
  r.note = "second t-derivative taken as 2 pi^2 d^2/ds^2 log theta4(is/2, e^{-2 pi a}) at s = pi a";
  r.variants.push_back(
      {"base", side({"log_theta_derivatives"},
                    [](Params p, Policy pol) {
                      const double a = p.at("a");
                      const Nome q = Nome::from_exponent(2.0 * kPi, a, "exp(-2*pi*a)");
                      const LogThetaSeries g = log_theta_series(ThetaKind::Theta4ImagHalf, 2, kPi * a, q, pol);
                      return SideValue{2.0 * kPi * kPi * g.values[2], g.terms_used};
                    }),
       side({"solve_k", "ellint_K", "ellint_E"},
            [](Params p, Policy) {
              const KE ke = singular_KE(p.at("a"));
              return SideValue{ke.K * ke.E - ke.K * ke.K, 0};
            }),
       "as stated"});
  return r;
}

IdentityRecord e4() {
  IdentityRecord r;
  r.id = "E4";
  r.anchor = "Σ (−1)ⁿ n/(e^{2πn/a} − 1) = 1/8 − a/(4π) + a²K(k_a)(E−K)/(2π²)";
  r.domain = {{"a", {0.5, 1.0, 2.0}}};
  r.constraint = [](Params p) { return singular_range(p, "a"); };
  r.constraint_text = "a in [0.05, 20]";
  r.expected = Expectation::ExpectPass;
  r.variants.push_back(
      {"base",
       side({"S3"}, [](Params p, Policy pol) { return of(series::alt_n_over_expm1(2.0 * kPi / p.at("a"), pol)); }),
       side({"solve_k", "ellint_K", "ellint_E"},
            [](Params p, Policy) {
              const double a = p.at("a");
              const KE ke = singular_KE(a);
              return SideValue{0.125 - a / (4.0 * kPi) + a * a * ke.K * (ke.E - ke.K) / (2.0 * kPi * kPi), 0};
            }),
       "as stated"});
  return r;
}

IdentityRecord e5() {
  IdentityRecord r;
  r.id = "E5";
  r.anchor = "−1/4 + a/(2π) + 2Σ…";
  r.domain = {{"a", {0.5, 1.0, 2.0}}};
  r.constraint = [](Params p) { return positive(p, "a"); };
  r.constraint_text = "a > 0";
  r.expected = Expectation::ExpectPass;
  r.note = "tested as -1/4 + a/(2 pi) + 2 S3 = -2 a^2 sum n cosh(a n pi)/sinh(2 a n pi)";
  r.variants.push_back(
      {"base", side({"S3"},
                    [](Params p, Policy pol) {
                      const double a = p.at("a");
                      const SeriesResult s = series::alt_n_over_expm1(2.0 * kPi / a, pol);
                      return SideValue{-0.25 + a / (2.0 * kPi) + 2.0 * s.value, s.terms_used};
                    }),
       side({"S11"},
            [](Params p, Policy pol) {
              const double a = p.at("a");
              return scaled(-2.0 * a * a, series::n_cosh_over_sinh_double(a, pol));
            }),
       "as stated"});
  return r;
}

IdentityRecord e5b() {
  IdentityRecord r;
  r.id = "E5b";
  r.anchor = "= (K(k_b)/π²)(K(k_b) − E(k_b))";
  r.domain = {{"b", {0.5, 1.0, 2.0}}};
  r.constraint = [](Params p) { return singular_range(p, "b"); };
  r.constraint_text = "b in [0.05, 20]";
  r.expected = Expectation::ExpectPass;
  r.variants.push_back(
      {"base", side({"S4"}, [](Params p, Policy pol) { return of(series::n_over_sinh(p.at("b"), pol)); }),
       side({"solve_k", "ellint_K", "ellint_E"},
            [](Params p, Policy) {
              const KE ke = singular_KE(p.at("b"));
              return SideValue{ke.K * (ke.K - ke.E) / (kPi * kPi), 0};
            }),
       "as stated"});
  return r;
}

IdentityRecord e5c() {
  IdentityRecord r;
  r.id = "E5c";
  r.anchor = "Σ 1/cosh²(πnx) = −4Σ(−1)ⁿn/(e^{2πnx}−1)";
  r.domain = {{"x", {0.5, 1.0, 2.0}}};
  r.constraint = [](Params p) { return positive(p, "x"); };
  r.constraint_text = "x > 0";
  r.expected = Expectation::ExpectPass;
  r.variants.push_back(
      {"base", side({"S5sq"}, [](Params p, Policy pol) { return of(series::sech2_sum(p.at("x"), pol)); }),
       side({"S3"},
            [](Params p, Policy pol) { return scaled(-4.0, series::alt_n_over_expm1(2.0 * kPi * p.at("x"), pol)); }),
       "as stated"});
  return r;
}

IdentityRecord e7() {
  IdentityRecord r;
  r.id = "E7";
  r.anchor = "(a/2)tan(v/2) = v + 2a Σ…";
  r.domain = {{"a", {2.0, 4.0}}, {"v", {0.5, 1.0, 2.0}}};
  r.constraint = [](Params p) -> std::string {
    if (auto e = positive(p, "a"); !e.empty()) return e;
    if (!(p.at("v") > 0.0 && p.at("v") < kPi)) return "0 < v < pi required";
    return {};
  };
  r.constraint_text = "a > 0, 0 < v < pi";
  r.expected = Expectation::Contested;
  const Side lhs = side({"elementary"}, [](Params p, Policy) {
    return SideValue{0.5 * p.at("a") * std::tan(0.5 * p.at("v")), 0};
  });
  auto rhs = [](bool paired) {
    return side({"S6", "S7"}, [paired](Params p, Policy pol) {
      const double a = p.at("a");
      const double v = p.at("v");
      const SeriesResult s6 = series::alt_sin_over_expm1(a, v, pol);
      const SeriesResult s7 = series::csch_sinh(paired ? 2.0 * kPi / a : a, v, pol);
      return SideValue{v + 2.0 * a * s6.value + 2.0 * kPi * s7.value, s6.terms_used + s7.terms_used};
    });
  };
  r.variants.push_back({"base", lhs, rhs(false), "as stated, both sums in a"});
  r.variants.push_back({"b-paired", lhs, rhs(true), "csch-sinh sum taken at b = 2 pi/a"});
  return r;
}

IdentityRecord e7b() {
  IdentityRecord r;
  r.id = "E7b";
  r.anchor = "= −1/2 Σ sin(v)/(cos(v) + cosh(an))";
  r.domain = {{"a", {1.0, 2.0}}, {"v", {0.5, 1.0}}};
  r.constraint = [](Params p) { return positive(p, "a"); };
  r.constraint_text = "a > 0";
  r.expected = Expectation::ExpectPass;
  r.variants.push_back(
      {"base",
       side({"S6"},
            [](Params p, Policy pol) { return of(series::alt_sin_over_expm1(p.at("a"), p.at("v"), pol)); }),
       side({"S6closed"},
            [](Params p, Policy pol) { return of(series::sin_over_cos_plus_cosh(p.at("a"), p.at("v"), pol)); }),
       "as stated"});
  return r;
}

IdentityRecord e8() {
  IdentityRecord r;
  r.id = "E8";
  r.anchor = "tan(z) + (1/𝒢2)∂𝒢2/∂z";
  r.domain = {{"q", {0.2, std::exp(-kPi)}}, {"z", {0.3, 0.6}}};
  r.constraint = [](Params p) -> std::string {
    const double q = p.at("q");
    if (!(q > 0.0 && q < 1.0)) return "0 < q < 1 required";
    const double z = std::fabs(p.at("z"));
    if (!(z < kPi / 2.0)) return "|z| < pi/2 required (away from theta2 and tan singularities)";
    return {};
  };
  r.constraint_text = "0 < q < 1, |z| < pi/2";
  r.expected = Expectation::Contested;
  auto lhs = side({"S10"}, [](Params p, Policy pol) {
    return scaled(4.0, series::alt_sin_lambert(p.at("z"), Nome::from_q(p.at("q")), pol));
  });
  auto rhs = [](double tan_sign, bool squared_nome) {
    return side({"log_theta_derivatives", "elementary"}, [tan_sign, squared_nome](Params p, Policy pol) {
      const double q = p.at("q");
      const Nome nome = Nome::from_q(squared_nome ? q * q : q);
      const double z = p.at("z");
      const LogThetaSeries g = log_theta_series(ThetaKind::Theta2, 1, z, nome, pol);
      return SideValue{tan_sign * std::tan(z) + g.values[1], g.terms_used};
    });
  };
  r.variants.push_back({"base", lhs, rhs(1.0, false), "as stated"});
  r.variants.push_back({"tan-sign", lhs, rhs(-1.0, false), "tan(z) with the opposite sign"});
  r.variants.push_back({"nome-scale", lhs, rhs(1.0, true), "theta2 taken at nome q^2"});
  return r;
}

double p4_h(double a, double x, Policy pol, std::size_t& terms) {
  const SeriesResult t2 = theta2(x, Nome::from_exponent(kPi, 1.0 / a, "exp(-pi/a)"), pol);
  const SeriesResult t4 = theta4_imag(a * x, Nome::pi_times(a), pol);
  terms += t2.terms_used + t4.terms_used;
  return std::exp(x * x * a / kPi) * t2.value / t4.value;
}

IdentityRecord p4() {
  IdentityRecord r;
  r.id = "P4";
  r.anchor = "∂_x(e^{x²a/π} 𝒢2(x, e^{−π/a}) / 𝒢4(iax, e^{−aπ})) = 0";
  r.domain = {{"a", {1.0, 2.0}}};
  r.constraint = [](Params p) { return positive(p, "a"); };
  r.constraint_text = "a > 0";
  r.expected = Expectation::Contested;
  r.note = "constancy over x in {0, 0.1, 0.2, 0.3}: lhs is the maximum, rhs the minimum";
  static constexpr double kXs[] = {0.0, 0.1, 0.2, 0.3};
  r.variants.push_back({"base",
                        side({"theta2", "theta4_imag"},
                             [](Params p, Policy pol) {
                               SideValue out{-HUGE_VAL, 0};
                               for (double x : kXs) out.value = std::max(out.value, p4_h(p.at("a"), x, pol, out.terms));
                               return out;
                             }),
                        side({"theta2", "theta4_imag"},
                             [](Params p, Policy pol) {
                               SideValue out{HUGE_VAL, 0};
                               for (double x : kXs) out.value = std::min(out.value, p4_h(p.at("a"), x, pol, out.terms));
                               return out;
                             }),
                        "as stated"});
  return r;
}

IdentityRecord p4b() {
  IdentityRecord r;
  r.id = "P4b";
  r.anchor = "2π Σ sinh(2nπza)/sinh(nπ²a) = −2z − (1/a)∂_z log(𝒢2(z, e^{−1/a}))";
  r.domain = {{"a", {1.0, 2.0}}, {"z", {0.2, 0.5}}};
  r.constraint = [](Params p) -> std::string {
    if (auto e = positive(p, "a"); !e.empty()) return e;
    if (!(std::fabs(p.at("z")) < kPi / 2.0)) return "|z| < pi/2 required";
    return {};
  };
  r.constraint_text = "a > 0, |z| < pi/2";
  r.expected = Expectation::Contested;
  r.variants.push_back(
      {"base",
       side({"S7"},
            [](Params p, Policy pol) {
              return scaled(2.0 * kPi, series::csch_sinh(2.0 / p.at("a"), 2.0 * p.at("z"), pol));
            }),
       side({"log_theta_derivatives"},
            [](Params p, Policy pol) {
              const double a = p.at("a");
              const double z = p.at("z");
              const Nome q = Nome::from_exponent(1.0 / a, 1.0, "exp(-1/a)");
              const LogThetaSeries g = log_theta_series(ThetaKind::Theta2, 1, z, q, pol);
              return SideValue{-2.0 * z - g.values[1] / a, g.terms_used};
            }),
       "as stated"});
  return r;
}

IdentityRecord p5() {
  IdentityRecord r;
  r.id = "P5";
  r.anchor = "−2 Σ e^{2nπ/b}/(1 + e^{2nπ/b})³ + Σ (−1)ⁿ n²/(e^{2nπ/b} − 1)";
  r.domain = {{"b", {0.5, 1.0, 2.0}}};
  r.constraint = [](Params p) { return singular_range(p, "b"); };
  r.constraint_text = "b in [0.05, 20]";
  r.expected = Expectation::Contested;
  auto lhs = [](std::vector<double> poly) {
    return side({"S8", "S12"}, [poly](Params p, Policy pol) {
      const double b = p.at("b");
      const SeriesResult s8 = series::exp_over_cube(b, pol);
      const SeriesResult s12 = series::alt_poly_over_expm1(2.0 * kPi / b, poly, pol);
      return SideValue{-2.0 * s8.value + s12.value, s8.terms_used + s12.terms_used};
    });
  };
  const Side rhs = side({"solve_k", "ellint_K", "ellint_E"}, [](Params p, Policy) {
    const double b = p.at("b");
    const KE ke = singular_KE(b);
    return SideValue{0.125 - b / (4.0 * kPi) + b * b / (2.0 * kPi * kPi) * (ke.E * ke.K - ke.K * ke.K), 0};
  });
  r.variants.push_back({"base", lhs({0.0, 0.0, 1.0}), rhs, "as stated: (-1)^n n^2"});
  r.variants.push_back({"n(n+1)", lhs({0.0, 1.0, 1.0}), rhs, "numerator n(n+1) as in the derivation"});
  r.variants.push_back(
      {"proof-display",
       side({"S8", "S12"},
            [](Params p, Policy pol) {
              const double b = p.at("b");
              const SeriesResult s8 = series::exp_over_cube(b, pol);
              const std::vector<double> poly{0.0, 1.0, 1.0};
              const SeriesResult s12 = series::alt_poly_over_expm1(2.0 * kPi / b, poly, pol);
              return SideValue{-1.0 - 8.0 * s8.value + 4.0 * s12.value + 2.0 * b / kPi,
                               s8.terms_used + s12.terms_used};
            }),
       side({"S4"},
            [](Params p, Policy pol) {
              const double b = p.at("b");
              return scaled(-4.0 * b * b, series::n_over_sinh(b, pol));
            }),
       "intermediate display of the derivation"});
  return r;
}

IdentityRecord p6() {
  IdentityRecord r;
  r.id = "P6";
  r.anchor = "If a is appositve real number";
  r.domain = {{"a", {0.5, 1.0, 2.0}}};
  r.constraint = [](Params p) { return singular_range(p, "a"); };
  r.constraint_text = "a in [0.05, 20]";
  r.expected = Expectation::Contested;
  r.variants.push_back(
      {"base",
       side({"theta_derivatives"},
            [](Params p, Policy pol) {
              const Nome q = Nome::from_exponent(kPi / 2.0, 1.0 / p.at("a"), "exp(-pi/(2a))");
              const ThetaDerivatives d = theta_raw_derivatives(ThetaKind::Theta2, kPi / 4.0, q, 1, pol);
              return SideValue{d.values[1], d.terms_used};
            }),
       side({"theta2", "solve_k", "ellint_K"},
            [](Params p, Policy pol) {
              const double a = p.at("a");
              const Nome q = Nome::from_exponent(kPi / 2.0, 1.0 / a, "exp(-pi/(2a))");
              const SeriesResult t2 = theta2(kPi / 4.0, q, pol);
              const double K = ellint_K(solve_k(a).k);
              return SideValue{-2.0 * a / kPi * t2.value * K, t2.terms_used};
            }),
       "as stated"});
  return r;
}

IdentityRecord p6b() {
  IdentityRecord r;
  r.id = "P6b";
  r.anchor = "Σ 1/cosh(nπa) = 1/2 + K(k_a)/π";
  r.domain = {{"a", {0.5, 1.0, 2.0}}};
  r.constraint = [](Params p) { return singular_range(p, "a"); };
  r.constraint_text = "a in [0.05, 20]";
  r.expected = Expectation::Contested;
  const Side lhs = side({"S5"}, [](Params p, Policy pol) { return of(series::sech_sum(p.at("a"), pol)); });
  auto rhs = [](double half) {
    return side({"solve_k", "ellint_K"}, [half](Params p, Policy) {
      return SideValue{half + ellint_K(solve_k(p.at("a")).k) / kPi, 0};
    });
  };
  r.variants.push_back({"base", lhs, rhs(0.5), "as stated: +1/2"});
  r.variants.push_back({"minus-half", lhs, rhs(-0.5), "constant -1/2"});
  return r;
}

EllipticArgument in_convention(Convention c, double x) {
  return c == Convention::Modulus ? EllipticArgument::modulus(x) : EllipticArgument::parameter(x);
}

IdentityRecord p7() {
  IdentityRecord r;
  r.id = "P7";
  r.anchor = "da = K′(k)/(E(k)K(k) − K(k)²) dk";
  r.domain = {{"x", {0.3, 0.5, 0.7}}};
  r.constraint = [](Params p) -> std::string {
    const double x = p.at("x");
    if (!(x >= 0.05 && x <= 0.95)) return "x must lie in [0.05, 0.95]";
    return {};
  };
  r.constraint_text = "x in [0.05, 0.95], read as k or m per variant";
  r.expected = Expectation::Contested;
  r.note = "lhs is the finite-difference derivative of K'/K in the variant's convention";
  auto variant = [](const char* id, const char* label, Convention c, const char* why) {
    const std::string lab = label;
    return Variant{id,
                   side({"dadk_fd"},
                        [c](Params p, Policy) { return SideValue{dadk_fd(in_convention(c, p.at("x"))), 0}; }),
                   side({"ellint_K", "ellint_E", "dK"},
                        [c, lab](Params p, Policy) {
                          return SideValue{dadk_candidate(in_convention(c, p.at("x")), lab), 0};
                        }),
                   why};
  };
  r.variants.push_back(variant("base", "stated-parameter", Convention::Parameter,
                               "printed formula with the derivative dK/dm quoted in the derivation"));
  r.variants.push_back(
      variant("stated-modulus", "stated-modulus", Convention::Modulus, "printed formula read with k as modulus"));
  r.variants.push_back(variant("classical-parameter", "classical-parameter", Convention::Parameter,
                               "-pi/(4 m (1-m) K^2)"));
  r.variants.push_back(
      variant("classical-modulus", "classical-modulus", Convention::Modulus, "-pi/(2 k k'^2 K^2)"));
  return r;
}

IdentityRecord p7b() {
  IdentityRecord r;
  r.id = "P7b";
  r.anchor = "= −π Σ 1/cosh(nπx) = π/2 − K(k_x)";
  r.domain = {{"x", {0.5, 1.0, 2.0}}};
  r.constraint = [](Params p) { return singular_range(p, "x"); };
  r.constraint_text = "x in [0.05, 20]";
  r.expected = Expectation::Contested;
  r.note = "w(x) = 2 pi d/ds log theta4(is/2, e^{-2 pi x}) at s = pi x";
  const Side w = side({"log_theta_derivatives"}, [](Params p, Policy pol) {
    const double x = p.at("x");
    const Nome q = Nome::from_exponent(2.0 * kPi, x, "exp(-2*pi*x)");
    const LogThetaSeries g = log_theta_series(ThetaKind::Theta4ImagHalf, 1, kPi * x, q, pol);
    return SideValue{2.0 * kPi * g.values[1], g.terms_used};
  });
  auto closed = [](double sign) {
    return side({"solve_k", "ellint_K"}, [sign](Params p, Policy) {
      return SideValue{sign * (kPi / 2.0 - ellint_K(solve_k(p.at("x")).k)), 0};
    });
  };
  r.variants.push_back({"base", w, closed(1.0), "w(x) against the closed form"});
  r.variants.push_back(
      {"sech-middle",
       side({"S5"}, [](Params p, Policy pol) { return scaled(-kPi, series::sech_sum(p.at("x"), pol)); }), closed(1.0),
       "middle member -pi sum sech(n pi x) against the closed form"});
  r.variants.push_back({"sign-flipped", w, closed(-1.0), "closed form K(k_x) - pi/2"});
  return r;
}

// {r,k} in the parameter convention at m = k_r^2.
double p8_rk(const std::string& which, const EllipticArgument& m) {
  const double K = ellint_K(m);
  if (which == "classical") return -kPi / (4.0 * m.value() * m.complement() * K * K);
  if (which == "fd") {
    const double x = m.value();
    const double h = 0.25 * std::min(x, m.complement());
    const DerivativeEstimate d =
        richardson_central([](double v) { return a_of_k(EllipticArgument::parameter(v)); }, x, h);
    if (!(d.error <= 1e-7 * std::fabs(d.value))) {
      throw NonConvergenceError("P8: finite-difference {r,k} error estimate " + fmt(d.error) + " too large");
    }
    return d.value;
  }
  const double E = ellint_E(m);
  return dK(m) / (E * K - K * K);
}

IdentityRecord p8() {
  IdentityRecord r;
  r.id = "P8";
  r.anchor = "24 Σ n qⁿ/(1−qⁿ) = 1 + (6E + (k−5)K)/(πk(1−k)K{r,k})";
  r.domain = {{"r", {1.0, 2.0}}};
  r.constraint = [](Params p) { return singular_range(p, "r"); };
  r.constraint_text = "r in [0.05, 20]; k read as the parameter m = k_r^2";
  r.expected = Expectation::Contested;
  r.note = "rhs evaluated with each candidate for {r,k}";
  const Side lhs = side({"S9"}, [](Params p, Policy pol) {
    return scaled(24.0, series::lambert_e2(Nome::pi_times(p.at("r")), pol));
  });
  auto rhs = [](std::string which) {
    return side({"solve_k", "ellint_K", "ellint_E", "dK", "a_of_k"}, [which](Params p, Policy) {
      const EllipticArgument m = solve_k(p.at("r")).k.to_parameter();
      const double K = ellint_K(m);
      const double E = ellint_E(m);
      const double x = m.value();
      const double rk = p8_rk(which, m);
      return SideValue{1.0 + (6.0 * E + (x - 5.0) * K) / (kPi * x * m.complement() * K * rk), 0};
    });
  };
  r.variants.push_back({"base", lhs, rhs("stated"), "printed {r,k}"});
  r.variants.push_back({"classical", lhs, rhs("classical"), "{r,k} = -pi/(4 m (1-m) K^2)"});
  r.variants.push_back({"fd", lhs, rhs("fd"), "{r,k} by finite differences of K'/K in m"});
  return r;
}

IdentityRecord p9() {
  IdentityRecord r;
  r.id = "P9";
  r.anchor = "(1/√(1−x)) K(x/(x−1)) = K(x)";
  r.domain = {{"x", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7}}};
  r.constraint = [](Params p) -> std::string {
    const double x = p.at("x");
    if (!(x >= 0.0 && x < 1.0)) return "0 <= x < 1 required";
    return {};
  };
  r.constraint_text = "0 <= x < 1";
  r.expected = Expectation::ExpectPass;
  auto variant = [](const char* id, Convention c, const char* why) {
    return Variant{id,
                   side({"ellint_K"},
                        [c](Params p, Policy) {
                          const double x = p.at("x");
                          return SideValue{ellint_K(in_convention(c, x / (x - 1.0))) / std::sqrt(1.0 - x), 0};
                        }),
                   side({"ellint_K"}, [c](Params p, Policy) { return SideValue{ellint_K(in_convention(c, p.at("x"))), 0}; }),
                   why};
  };
  r.variants.push_back(variant("base", Convention::Parameter, "x read as the parameter m"));
  r.variants.push_back(variant("modulus", Convention::Modulus, "x read as the modulus k"));
  return r;
}

IdentityRecord p10() {
  IdentityRecord r;
  r.id = "P10";
  r.anchor = "2∫₁²(1/t Σ G(t/2πin))dt + 2Σ(−1)ⁿF(n)/(n(e^{an}−1)) − Σ F(ibn)/(n sinh(bnπ)) = 0";
  r.domain = {{"a", {2.0 * kPi, kPi}}, {"d", {4.0, 6.0}}};
  r.constraint = [](Params p) -> std::string {
    if (auto e = positive(p, "a"); !e.empty()) return e;
    return check_degree(p, 4, true);
  };
  r.constraint_text = "a > 0, b = 2 pi/a, F(x) = x^d with d even in [4, 8]";
  r.expected = Expectation::Contested;
  r.variants.push_back(
      {"base",
       side({"zeta", "S12", "polynomial"},
            [](Params p, Policy pol) {
              const PolynomialSpec F = monomial(p);
              const SeriesResult alt = collapse_alternating_sum(F, p.at("a"), pol);
              return SideValue{collapse_integral_term(F) + alt.value, alt.terms_used};
            }),
       side({"S13", "polynomial"},
            [](Params p, Policy pol) { return of(collapse_sinh_sum(monomial(p), 2.0 * kPi / p.at("a"), pol)); }),
       "as stated"});
  return r;
}

IdentityRecord p10a() {
  IdentityRecord r;
  r.id = "P10a";
  r.anchor =
      "Σ (f_e^{(2ν)}(0)/(2ν)!)(2^{2ν} − 1) ζ(1 − 2ν) + 2Σ(−1)ⁿ f_e(n)/(n(e^{an}−1)) − Σ f_e(ibn)/(n sinh(bnπ)) = 0";
  r.domain = {{"a", {2.0 * kPi, kPi}}, {"d", {2.0, 4.0}}};
  r.constraint = [](Params p) -> std::string {
    if (auto e = positive(p, "a"); !e.empty()) return e;
    return check_degree(p, 2, true);
  };
  r.constraint_text = "a > 0, b = 2 pi/a, f_e(x) = x^d with d even in [2, 8]";
  r.expected = Expectation::Contested;
  r.variants.push_back(
      {"base",
       side({"zeta", "S12", "polynomial"},
            [](Params p, Policy pol) {
              const PolynomialSpec F = monomial(p);
              const SeriesResult alt = collapse_alternating_sum(F, p.at("a"), pol);
              return SideValue{collapse_zeta_term(F) + alt.value, alt.terms_used};
            }),
       side({"S13", "polynomial"},
            [](Params p, Policy pol) { return of(collapse_sinh_sum(monomial(p), 2.0 * kPi / p.at("a"), pol)); }),
       "as stated"});
  return r;
}

IdentityRecord p11(const char* id, LaplaceForm form) {
  IdentityRecord r;
  r.id = id;
  r.expected = form == LaplaceForm::Derivative ? Expectation::ExpectPass : Expectation::Contested;
  if (form == LaplaceForm::Derivative) {
    r.anchor = "f(0) log(Π(1 − e^{−2nπa})) − Σ_{n∈Z−{0}} f(n)e^{−ns}/(2n sinh(πan))";
    r.domain = {{"a", {1.0, 2.0}}, {"d", {2.0, 3.0, 4.0}}, {"s", {0.0, 0.2}}};
    r.constraint = [](Params p) -> std::string {
      if (auto e = positive(p, "a"); !e.empty()) return e;
      if (auto e = check_degree(p, 0, false); !e.empty()) return e;
      if (!(std::fabs(p.at("s")) < kPi * p.at("a"))) return "|s| < pi a required";
      return {};
    };
    r.constraint_text = "a > 0, f(x) = x^d with d in [0, 8], |s| < pi a";
  } else {
    r.anchor = "Σ fₙ log(𝒢4(i(s+n)/2, e^{−πa}))";
    r.domain = {{"a", {1.0, 2.0}}, {"d", {1.0, 2.0}}, {"s", {0.0, 0.5}}};
    r.constraint = [](Params p) -> std::string {
      if (auto e = positive(p, "a"); !e.empty()) return e;
      if (auto e = check_degree(p, 0, false); !e.empty()) return e;
      const double s = p.at("s");
      if (!(p.at("d") + s < kPi * p.at("a")) || !(-s < kPi * p.at("a"))) return "d + s < pi a and -s < pi a required";
      return {};
    };
    r.constraint_text = "a > 0, f(x) = x^d with d in [0, 8], d + s < pi a";
  }
  r.variants.push_back(
      {"base",
       side({form == LaplaceForm::Derivative ? "log_theta_derivatives" : "theta4_imag", "polynomial"},
            [form](Params p, Policy pol) { return of(laplace_theta4_lhs(monomial(p), p.at("a"), p.at("s"), form, pol)); }),
       side({"P0", "polynomial", "elementary"},
            [form](Params p, Policy pol) { return of(laplace_theta4_rhs(monomial(p), p.at("a"), p.at("s"), form, pol)); }),
       "as stated"});
  return r;
}

IdentityRecord p12() {
  IdentityRecord r;
  r.id = "P12";
  r.anchor = "2a − 2af(0)s + aπ Σ_{n∈Z−{0}} f(2πna)e^{−2πnsa}/sinh(π²an)";
  r.domain = {{"a", {1.0, 2.0}}, {"d", {1.0, 2.0, 3.0}}, {"s", {0.3, 0.6}}};
  r.constraint = [](Params p) -> std::string {
    if (auto e = positive(p, "a"); !e.empty()) return e;
    if (auto e = check_degree(p, 1, false); !e.empty()) return e;
    if (!(std::fabs(p.at("s")) < kPi / 2.0)) return "|s| < pi/2 required (theta2 zero at pi/2)";
    return {};
  };
  r.constraint_text = "a > 0, f(x) = x^d with d in [1, 8], |s| < pi/2";
  r.expected = Expectation::Contested;
  const Side lhs = side({"log_theta_derivatives", "polynomial"}, [](Params p, Policy pol) {
    return of(laplace_theta2_lhs(monomial(p), p.at("a"), p.at("s"), pol));
  });
  r.variants.push_back({"base", lhs,
                        side({"polynomial", "elementary"},
                             [](Params p, Policy pol) {
                               return of(laplace_theta2_rhs_printed(monomial(p), p.at("a"), p.at("s"), pol));
                             }),
                        "as stated"});
  r.variants.push_back(
      {"derived", lhs,
       side({"polynomial", "elementary"},
            [](Params p, Policy pol) { return of(laplace_theta2_rhs_derived(monomial(p), p.at("a"), p.at("s"), pol)); }),
       "right side rebuilt from the theta2 modular transformation: 2a f_1 s - 2a f_2 - sum f(2 pi n a) "
       "e^{-2 pi n s a}/(2n sinh(pi^2 a n))"});
  return r;
}

}  // namespace

std::vector<IdentityRecord> build_identity_catalog() {
  std::vector<IdentityRecord> out;
  out.push_back(p1());
  out.push_back(p2());
  out.push_back(p2b());
  out.push_back(p2d());
  out.push_back(p3());
  out.push_back(e4());
  out.push_back(e5());
  out.push_back(e5b());
  out.push_back(e5c());
  out.push_back(e7());
  out.push_back(e7b());
  out.push_back(e8());
  out.push_back(p4());
  out.push_back(p4b());
  out.push_back(p5());
  out.push_back(p6());
  out.push_back(p6b());
  out.push_back(p7());
  out.push_back(p7b());
  out.push_back(p8());
  out.push_back(p9());
  out.push_back(p10());
  out.push_back(p10a());
  out.push_back(p11("P11a", LaplaceForm::Derivative));
  out.push_back(p11("P11b", LaplaceForm::Shifted));
  out.push_back(p12());
  return out;
}

}  // namespace ellid

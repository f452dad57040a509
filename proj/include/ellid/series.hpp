#pragma once

#include <span>

#include "ellid/nome.hpp"
#include "ellid/summation.hpp"

// Error-controlled evaluators for the Lambert-type and hyperbolic series used
// by the identity registry. Every evaluator sums in ascending n with
// compensated accumulation, validates its convergence precondition up front
// (DomainError), and reports a tail bound.
namespace ellid::series {

// How the hyperbolic-cosine numerator of S1 is scaled.
enum class S1Form {
  Statement,      // cosh(2tn), requires 2|t| < pi a
  Restated,       // cosh(tn),  requires |t| < pi a
  Trigonometric,  // cos(2tn),  any t
};

// S1: sum cosh(2tn) / (n sinh(pi a n)) (or the selected form).
SeriesResult cosh_over_n_sinh(double a, double t, S1Form form = S1Form::Statement,
                              const TruncationPolicy& policy = {});

enum class SquareKind { Sin, Sinh };

// S2: sum (-1)^n sq(theta n) / (n (e^{cn} - 1)), sq = sin^2 or sinh^2.
// sinh^2 requires 2|theta| < c.
SeriesResult alt_square_over_n_expm1(double theta, double c, SquareKind kind,
                                     const TruncationPolicy& policy = {});

// S3: sum (-1)^n n / (e^{cn} - 1)
SeriesResult alt_n_over_expm1(double c, const TruncationPolicy& policy = {});

// S4: sum n / sinh(pi b n)
SeriesResult n_over_sinh(double b, const TruncationPolicy& policy = {});

// S5: sum sech(n pi a)
SeriesResult sech_sum(double a, const TruncationPolicy& policy = {});
// S5sq: sum sech^2(pi n x)
SeriesResult sech2_sum(double x, const TruncationPolicy& policy = {});

// S6: sum (-1)^n sin(nv) / (e^{an} - 1)
SeriesResult alt_sin_over_expm1(double a, double v, const TruncationPolicy& policy = {});
// S6closed: -(1/2) sum sin(v) / (cos(v) + cosh(an))
SeriesResult sin_over_cos_plus_cosh(double a, double v, const TruncationPolicy& policy = {});

// S7: sum csch(2 n pi^2 / a) sinh(2 pi n v / a), requires |v| < pi.
SeriesResult csch_sinh(double a, double v, const TruncationPolicy& policy = {});

// S8: sum e^{2n pi/b} / (1 + e^{2n pi/b})^3
SeriesResult exp_over_cube(double b, const TruncationPolicy& policy = {});

// S9: sum n q^n / (1 - q^n)
SeriesResult lambert_e2(const Nome& q, const TruncationPolicy& policy = {});

// S10: sum (-1)^n sin(2nz) q^{2n} / (1 - q^{2n})
SeriesResult alt_sin_lambert(double z, const Nome& q, const TruncationPolicy& policy = {});

// S11: sum n cosh(a n pi) / sinh(2 a n pi)
SeriesResult n_cosh_over_sinh_double(double a, const TruncationPolicy& policy = {});

// S12: sum (-1)^n p(n) / (e^{cn} - 1) for a polynomial p given by its
// coefficients p_0..p_d (ascending).
SeriesResult alt_poly_over_expm1(double c, std::span<const double> coefficients,
                                 const TruncationPolicy& policy = {});

// S13: sum p(n) / sinh(pi b n) for a polynomial p with p(0) = 0 allowed or not.
SeriesResult poly_over_sinh(double b, std::span<const double> coefficients,
                            const TruncationPolicy& policy = {});

// Bernoulli number B_{2n}, exact table for n <= 20 (B_0 .. B_40).
double bernoulli_B2n(int n);
// zeta(1 - 2 nu) = -B_{2nu} / (2 nu), nu >= 1.
double zeta_neg(int nu);
// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!), k >= 1.
double zeta_even(int k);

inline constexpr int kBernoulliTableSize = 21;

}  // namespace ellid::series

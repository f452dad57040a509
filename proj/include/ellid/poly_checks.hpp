#pragma once

#include <vector>

#include "ellid/polynomial.hpp"
#include "ellid/summation.hpp"

// Polynomial-instance evaluators for the Laplace-transform propositions and
// the zeta-collapse construction. Left and right sides are computed by
// separate routines that share only theta-kernel and series primitives.
namespace ellid {

// c_{2k} = g_{2k} (-1)^k zeta(2k) (2 pi)^{-2k}, indexed by the power 2k.
// Requires F even with F(0) = F'(0) = F''(0) = 0 (ConstraintError otherwise).
std::vector<double> collapse_inner_coefficients(const PolynomialSpec& F);
// sum_{n>=1} G(t / (2 pi i n)) collapsed to sum_k c_{2k} t^{2k}.
double collapse_inner_sum(const PolynomialSpec& F, double t);
// 2 int_1^2 inner_sum(t)/t dt = 2 sum_k c_{2k} (2^{2k} - 1) / (2k).
double collapse_integral_term(const PolynomialSpec& F);
// sum_{nu>=1} f_{2nu} (2^{2nu} - 1) zeta(1 - 2nu), even f.
double collapse_zeta_term(const PolynomialSpec& fe);
// 2 sum (-1)^n F(n) / (n (e^{an} - 1)), F(0) = 0.
SeriesResult collapse_alternating_sum(const PolynomialSpec& F, double a, const TruncationPolicy& policy = {});
// sum F(i b n) / (n sinh(b n pi)), F even with F(0) = 0.
SeriesResult collapse_sinh_sum(const PolynomialSpec& F, double b, const TruncationPolicy& policy = {});

enum class LaplaceForm {
  Derivative,  // derivative form: sum (-1)^n f_n d^n/ds^n log theta4(is/2, e^{-pi a})
  Shifted,     // shifted form:    sum f_n log theta4(i(s+n)/2, e^{-pi a})
};

SeriesResult laplace_theta4_lhs(const PolynomialSpec& f, double a, double s, LaplaceForm which,
                        const TruncationPolicy& policy = {});
// Derivative: f(0) log P0 - sum_{n != 0} f(n) e^{-ns} / (2n sinh(pi a n)), |s| < pi a.
// Shifted:    f(1) log P0 - sum_{n != 0} f(e^{-n}) e^{-ns} / (2n sinh(pi a n)),
//       deg f + s < pi a and -s < pi a.
SeriesResult laplace_theta4_rhs(const PolynomialSpec& f, double a, double s, LaplaceForm which,
                        const TruncationPolicy& policy = {});

// sum (-1)^n f_n d^n/ds^n log theta2(s, e^{-1/a})
SeriesResult laplace_theta2_lhs(const PolynomialSpec& f, double a, double s, const TruncationPolicy& policy = {});
// 2a - 2a f(0) s + a pi sum_{n != 0} f(2 pi n a) e^{-2 pi n s a} / sinh(pi^2 a n), |s| < pi/2.
SeriesResult laplace_theta2_rhs_printed(const PolynomialSpec& f, double a, double s, const TruncationPolicy& policy = {});
// 2a f_1 s - 2a f_2 - sum_{n != 0} f(2 pi n a) e^{-2 pi n s a} / (2n sinh(pi^2 a n)),
// f(0) = 0, |s| < pi/2.
SeriesResult laplace_theta2_rhs_derived(const PolynomialSpec& f, double a, double s, const TruncationPolicy& policy = {});

}  // namespace ellid

#pragma once

#include <vector>

#include "ellid/nome.hpp"
#include "ellid/summation.hpp"

namespace ellid {

using ThetaEval = SeriesResult;

// theta4(u, q) = 1 + 2 sum (-1)^n q^{n^2} cos(2 n u)
ThetaEval theta4(double u, const Nome& q, const TruncationPolicy& policy = {});
// theta4(i t, q) = 1 + 2 sum (-1)^n q^{n^2} cosh(2 n t)
ThetaEval theta4_imag(double t, const Nome& q, const TruncationPolicy& policy = {});
// theta2(z, q) = 2 sum_{n>=0} q^{(n+1/2)^2} cos((2n+1) z)
ThetaEval theta2(double z, const Nome& q, const TruncationPolicy& policy = {});
// theta3(z, q) = 1 + 2 sum q^{n^2} cos(2 n z)
ThetaEval theta3(double z, const Nome& q, const TruncationPolicy& policy = {});

enum class ThetaKind {
  Theta2,          // theta2(s, q), real s
  Theta4,          // theta4(s, q), real s
  Theta4ImagHalf,  // theta4(i s / 2, q) = 1 + 2 sum (-1)^n q^{n^2} cosh(n s)
};

// d/du of theta2 or theta4 at a real argument, by termwise differentiation.
double theta_u_derivative(ThetaKind kind, double z, const Nome& q, const TruncationPolicy& policy = {});

// Raw derivatives d^j/ds^j theta(s) for j = 0..order, summed termwise in one
// pass. `scale` receives the sum of term magnitudes of the order-0 series.
struct ThetaDerivatives {
  std::vector<double> values;
  double scale = 0.0;
  std::size_t terms_used = 0;
  double tail_bound = 0.0;
};

inline constexpr int kMaxLogDerivativeOrder = 12;

ThetaDerivatives theta_raw_derivatives(ThetaKind kind, double s, const Nome& q, int order,
                                       const TruncationPolicy& policy = {});

struct LogThetaDerivative {
  int order = 0;
  double at = 0.0;
  Nome nome = Nome::from_q(0.0);
  double value = 0.0;
};

// d^n/ds^n log theta(s) for the given kind, n <= 12. Throws PoleError when
// |theta(s)| <= 1e-8 * scale.
LogThetaDerivative log_theta_derivative(ThetaKind kind, int order, double s, const Nome& q,
                                        const TruncationPolicy& policy = {});
// All orders 0..order at once.
struct LogThetaSeries {
  std::vector<double> values;
  std::size_t terms_used = 0;
  double tail_bound = 0.0;
};
LogThetaSeries log_theta_series(ThetaKind kind, int order, double s, const Nome& q,
                                const TruncationPolicy& policy = {});
std::vector<double> log_theta_derivatives(ThetaKind kind, int order, double s, const Nome& q,
                                          const TruncationPolicy& policy = {});

// Converts raw derivatives f^(0..n) of a function into derivatives of log f
// via f^(n) = sum_{j=0}^{n-1} C(n-1, j) g^(j+1) f^(n-1-j).
std::vector<double> log_derivatives_from_raw(const std::vector<double>& raw);

// P0(q) = prod_{n>=1} (1 - q^{2n})
SeriesResult q_product_P0(const Nome& q, const TruncationPolicy& policy = {});
// (q; q)_inf = prod_{n>=1} (1 - q^n)
SeriesResult euler_product(const Nome& q, const TruncationPolicy& policy = {});

}  // namespace ellid

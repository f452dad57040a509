#pragma once

#include <string>
#include <vector>

#include "ellid/elliptic.hpp"
#include "ellid/numdiff.hpp"

namespace ellid {

// Result of solving K(k')/K(k) = a for the singular modulus k_a.
struct SingularSolve {
  double a = 0.0;
  EllipticArgument k = EllipticArgument::modulus(0.0);
  int iterations = 0;
  double residual = 0.0;
};

inline constexpr double kMinSingularA = 0.05;
inline constexpr double kMaxSingularA = 20.0;

// Bisection on log k with a secant polish. a must lie in [0.05, 20]; for
// a < 1 the modulus is returned through its exact complement k(1/a).
SingularSolve solve_k(double a);

// K(complement) / K(argument) in the argument's own convention.
double a_of_k(const EllipticArgument& arg);

// Richardson-extrapolated central difference of a_of_k with respect to the
// argument in its own convention; value in [0.05, 0.95].
DerivativeEstimate dadk_fd_estimate(const EllipticArgument& arg, double base_step = 0.02);
// As above; throws NonConvergenceError if the estimated error exceeds 1e-7
// relative.
double dadk_fd(const EllipticArgument& arg);

struct DadkCandidate {
  std::string label;
  double value = 0.0;
};

// Closed-form candidates for da/d(argument):
//   "stated-modulus"       dK/dk / (E K - K^2) with the argument read as k
//   "stated-parameter"     dK/dm / (E K - K^2) with the argument read as m
//   "classical-modulus"   -pi / (2 k k'^2 K^2)
//   "classical-parameter" -pi / (4 m (1-m) K^2)
// Only the candidates for the argument's own convention are comparable with
// dadk_fd(arg); all four are returned for the record.
std::vector<DadkCandidate> dadk_candidates(const EllipticArgument& arg);

// Single candidate by label; throws UnknownIdentityError on a bad label.
double dadk_candidate(const EllipticArgument& arg, const std::string& label);

}  // namespace ellid

#include "ellid/singular.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ellid/errors.hpp"

namespace ellid {

namespace {

constexpr double kPi = std::numbers::pi;

// log(K(k')/K(k)) - log(b) as a function of u = log k, for small-k solves.
double log_ratio_defect(double u, double log_b) {
  const EllipticArgument k = EllipticArgument::modulus(std::exp(u));
  return std::log(a_of_k(k)) - log_b;
}

void require_fd_range(const EllipticArgument& arg, const char* op) {
  const double v = arg.value();
  if (!(v >= 0.05 && v <= 0.95)) {
    std::ostringstream os;
    os.precision(17);
    os << op << ": argument must lie in [0.05, 0.95], got " << v;
    throw DomainError(os.str());
  }
}

EllipticArgument same_convention(Convention c, double v) {
  return c == Convention::Modulus ? EllipticArgument::modulus(v) : EllipticArgument::parameter(v);
}

}  // namespace

double a_of_k(const EllipticArgument& arg) {
  if (!(arg.value() > 0.0) || !(arg.complement() > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "a_of_k: argument must lie strictly inside (0, 1), got " << arg.value();
    throw DomainError(os.str());
  }
  return ellint_K(arg.complementary()) / ellint_K(arg);
}

SingularSolve solve_k(double a) {
  if (!(a >= kMinSingularA && a <= kMaxSingularA)) {
    std::ostringstream os;
    os.precision(17);
    os << "solve_k: a must lie in [" << kMinSingularA << ", " << kMaxSingularA << "], got " << a;
    throw RangeError(os.str());
  }
  // Solve for the small modulus belonging to b = max(a, 1/a) >= 1, so that
  // k stays well resolved; the other side is its complement.
  const bool complement_side = a < 1.0;
  const double b = complement_side ? 1.0 / a : a;
  const double log_b = std::log(b);

  double lo = -40.0;                       // k ~ 4e-18, ratio > 26
  double hi = std::log(std::sqrt(0.5));    // k = 1/sqrt(2), ratio = 1
  double g_lo = log_ratio_defect(lo, log_b);
  double g_hi = log_ratio_defect(hi, log_b);
  int iterations = 0;

  double u = hi;
  if (g_hi >= 0.0) {
    u = hi;  // b == 1 up to rounding
  } else {
    while (hi - lo > 1e-6) {
      const double mid = 0.5 * (lo + hi);
      const double g_mid = log_ratio_defect(mid, log_b);
      ++iterations;
      if (g_mid > 0.0) {
        lo = mid;
        g_lo = g_mid;
      } else {
        hi = mid;
        g_hi = g_mid;
      }
    }
    // Secant polish, falling back to the bracket if a step leaves it.
    double u0 = lo, g0 = g_lo;
    double u1 = hi, g1 = g_hi;
    u = std::fabs(g0) < std::fabs(g1) ? u0 : u1;
    for (int i = 0; i < 12 && g1 != g0; ++i) {
      double next = u1 - g1 * (u1 - u0) / (g1 - g0);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      const double g_next = log_ratio_defect(next, log_b);
      ++iterations;
      if (g_next > 0.0) {
        lo = next;
      } else {
        hi = next;
      }
      u0 = u1;
      g0 = g1;
      u1 = next;
      g1 = g_next;
      u = next;
      if (g_next == 0.0 || std::fabs(u1 - u0) <= 4e-16 * std::fabs(u1)) break;
    }
  }

  const double small_k = std::exp(u);
  SingularSolve out;
  out.a = a;
  out.k = complement_side ? EllipticArgument::modulus_from_complement(small_k) : EllipticArgument::modulus(small_k);
  out.iterations = iterations;
  out.residual = std::fabs(a_of_k(out.k) - a);
  return out;
}

DerivativeEstimate dadk_fd_estimate(const EllipticArgument& arg, double base_step) {
  require_fd_range(arg, "dadk_fd");
  const Convention c = arg.convention();
  const double x = arg.value();
  return richardson_central([c](double v) { return a_of_k(same_convention(c, v)); }, x, base_step);
}

double dadk_fd(const EllipticArgument& arg) {
  const DerivativeEstimate d = dadk_fd_estimate(arg);
  if (!(d.error <= 1e-7 * std::fabs(d.value))) {
    std::ostringstream os;
    os.precision(17);
    os << "dadk_fd: error estimate " << d.error << " exceeds 1e-7 relative at " << arg.value();
    throw NonConvergenceError(os.str());
  }
  return d.value;
}

double dadk_candidate(const EllipticArgument& arg, const std::string& label) {
  require_fd_range(arg, "dadk_candidates");
  const double x = arg.value();
  if (label == "stated-modulus" || label == "classical-modulus") {
    const EllipticArgument k = EllipticArgument::modulus(x);
    const double K = ellint_K(k);
    if (label == "classical-modulus") {
      const double kp = k.complement();
      return -kPi / (2.0 * x * kp * kp * K * K);
    }
    const double E = ellint_E(k);
    return dK(k) / (E * K - K * K);
  }
  if (label == "stated-parameter" || label == "classical-parameter") {
    const EllipticArgument m = EllipticArgument::parameter(x);
    const double K = ellint_K(m);
    if (label == "classical-parameter") {
      return -kPi / (4.0 * x * m.complement() * K * K);
    }
    const double E = ellint_E(m);
    return dK(m) / (E * K - K * K);
  }
  throw UnknownIdentityError("dadk_candidate: unknown label '" + label + "'");
}

std::vector<DadkCandidate> dadk_candidates(const EllipticArgument& arg) {
  std::vector<DadkCandidate> out;
  for (const char* label : {"stated-modulus", "stated-parameter", "classical-modulus", "classical-parameter"}) {
    out.push_back({label, dadk_candidate(arg, label)});
  }
  return out;
}

}  // namespace ellid

#pragma once

#include <string_view>

namespace ellid {

// How the real number handed to K/E is to be read.
enum class Convention { Modulus, Parameter };

std::string_view to_string(Convention c);

// An elliptic-integral argument: the value plus its convention tag, together
// with the complementary value (k' = sqrt(1-k^2) for a modulus, 1-m for a
// parameter). Near 1 the complement carries the information that the value
// itself has lost, so arguments built from an exact complement stay usable
// where 1 - value is below binary64 resolution.
class EllipticArgument {
 public:
  static EllipticArgument modulus(double k);
  static EllipticArgument parameter(double m);
  // k from k' (k = sqrt(1 - k'^2)); k' must lie in [0, 1].
  static EllipticArgument modulus_from_complement(double k_prime);
  // m from 1 - m; 1 - m must lie in [0, 1].
  static EllipticArgument parameter_from_complement(double one_minus_m);

  [[nodiscard]] double value() const { return value_; }
  [[nodiscard]] double complement() const { return complement_; }
  [[nodiscard]] Convention convention() const { return convention_; }

  // k' = sqrt(1 - k^2) regardless of convention.
  [[nodiscard]] double complementary_modulus() const;
  // m = k^2 regardless of convention.
  [[nodiscard]] double parameter_value() const;

  [[nodiscard]] EllipticArgument to_modulus() const;
  [[nodiscard]] EllipticArgument to_parameter() const;
  [[nodiscard]] EllipticArgument in(Convention c) const;
  // The complementary argument in the same convention (k -> k', m -> 1-m).
  [[nodiscard]] EllipticArgument complementary() const;

  // True when K would be meaningless: the complement is zero, or the value
  // sits within 1e-12 of 1 and the complement was derived from it.
  [[nodiscard]] bool near_singular() const;

 private:
  EllipticArgument(double value, double complement, Convention c, bool exact_complement)
      : value_(value), complement_(complement), convention_(c), exact_complement_(exact_complement) {}

  double value_;
  double complement_;
  Convention convention_;
  bool exact_complement_;
};

inline constexpr double kSingularCutoff = 1e-12;

// Arithmetic-geometric mean of two positive reals.
double agm(double x, double y);
// Same, also reporting the number of iterations performed.
double agm(double x, double y, int& iterations);

// Complete elliptic integral of the first kind.
double ellint_K(const EllipticArgument& arg);
// Complete elliptic integral of the second kind; E(1) = 1.
double ellint_E(const EllipticArgument& arg);

// dK/d(value) in the argument's own convention:
//   Modulus:   (E - k'^2 K) / (k k'^2)
//   Parameter: (E - (1-m) K) / (2 m (1-m))
double dK(const EllipticArgument& arg);

// E K' + E' K - K K' - pi/2, primes at the complementary argument.
double legendre_defect(const EllipticArgument& arg);

}  // namespace ellid

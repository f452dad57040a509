#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace ellid {

struct DerivativeEstimate {
  double value = 0.0;
  double error = 0.0;
};

// Ridders' extrapolation of central differences: a Neville tableau over steps
// h, h/c, h/c^2, ... keeping the entry with the smallest error estimate.
template <typename F>
DerivativeEstimate richardson_central(F&& f, double x, double h) {
  constexpr int kTable = 10;
  constexpr double kShrink = 1.4;
  constexpr double kShrink2 = kShrink * kShrink;
  constexpr double kSafe = 2.0;
  std::array<std::array<double, kTable>, kTable> a{};
  DerivativeEstimate best{0.0, std::numeric_limits<double>::max()};
  a[0][0] = (f(x + h) - f(x - h)) / (2.0 * h);
  for (int i = 1; i < kTable; ++i) {
    h /= kShrink;
    a[0][i] = (f(x + h) - f(x - h)) / (2.0 * h);
    double factor = kShrink2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * factor - a[j - 1][i - 1]) / (factor - 1.0);
      factor *= kShrink2;
      const double err = std::max(std::fabs(a[j][i] - a[j - 1][i]), std::fabs(a[j][i] - a[j - 1][i - 1]));
      if (err <= best.error) {
        best = {a[j][i], err};
      }
    }
    if (std::fabs(a[i][i] - a[i - 1][i - 1]) >= kSafe * best.error) break;
  }
  return best;
}

}  // namespace ellid

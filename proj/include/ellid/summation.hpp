#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>

#include "ellid/compensated.hpp"
#include "ellid/errors.hpp"

namespace ellid {

struct TruncationPolicy {
  double tolerance = 1e-14;
  std::size_t cap = 10000;
  double ratio_guard = 0.99;

  void validate() const;
};

// Value of a truncated series plus the estimated magnitude of what was
// dropped.
struct SeriesResult {
  double value = 0.0;
  std::size_t terms_used = 0;
  double tail_bound = 0.0;
};

// One series term. `envelope` is a majorant of |value| that does not
// oscillate (e.g. n/(e^{cn}-1) for (-1)^n sin(nv) n/(e^{cn}-1)); stopping and
// tail estimation use it, so a term that happens to vanish never stops the sum
// early.
struct Term {
  double value = 0.0;
  double envelope = 0.0;
};

namespace detail {

inline Term as_term(double v) { return {v, std::fabs(v)}; }
inline Term as_term(Term t) { return t; }

// Tracks the stopping rule shared by every series in the library: stop once
// the latest envelope is below tolerance * max(1, |partial|), the empirical
// ratio of consecutive envelopes is below ratio_guard, and the geometric tail
// estimate is below the tolerance.
class StoppingRule {
 public:
  explicit StoppingRule(const TruncationPolicy& policy) : policy_(policy) {}

  // Returns true when summation may stop after a term with this envelope.
  bool observe(double envelope, double partial) {
    bool done = false;
    if (have_previous_) {
      if (envelope == 0.0) {
        tail_ = 0.0;
        done = true;
      } else if (previous_ > 0.0) {
        const double ratio = envelope / previous_;
        if (ratio < policy_.ratio_guard) {
          const double tail = envelope * ratio / (1.0 - ratio);
          const double scale = std::max(1.0, std::fabs(partial));
          if (envelope < policy_.tolerance * scale && tail <= policy_.tolerance) {
            tail_ = tail;
            done = true;
          }
        }
      }
    }
    previous_ = envelope;
    have_previous_ = true;
    return done;
  }

  [[nodiscard]] double tail() const { return tail_; }

 private:
  const TruncationPolicy& policy_;
  double previous_ = 0.0;
  double tail_ = 0.0;
  bool have_previous_ = false;
};

[[noreturn]] void throw_non_convergence(const char* what, std::size_t cap);

}  // namespace detail

// Sums term(n) for n = first, first+1, ... in ascending order with compensated
// accumulation, starting from `initial`.
template <typename TermFn>
SeriesResult sum_series(TermFn&& term, const TruncationPolicy& policy, std::int64_t first = 1,
                        double initial = 0.0, const char* what = "series") {
  CompensatedSum acc(initial);
  detail::StoppingRule rule(policy);
  for (std::size_t i = 0; i < policy.cap; ++i) {
    const Term t = detail::as_term(term(first + static_cast<std::int64_t>(i)));
    if (!std::isfinite(t.value) || !std::isfinite(t.envelope)) {
      detail::throw_non_convergence(what, i + 1);
    }
    acc += t.value;
    if (rule.observe(t.envelope, acc.value())) {
      return {acc.value(), i + 1, rule.tail()};
    }
  }
  detail::throw_non_convergence(what, policy.cap);
}

}  // namespace ellid

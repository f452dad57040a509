#include "ellid/summation.hpp"

#include <sstream>

namespace ellid {

void TruncationPolicy::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw DomainError("truncation policy: tolerance must be positive and finite");
  }
  if (cap == 0) throw DomainError("truncation policy: cap must be at least 1");
  if (!(ratio_guard > 0.0 && ratio_guard < 1.0)) {
    throw DomainError("truncation policy: ratio_guard must lie in (0, 1)");
  }
}

namespace detail {

void throw_non_convergence(const char* what, std::size_t cap) {
  std::ostringstream os;
  os << what << ": no convergence after " << cap << " terms";
  throw NonConvergenceError(os.str());
}

}  // namespace detail

}  // namespace ellid

#include "frolov/error_bounds.hpp"

#include <cmath>

#include "frolov/errors.hpp"

namespace frolov {

double bound_constant(const SmoothnessVector& r) {
  const int d = r.dimension();
  const int r_min = r.min();
  const int eta = r.eta();
  if (r_min < 1) throw InvalidArgument("bound_constant: smoothness must be >= 1");

  double c = std::ldexp(1.0, d + 1);
  if (eta < d) {
    const int r_next = r.next();
    c *= std::pow(1.0 - std::ldexp(1.0, -2 * (r_next - r_min)), -(d - eta) / 2.0);
  }
  c *= std::pow(1.0 - std::ldexp(1.0, 1 - 2 * r_min), -eta / 2.0);
  c *= std::sqrt(static_cast<double>(norm_equivalence_constant(r)));
  return c;
}

double theoretical_bound(const BoundInputs& b) {
  if (!(b.n > 0)) throw InvalidArgument("theoretical_bound: n must be positive");
  if (!(b.d_p > 0) || !(b.b_p >= 0)) throw InvalidArgument("theoretical_bound: D_P must be positive, B_P >= 0");
  const int d = b.d();
  const double volume_term = std::max(b.d_p, std::pow(2.0 * b.b_p, d) / b.n);
  const int eta = b.r.eta();
  double value = bound_constant(b.r) * std::sqrt(volume_term) * std::pow(b.d_p / b.n, b.r.min());
  if (eta > 1) {
    const double log_term = 2.0 + std::log(b.n / b.d_p);
    if (!(log_term > 0)) throw InvalidArgument("theoretical_bound: n is too small relative to D_P");
    value *= std::pow(log_term, (eta - 1) / 2.0);
  }
  return value;
}

double m_bound(double n, double d_p, double b_p, int d) {
  if (!(n > 0) || !(d_p > 0) || !(b_p >= 0) || d < 1) throw InvalidArgument("m_bound: inputs must be positive");
  return n * d_p * std::pow(1.0 + 2.0 * b_p / std::pow(d_p * n, 1.0 / d), d) + 1.0;
}

}  // namespace frolov

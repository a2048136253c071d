#pragma once

#include "frolov/rkhs_kernel.hpp"

namespace frolov {

/// Ingredients of the explicit Frolov error bound. `b_p` is the
/// representation-dependent upper bound from LatticeBasis::b_p_upper(),
/// which can only enlarge the bound.
struct BoundInputs {
  double n = 0.0;
  SmoothnessVector r;
  double d_p = 0.0;
  double b_p = 0.0;

  int d() const { return r.dimension(); }
};

/// C(d, eta, r) = 2^{d+1} (1 - 2^{-2(r'-r)})^{-(d-eta)/2} (1 - 2^{1-2r})^{-eta/2}
///                * norm_equivalence_constant(r)^{1/2}
/// with r = min_i r_i, eta its multiplicity and r' the next larger value.
double bound_constant(const SmoothnessVector& r);

/// C max{D_P, (2B_P)^d / n}^{1/2} (D_P/n)^{r} (2 + ln(n/D_P))^{(eta-1)/2}.
double theoretical_bound(const BoundInputs& b);

/// n D_P (1 + 2B_P/(D_P n)^{1/d})^d + 1, the cell-cover count bound.
double m_bound(double n, double d_p, double b_p, int d);

}  // namespace frolov

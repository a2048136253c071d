#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "frolov/cubature_rule.hpp"
#include "frolov/rkhs_kernel.hpp"

namespace frolov {

/// Worst-case error in the zero-boundary mixed Sobolev space, with the three
/// summands of wce^2 = term_const - 2 term_cross + term_gram kept.
struct WceReport {
  double absolute_wce = 0.0;
  double normalized_wce = 0.0;
  double term_const = 0.0;
  double term_cross = 0.0;
  double term_gram = 0.0;
  /// The combination came out negative (precision floor) and was set to 0.
  bool clamped = false;
};

enum class Accumulation { compensated, double_double };

struct WceOptions {
  Accumulation accumulation = Accumulation::compensated;
  /// Rows per block of the Gram sum. Results are bit-reproducible for a
  /// fixed block size, independent of the thread count.
  std::size_t block_rows = 64;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

WceReport worst_case_error(const CubatureRule& rule, const SmoothnessVector& r, const WceOptions& options = {});

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least-squares line through (log N, log wce). Needs at least 3 pairs with
/// N >= 1 and wce > 0.
RateFit fit_rate(std::span<const std::pair<double, double>> series);

}  // namespace frolov

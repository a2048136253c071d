#include "frolov/wce_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "frolov/detail/high_precision.hpp"
#include "frolov/errors.hpp"
#include "frolov/summation.hpp"

namespace frolov {

namespace {

// Per-point kernel data: coordinates and their complements 1 - x, so that
// every pair evaluates the factored kernel from stored values.
class PointTable {
 public:
  PointTable(const CubatureRule& rule, const SmoothnessVector& r) : d_(r.dimension()) {
    for (int l = 0; l < d_; ++l) {
      kernels_.push_back(&kernel_of_order(r[l]));
      scale_ *= kernels_.back()->kernel_scale();
    }
    data_.resize(rule.size() * 2 * static_cast<std::size_t>(d_));
    for (std::size_t i = 0; i < rule.size(); ++i) {
      double* row = &data_[i * 2 * static_cast<std::size_t>(d_)];
      for (int l = 0; l < d_; ++l) {
        const double x = rule.points(static_cast<Eigen::Index>(i), l);
        row[2 * l] = x;
        row[2 * l + 1] = 1.0 - x;
      }
    }
  }

  const detail::HighPrecision& scale() const noexcept { return scale_; }

  /// Tensor kernel times scale().
  double kernel(std::size_t i, std::size_t j) const {
    const double* p = &data_[i * 2 * static_cast<std::size_t>(d_)];
    const double* q = &data_[j * 2 * static_cast<std::size_t>(d_)];
    double value = 1.0;
    for (int l = 0; l < d_; ++l) {
      const double x = p[2 * l], y = q[2 * l];
      value *= x <= y ? kernels_[l]->factored_scaled(x, q[2 * l + 1], y - x)
                      : kernels_[l]->factored_scaled(y, p[2 * l + 1], x - y);
      if (value == 0.0) break;
    }
    return value;
  }

 private:
  int d_;
  detail::HighPrecision scale_ = 1;
  std::vector<const ZeroBoundaryKernel*> kernels_;
  std::vector<double> data_;
};

template <class Accumulator>
Accumulator gram_term(const PointTable& table, std::span<const double> w, const WceOptions& options) {
  const std::size_t n = w.size();
  if (n == 0) return {};
  const std::size_t block = std::max<std::size_t>(1, options.block_rows);
  const std::size_t blocks = (n + block - 1) / block;
  std::vector<Accumulator> partial(blocks);

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t b = next++; b < blocks; b = next++) {
      Accumulator acc;
      const std::size_t end = std::min(n, (b + 1) * block);
      for (std::size_t i = b * block; i < end; ++i) {
        if (w[i] == 0.0) continue;
        Accumulator row;
        for (std::size_t j = i + 1; j < n; ++j) row.add(w[j] * table.kernel(i, j));
        acc.add(2.0 * w[i] * row.value());
        acc.add(w[i] * w[i] * table.kernel(i, i));
      }
      partial[b] = acc;
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, blocks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Accumulator total;
  for (const auto& p : partial) total.add(p);
  return total;
}

// Sum of w_i prod_l (2r_l)! riesz(r_l, x_il), unscaled.
template <class Accumulator>
Accumulator cross_term(const CubatureRule& rule, const SmoothnessVector& r) {
  std::vector<const ZeroBoundaryKernel*> kernels;
  for (int l = 0; l < r.dimension(); ++l) kernels.push_back(&kernel_of_order(r[l]));
  Accumulator acc;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    double v = rule.weights[i];
    for (int l = 0; l < r.dimension() && v != 0.0; ++l)
      v *= kernels[static_cast<std::size_t>(l)]->riesz_scaled(rule.points(static_cast<Eigen::Index>(i), l));
    acc.add(v);
  }
  return acc;
}

template <class Accumulator>
detail::HighPrecision widen(const Accumulator& acc) {
  const auto [hi, lo] = acc.parts();
  return detail::HighPrecision(hi) + detail::HighPrecision(lo);
}

// The three terms agree to many more digits than their difference keeps,
// so the scaled sums are only divided and combined in 50-digit arithmetic.
template <class Accumulator>
WceReport evaluate(const CubatureRule& rule, const SmoothnessVector& r, const WceOptions& options) {
  using detail::HighPrecision;
  HighPrecision term_const = 1;
  HighPrecision riesz_scale = 1;
  for (int l = 0; l < r.dimension(); ++l) {
    term_const *= HighPrecision(kernel_double_integral(r[l]));
    riesz_scale *= kernel_of_order(r[l]).riesz_scale();
  }
  const HighPrecision cross = widen(cross_term<Accumulator>(rule, r)) / riesz_scale;
  const PointTable table(rule, r);
  const HighPrecision gram = widen(gram_term<Accumulator>(table, rule.weights, options)) / table.scale();
  HighPrecision sq = term_const - 2 * cross + gram;

  WceReport report;
  report.term_const = static_cast<double>(term_const);
  report.term_cross = static_cast<double>(cross);
  report.term_gram = static_cast<double>(gram);
  if (sq < 0) {
    report.clamped = true;
    sq = 0;
  }
  report.absolute_wce = static_cast<double>(sqrt(sq));
  report.normalized_wce = static_cast<double>(sqrt(sq / term_const));
  return report;
}

}  // namespace

WceReport worst_case_error(const CubatureRule& rule, const SmoothnessVector& r, const WceOptions& options) {
  if (rule.size() > 0 && rule.d != r.dimension())
    throw InvalidArgument("worst_case_error: rule dimension " + std::to_string(rule.d) +
                          " does not match smoothness dimension " + std::to_string(r.dimension()));
  if (rule.size() == 0 && rule.d != 0 && rule.d != r.dimension())
    throw InvalidArgument("worst_case_error: rule dimension does not match smoothness dimension");
  if (static_cast<std::size_t>(rule.points.rows()) != rule.weights.size())
    throw InvalidArgument("worst_case_error: point and weight counts differ");
  if (options.accumulation == Accumulation::double_double) return evaluate<DoubleDoubleSum>(rule, r, options);
  return evaluate<CompensatedSum>(rule, r, options);
}

RateFit fit_rate(std::span<const std::pair<double, double>> series) {
  if (series.size() < 3) throw InvalidArgument("fit_rate: need at least 3 points");
  double sx = 0, sy = 0;
  for (auto [n, e] : series) {
    if (!(n >= 1.0) || !(e > 0.0) || !std::isfinite(n) || !std::isfinite(e))
      throw InvalidArgument("fit_rate: values must satisfy N >= 1 and wce > 0");
    sx += std::log(n);
    sy += std::log(e);
  }
  const double m = static_cast<double>(series.size());
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (auto [n, e] : series) {
    const double dx = std::log(n) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(e) - my);
  }
  if (sxx == 0.0) throw InvalidArgument("fit_rate: all N are equal");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

}  // namespace frolov

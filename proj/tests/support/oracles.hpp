#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance gate. Nothing here calls into the code it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

/// Adaptive Gauss-Kronrod on [a, b], split at the given interior breakpoints.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        std::vector<double> breaks = {}) {
  breaks.push_back(a);
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = std::clamp(breaks[i], a, b), hi = std::clamp(breaks[i + 1], a, b);
    if (hi <= lo) continue;
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-15);
  }
  return total;
}

/// Integral definition of the left-boundary kernel:
/// int_0^1 (x-t)_+^{r-1} (y-t)_+^{r-1} dt / ((r-1)!)^2.
inline double base_kernel_integral(int r, double x, double y) {
  const double fact = std::tgamma(r);
  auto integrand = [&](double t) {
    return std::pow(std::max(x - t, 0.0), r - 1) * std::pow(std::max(y - t, 0.0), r - 1) / (fact * fact);
  };
  return integrate(integrand, 0.0, std::min(x, y));
}

/// Printed Gramian inverses for r = 1, 2, 3 as integer matrices.
inline std::vector<std::vector<long>> printed_gram_inverse(int r) {
  switch (r) {
    case 1: return {{1}};
    case 2: return {{4, -6}, {-6, 12}};
    default: return {{9, -36, 60}, {-36, 192, -360}, {60, -360, 720}};
  }
}

/// Boundary-corrected kernel for r <= 3 assembled from the min/max base
/// formula and the printed Gramian inverse, in long double.
inline long double corrected_kernel(int r, long double x, long double y) {
  const long double lo = std::min(x, y), hi = std::max(x, y);
  auto fact = [](int n) {
    long double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  auto binom = [&](int n, int k) { return fact(n) / (fact(k) * fact(n - k)); };
  long double base = 0;
  for (int k = r; k <= 2 * r - 1; ++k) base += binom(2 * r - 1, k) * std::pow(-lo, k) * std::pow(hi, 2 * r - 1 - k);
  base *= (r % 2 ? -1.0L : 1.0L) / fact(2 * r - 1);
  const auto g = printed_gram_inverse(r);
  long double corr = 0;
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      corr += g[j][k] / (fact(j + r) * fact(k + r)) * std::pow(x, j + r) * std::pow(y, k + r);
  return base - corr;
}

/// All k with A k in the closed cube [-1/2, 1/2]^d, searched over the box
/// |k|_inf <= ceil(|A^{-1}|_inf / 2) + 1 (any such k satisfies
/// |k|_inf <= |A^{-1}|_inf |A k|_inf <= |A^{-1}|_inf / 2). Returns the
/// shifted points sorted lexicographically.
inline std::vector<std::vector<double>> brute_force_points(const Eigen::MatrixXd& a, double eps = 1e-12) {
  const int d = static_cast<int>(a.rows());
  const Eigen::MatrixXd inv = a.inverse();
  double row_max = 0;
  for (int i = 0; i < d; ++i) row_max = std::max(row_max, inv.row(i).cwiseAbs().sum());
  const long radius = static_cast<long>(std::ceil(row_max / 2)) + 1;
  std::vector<long> k(d, -radius);
  std::vector<std::vector<double>> out;
  while (true) {
    Eigen::VectorXd kv(d);
    for (int i = 0; i < d; ++i) kv(i) = static_cast<double>(k[i]);
    const Eigen::VectorXd x = a * kv;
    if (x.cwiseAbs().maxCoeff() <= 0.5 + eps) {
      std::vector<double> p(d);
      for (int i = 0; i < d; ++i) p[i] = std::clamp(x(i) + 0.5, 0.0, 1.0);
      out.push_back(p);
    }
    int i = 0;
    while (i < d && k[i] == radius) k[i++] = -radius;
    if (i == d) break;
    ++k[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Sparse grid by the combination technique,
///   sum_{q=0}^{d-1} (-1)^q C(d-1, q) sum_{|k|_1 = L-q} Q_{2^k_1} x ... x Q_{2^k_d},
/// with Q_m the m-point rule j/m. Keys are coordinates times 2^L, values are
/// weights times 2^L; points with a zero coordinate or zero weight are removed.
inline std::map<std::vector<long>, long> combination_sparse_grid(int level, int d) {
  std::map<std::vector<long>, long> acc;
  auto binom = [](int n, int k) {
    long v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
  };
  for (int q = 0; q < d && q <= level; ++q) {
    const long sign = (q % 2 ? -1 : 1) * binom(d - 1, q);
    const int total = level - q;
    std::vector<int> k(d, 0);
    // compositions of `total` into d nonnegative parts
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == d - 1) {
        k[pos] = left;
        std::vector<long> idx(d, 0);
        while (true) {
          std::vector<long> key(d);
          for (int i = 0; i < d; ++i) key[i] = idx[i] << (level - k[i]);
          // weight 2^{-sum k} = 2^{q - L}, times 2^L gives 2^q
          acc[key] += sign * (1L << q);
          int i = 0;
          while (i < d && idx[i] == (1L << k[i]) - 1) idx[i++] = 0;
          if (i == d) break;
          ++idx[i];
        }
        return;
      }
      for (int v = 0; v <= left; ++v) {
        k[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    rec(0, total);
  }
  for (auto it = acc.begin(); it != acc.end();) {
    const bool boundary = std::any_of(it->first.begin(), it->first.end(), [](long v) { return v == 0; });
    it = (boundary || it->second == 0) ? acc.erase(it) : std::next(it);
  }
  return acc;
}

/// Least-squares slope of log(e) against log(n).
inline double loglog_slope(const std::vector<double>& n, const std::vector<double>& e) {
  const std::size_t m = n.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += std::log(n[i]) / m;
    my += std::log(e[i]) / m;
  }
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (std::log(n[i]) - mx) * (std::log(n[i]) - mx);
    sxy += (std::log(n[i]) - mx) * (std::log(e[i]) - my);
  }
  return sxy / sxx;
}

}  // namespace oracle

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "frolov/detail/high_precision.hpp"

namespace frolov {

/// Integer smoothness vector r = (r_1, ..., r_d), every r_i >= 1.
class SmoothnessVector {
 public:
  explicit SmoothnessVector(std::vector<int> r);
  /// Parses "2,2,2" (whitespace tolerated).
  static SmoothnessVector parse(std::string_view text);
  /// (r, ..., r) of length d.
  static SmoothnessVector uniform(int d, int r);

  int dimension() const noexcept { return static_cast<int>(r_.size()); }
  int operator[](int i) const { return r_[static_cast<std::size_t>(i)]; }
  std::span<const int> values() const noexcept { return r_; }

  int min() const;
  /// Number of components equal to min().
  int eta() const;
  /// Smallest component strictly greater than min(); 0 when eta() == d.
  int next() const;

  std::string to_string() const;

 private:
  std::vector<int> r_;
};

/// Largest smoothness order supported by the exact Gramian arithmetic.
inline constexpr int kMaxSmoothness = 8;

/// Exact inverse of G_jk = 1 / (j! k! (j+k+1)), j,k = 0..r-1.
class GramianInverse {
 public:
  GramianInverse(int r, std::vector<detail::Rational> entries) : r_(r), entries_(std::move(entries)) {}
  int order() const noexcept { return r_; }
  const detail::Rational& at(int j, int k) const { return entries_[static_cast<std::size_t>(j * r_ + k)]; }
  Eigen::MatrixXd to_double() const;

 private:
  int r_;
  std::vector<detail::Rational> entries_;
};

detail::Rational gram_entry(int j, int k);
const GramianInverse& gram_inverse(int r);

/// Kernel of the space with the left boundary condition only:
/// int_0^1 (x-t)_+^{r-1} (y-t)_+^{r-1} / ((r-1)!)^2 dt in closed form.
double k_base(int r, double x, double y);

/// u_j(x), the representer of f -> f^{(j)}(1) under k_base.
double boundary_representer(int r, int j, double x);

/// Reproducing kernel of the zero-boundary space of order r on [0,1].
double k_zero(int r, double x, double y);

/// Tensor-product kernel prod_l k_zero(r_l, x_l, y_l).
double k_tensor(const SmoothnessVector& r, std::span<const double> x, std::span<const double> y);

/// int_0^1 k_zero(r, x, y) dx.
double riesz_univariate(int r, double y);

/// int_0^1 int_0^1 k_zero(r, x, y) dx dy, exact.
detail::Rational kernel_double_integral(int r);

/// Norm of the integration functional: prod_l kernel_double_integral(r_l)^{1/2}.
double initial_error(const SmoothnessVector& r);

/// sum over subsets e of [d] of prod_{i in e} 1 / ([(r_i-1)!]^2 (2r_i-1) 2r_i).
detail::Rational norm_equivalence_constant(const SmoothnessVector& r);

/// Precomputed univariate kernel of fixed order; the free functions above
/// delegate to cached instances of this.
///
/// For x <= y the zero-boundary kernel factors as
///   a^r b^r sum_{i,j<r} h_ij a^i b^j c^{2r-2-i-j},  a = x, b = 1-y, c = y-x,
/// with h_ij >= 0. The table h is derived at construction from the
/// Gramian-corrected form in exact arithmetic.
class ZeroBoundaryKernel {
 public:
  explicit ZeroBoundaryKernel(int r);
  int order() const noexcept { return r_; }
  double base(double x, double y) const;
  double operator()(double x, double y) const;
  /// Kernel value from a = min(x,y), b = 1 - max(x,y), c = |x - y|.
  double factored(double a, double b, double c) const { return factored_scaled(a, b, c) / kernel_scale_; }
  /// kernel_scale() times the kernel; all coefficients are integers.
  double factored_scaled(double a, double b, double c) const;
  double kernel_scale() const noexcept { return kernel_scale_; }
  double riesz(double y) const { return riesz_scaled(y) / riesz_scale_; }
  /// (y(1-y))^r, which is riesz_scale() = (2r)! times the representer.
  double riesz_scaled(double y) const;
  double riesz_scale() const noexcept { return riesz_scale_; }
  double double_integral() const noexcept { return double_integral_; }
  /// h_ij of the factored form, exact.
  const detail::Rational& factor_coefficient(int i, int j) const {
    return exact_h_[static_cast<std::size_t>(i * r_ + j)];
  }

 private:
  int r_;
  std::vector<double> base_coeff_;  // k = r..2r-1, signed, divided by (2r-1)!
  std::vector<detail::Rational> exact_h_;
  std::vector<double> h_;  // row-major r x r, times kernel_scale_
  double kernel_scale_;
  double riesz_scale_;
  double double_integral_;
};

const ZeroBoundaryKernel& kernel_of_order(int r);

}  // namespace frolov

#include "frolov/rkhs_kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "frolov/errors.hpp"

namespace frolov {

using detail::BigInt;
using detail::Rational;

SmoothnessVector::SmoothnessVector(std::vector<int> r) : r_(std::move(r)) {
  if (r_.empty()) throw InvalidArgument("smoothness vector must have at least one component");
  for (int v : r_)
    if (v < 1) throw InvalidArgument("smoothness components must be >= 1, got " + std::to_string(v));
}

SmoothnessVector SmoothnessVector::parse(std::string_view text) {
  std::vector<int> values;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse smoothness component '" + token + "'");
    }
    if (token.find_first_not_of(" \t", used) != std::string::npos)
      throw InvalidArgument("cannot parse smoothness component '" + token + "'");
    values.push_back(v);
  }
  return SmoothnessVector(std::move(values));
}

SmoothnessVector SmoothnessVector::uniform(int d, int r) {
  if (d < 1) throw InvalidArgument("dimension must be >= 1");
  return SmoothnessVector(std::vector<int>(static_cast<std::size_t>(d), r));
}

int SmoothnessVector::min() const { return *std::min_element(r_.begin(), r_.end()); }

int SmoothnessVector::eta() const {
  const int m = min();
  return static_cast<int>(std::count(r_.begin(), r_.end(), m));
}

int SmoothnessVector::next() const {
  const int m = min();
  int best = 0;
  for (int v : r_)
    if (v > m && (best == 0 || v < best)) best = v;
  return best;
}

std::string SmoothnessVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r_[i]);
  }
  return out;
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

void check_order(int r) {
  if (r < 1) throw InvalidArgument("smoothness order must be >= 1, got " + std::to_string(r));
  if (r > kMaxSmoothness)
    throw UnsupportedSmoothness("smoothness order " + std::to_string(r) + " exceeds the supported maximum " +
                                std::to_string(kMaxSmoothness));
}

GramianInverse invert_gramian(int r) {
  // Gauss-Jordan on [G | I] in exact rationals.
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(2 * r, Rational(0)));
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) a[j][k] = gram_entry(j, k);
    a[j][r + j] = 1;
  }
  for (int col = 0; col < r; ++col) {
    int pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    const Rational p = a[col][col];
    for (auto& v : a[col]) v /= p;
    for (int row = 0; row < r; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (int c = 0; c < 2 * r; ++c) a[row][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(r * r));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) entries.push_back(a[j][r + k]);
  return GramianInverse(r, std::move(entries));
}

double to_double(const Rational& q) { return static_cast<double>(q); }

}  // namespace

Eigen::MatrixXd GramianInverse::to_double() const {
  Eigen::MatrixXd m(r_, r_);
  for (int j = 0; j < r_; ++j)
    for (int k = 0; k < r_; ++k) m(j, k) = static_cast<double>(at(j, k));
  return m;
}

Rational gram_entry(int j, int k) { return Rational(1) / Rational(factorial(j) * factorial(k) * (j + k + 1)); }

const GramianInverse& gram_inverse(int r) {
  check_order(r);
  static const std::vector<GramianInverse> cache = [] {
    std::vector<GramianInverse> v;
    for (int order = 1; order <= kMaxSmoothness; ++order) v.push_back(invert_gramian(order));
    return v;
  }();
  return cache[static_cast<std::size_t>(r - 1)];
}

Rational kernel_double_integral(int r) {
  check_order(r);
  const GramianInverse& g = gram_inverse(r);
  Rational value = Rational(1) / Rational(factorial(r) * factorial(r) * (2 * r + 1));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) value -= g.at(j, k) / Rational(factorial(j + r + 1) * factorial(k + r + 1));
  return value;
}

namespace {

// Homogeneous polynomial in (a, b, c), keyed by exponents.
using Trivariate = std::map<std::array<int, 3>, Rational>;

// K(x, y) for x <= y rewritten in a = x, b = 1 - y, c = y - x, every
// monomial lifted to degree 4r-2 with powers of a + b + c = 1, then
// divided by a^r b^r.
std::vector<Rational> factor_kernel(int r, const std::vector<Rational>& base, const GramianInverse& g) {
  std::map<std::pair<int, int>, Rational> xy;  // x^i y^j
  for (int k = r; k <= 2 * r - 1; ++k) xy[{k, 2 * r - 1 - k}] += base[static_cast<std::size_t>(k - r)];
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) xy[{j + r, k + r}] -= g.at(j, k) / Rational(factorial(j + r) * factorial(k + r));

  const int degree = 4 * r - 2;
  Trivariate abc;
  for (const auto& [exps, coeff] : xy) {
    if (coeff == 0) continue;
    const auto [i, j] = exps;
    const int lift = degree - i - j;
    for (int p = 0; p <= j; ++p) {          // (a + c)^j
      const Rational cp = coeff * Rational(binomial(j, p));
      for (int u = 0; u <= lift; ++u)       // (a + b + c)^lift
        for (int v = 0; u + v <= lift; ++v) {
          const int w = lift - u - v;
          const BigInt multinomial = factorial(lift) / (factorial(u) * factorial(v) * factorial(w));
          abc[{i + p + u, v, j - p + w}] += cp * Rational(multinomial);
        }
    }
  }

  std::vector<Rational> h(static_cast<std::size_t>(r * r), Rational(0));
  for (const auto& [e, coeff] : abc) {
    if (coeff == 0) continue;
    const int i = e[0] - r, j = e[1] - r;
    if (i < 0 || j < 0 || i >= r || j >= r || coeff < 0)
      throw std::logic_error("zero-boundary kernel of order " + std::to_string(r) + " does not factor");
    h[static_cast<std::size_t>(i * r + j)] = coeff;
  }
  return h;
}

}  // namespace

ZeroBoundaryKernel::ZeroBoundaryKernel(int r) : r_(r) {
  check_order(r);
  std::vector<Rational> exact_base;
  for (int k = r; k <= 2 * r - 1; ++k) {
    Rational c = Rational(binomial(2 * r - 1, k)) / Rational(factorial(2 * r - 1));
    if ((r + k) % 2) c = -c;
    exact_base.push_back(c);
    base_coeff_.push_back(to_double(c));
  }
  exact_h_ = factor_kernel(r, exact_base, gram_inverse(r));
  BigInt scale = 1;
  for (const auto& q : exact_h_) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(q));
  kernel_scale_ = static_cast<double>(scale);
  for (const auto& q : exact_h_) h_.push_back(to_double(q * Rational(scale)));
  riesz_scale_ = static_cast<double>(factorial(2 * r));
  double_integral_ = to_double(kernel_double_integral(r));
}

double ZeroBoundaryKernel::base(double x, double y) const {
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  // lo^r * sum_i c_{r+i} lo^i hi^{r-1-i}, homogeneous Horner in hi.
  double acc = 0.0;
  double lo_pow = 1.0;
  for (int i = 0; i < r_; ++i) {
    acc = acc * hi + base_coeff_[static_cast<std::size_t>(i)] * lo_pow;
    lo_pow *= lo;
  }
  double lo_r = 1.0;
  for (int e = 0; e < r_; ++e) lo_r *= lo;
  return lo_r * acc;
}

double ZeroBoundaryKernel::factored_scaled(double a, double b, double c) const {
  if (r_ == 1) return a * b;
  if (r_ == 2) {
    const double ab = a * b;
    return ab * ab * (h_[0] * c * c + h_[1] * b * c + h_[2] * a * c + h_[3] * ab);
  }
  std::array<double, 2 * kMaxSmoothness> pc{};
  pc[0] = 1.0;
  for (int e = 1; e <= 2 * r_ - 2; ++e) pc[e] = pc[e - 1] * c;
  double sum = 0.0;
  double pa = 1.0;
  for (int i = 0; i < r_; ++i) {
    double inner = 0.0;
    double pb = 1.0;
    for (int j = 0; j < r_; ++j) {
      inner += h_[static_cast<std::size_t>(i * r_ + j)] * pb * pc[2 * r_ - 2 - i - j];
      pb *= b;
    }
    sum += pa * inner;
    pa *= a;
  }
  double abr = 1.0;
  for (int e = 0; e < r_; ++e) abr *= a * b;
  return abr * sum;
}

double ZeroBoundaryKernel::operator()(double x, double y) const {
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  return factored(lo, 1.0 - hi, hi - lo);
}

double ZeroBoundaryKernel::riesz_scaled(double y) const {
  double p = 1.0;
  const double t = y * (1.0 - y);
  for (int e = 0; e < r_; ++e) p *= t;
  return p;
}

const ZeroBoundaryKernel& kernel_of_order(int r) {
  check_order(r);
  static const std::vector<ZeroBoundaryKernel> cache = [] {
    std::vector<ZeroBoundaryKernel> v;
    for (int order = 1; order <= kMaxSmoothness; ++order) v.emplace_back(order);
    return v;
  }();
  return cache[static_cast<std::size_t>(r - 1)];
}

double k_base(int r, double x, double y) { return kernel_of_order(r).base(x, y); }

double boundary_representer(int r, int j, double x) {
  check_order(r);
  if (j < 0 || j >= r) throw InvalidArgument("boundary_representer: j must lie in 0..r-1");
  const int n = 2 * r - 1 - j;
  Rational scale = Rational(1) / Rational(factorial(n));
  double acc = 0.0;
  for (int k = r; k <= n; ++k) {
    Rational c = Rational(binomial(n, k)) * scale;
    if ((r + k) % 2) c = -c;  // (-1)^r (-x)^k
    acc += to_double(c) * std::pow(x, k);
  }
  return acc;
}

double k_zero(int r, double x, double y) { return kernel_of_order(r)(x, y); }

double k_tensor(const SmoothnessVector& r, std::span<const double> x, std::span<const double> y) {
  if (static_cast<int>(x.size()) != r.dimension() || static_cast<int>(y.size()) != r.dimension())
    throw InvalidArgument("k_tensor: point dimension does not match the smoothness vector");
  double value = 1.0;
  for (int l = 0; l < r.dimension(); ++l) value *= k_zero(r[l], x[l], y[l]);
  return value;
}

double riesz_univariate(int r, double y) { return kernel_of_order(r).riesz(y); }

double initial_error(const SmoothnessVector& r) {
  double value = 1.0;
  for (int l = 0; l < r.dimension(); ++l) value *= std::sqrt(kernel_of_order(r[l]).double_integral());
  return value;
}

Rational norm_equivalence_constant(const SmoothnessVector& r) {
  // The subset sum factorizes: sum_e prod_{i in e} a_i = prod_i (1 + a_i).
  Rational value = 1;
  for (int l = 0; l < r.dimension(); ++l) {
    const int ri = r[l];
    value *= 1 + Rational(1) / Rational(factorial(ri - 1) * factorial(ri - 1) * (2 * ri - 1) * 2 * ri);
  }
  return value;
}

}  // namespace frolov

#include "frolov/lattice_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "frolov/detail/roots.hpp"
#include "frolov/errors.hpp"

namespace frolov {

using detail::HighPrecision;

LatticeBasis::LatticeBasis(Matrix generator, double discriminant, std::optional<GeneratingPolynomial> source)
    : generator_(std::move(generator)), discriminant_(discriminant), source_(std::move(source)) {
  if (generator_.rows() == 0 || generator_.rows() != generator_.cols())
    throw InvalidArgument("lattice generator must be a nonempty square matrix");
  det_abs_ = std::fabs(generator_.determinant());
  if (!(det_abs_ > 0) || !std::isfinite(det_abs_)) throw SingularMatrix("lattice generator is singular");
  b_p_upper_ = generator_.cwiseAbs().maxCoeff();
}

LatticeBasis LatticeBasis::from_matrix(Matrix generator) {
  const double det = std::fabs(generator.determinant());
  return LatticeBasis(std::move(generator), det);
}

Matrix vandermonde(const GeneratingPolynomial& p) {
  const int d = p.degree();
  auto roots = p.roots();
  Matrix v(d, d);
  for (int i = 0; i < d; ++i) {
    double power = 1.0;
    for (int j = 0; j < d; ++j) {
      v(i, j) = power;
      power *= roots[i];
    }
  }
  return v;
}

namespace {

using HpColumn = std::vector<HighPrecision>;

HighPrecision dot(const HpColumn& a, const HpColumn& b) {
  HighPrecision s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Column-oriented LLL in 50-digit arithmetic. Returns the unimodular
// transform; `cols` is reduced in place.
IntMatrix lll_in_place(std::vector<HpColumn>& cols, double delta) {
  const int d = static_cast<int>(cols.size());
  IntMatrix u = IntMatrix::Identity(d, d);
  if (d == 0) return u;

  std::vector<std::vector<HighPrecision>> mu(d, std::vector<HighPrecision>(d, 0));
  std::vector<HighPrecision> bstar_sq(d);
  std::vector<HpColumn> bstar(d);

  auto gram_schmidt = [&]() {
    for (int i = 0; i < d; ++i) {
      bstar[i] = cols[i];
      for (int j = 0; j < i; ++j) {
        mu[i][j] = dot(cols[i], bstar[j]) / bstar_sq[j];
        for (int r = 0; r < d; ++r) bstar[i][r] -= mu[i][j] * bstar[j][r];
      }
      bstar_sq[i] = dot(bstar[i], bstar[i]);
      if (bstar_sq[i] <= 0) throw SingularMatrix("lll_reduce: input basis is singular");
    }
  };

  gram_schmidt();
  HighPrecision scale = 0;
  for (int i = 0; i < d; ++i) scale = std::max(scale, dot(cols[i], cols[i]));
  for (int i = 0; i < d; ++i)
    if (bstar_sq[i] <= scale * HighPrecision(1e-60)) throw SingularMatrix("lll_reduce: input basis is singular");

  int k = 1;
  for (long iterations = 0; k < d; ++iterations) {
    if (iterations > 1'000'000) throw Error("lll_reduce: iteration limit exceeded");
    for (int j = k - 1; j >= 0; --j) {
      HighPrecision q = round(mu[k][j]);
      if (q == 0) continue;
      if (abs(q) > HighPrecision(1e15)) throw Error("lll_reduce: transform entries exceed int64 range");
      const auto qi = static_cast<std::int64_t>(q);
      for (int r = 0; r < d; ++r) cols[k][r] -= q * cols[j][r];
      u.col(k) -= qi * u.col(j);
      for (int i = 0; i < j; ++i) mu[k][i] -= q * mu[j][i];
      mu[k][j] -= q;
    }
    if (bstar_sq[k] >= (HighPrecision(delta) - mu[k][k - 1] * mu[k][k - 1]) * bstar_sq[k - 1]) {
      ++k;
    } else {
      std::swap(cols[k], cols[k - 1]);
      u.col(k).swap(u.col(k - 1));
      gram_schmidt();
      k = std::max(k - 1, 1);
    }
  }
  return u;
}

Matrix to_double(const std::vector<HpColumn>& cols) {
  const int d = static_cast<int>(cols.size());
  Matrix m(d, d);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) m(r, c) = static_cast<double>(cols[c][r]);
  return m;
}

std::vector<HpColumn> columns_of(const Matrix& m) {
  std::vector<HpColumn> cols(m.cols(), HpColumn(m.rows()));
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) cols[c][r] = m(r, c);
  return cols;
}

}  // namespace

LllResult lll_reduce_with_transform(const Matrix& basis, double delta) {
  if (basis.rows() != basis.cols()) throw InvalidArgument("lll_reduce: basis must be square");
  if (!(delta > 0.25 && delta <= 1.0)) throw InvalidArgument("lll_reduce: delta must lie in (1/4, 1]");
  auto cols = columns_of(basis);
  IntMatrix u = lll_in_place(cols, delta);
  return {to_double(cols), std::move(u)};
}

Matrix lll_reduce(const Matrix& basis, double delta) { return lll_reduce_with_transform(basis, delta).basis; }

LatticeBasis stable_representation(const GeneratingPolynomial& p) {
  const int d = p.degree();
  const double disc = discriminant(p);
  auto roots = p.roots();
  Matrix t(d, d);

  if (const auto& formula = p.root_formula()) {
    // Exact cosine arguments; rows ordered by ascending root like vandermonde().
    std::vector<int> nums = formula->numerators;
    std::sort(nums.begin(), nums.end(), [&](int a, int b) {
      return detail::two_cos_pi(a, formula->denominator) < detail::two_cos_pi(b, formula->denominator);
    });
    for (int k = 0; k < d; ++k) {
      t(k, 0) = 1.0;
      for (int l = 1; l < d; ++l)
        t(k, l) = static_cast<double>(detail::two_cos_pi(static_cast<std::int64_t>(l) * nums[k], formula->denominator));
    }
    return LatticeBasis(std::move(t), disc, p);
  }

  auto hp_roots = detail::find_real_roots_hp(p.coefficients());
  const bool inside = std::all_of(hp_roots.begin(), hp_roots.end(), [](const HighPrecision& x) { return abs(x) < 2; });
  if (inside) {
    static const HighPrecision pi = boost::math::constants::pi<HighPrecision>();
    for (int k = 0; k < d; ++k) {
      const HighPrecision omega = acos(hp_roots[k] / 2) / pi;
      t(k, 0) = 1.0;
      for (int l = 1; l < d; ++l) t(k, l) = static_cast<double>(2 * cos(pi * l * omega));
    }
    return LatticeBasis(std::move(t), disc, p);
  }

  // Roots outside (-2, 2): Vandermonde in high precision, then reduce.
  std::vector<HpColumn> cols(d, HpColumn(d));
  for (int r = 0; r < d; ++r) {
    HighPrecision power = 1;
    for (int c = 0; c < d; ++c) {
      cols[c][r] = power;
      power *= hp_roots[r];
    }
  }
  lll_in_place(cols, 0.75);
  return LatticeBasis(to_double(cols), disc, p);
}

ScaledBasis scale_for_n(const LatticeBasis& b, double n) {
  if (!(n > 0) || !std::isfinite(n)) throw InvalidArgument("scale_for_n: n must be positive");
  const double factor = std::pow(n * b.det_abs(), -1.0 / b.dimension());
  return ScaledBasis(factor * b.generator(), n, b);
}

double admissibility_check(const LatticeBasis& b, int radius) {
  if (radius < 1) throw InvalidArgument("admissibility_check: radius must be >= 1");
  const int d = b.dimension();
  const Matrix& t = b.generator();
  std::vector<int> k(d, -radius);
  Eigen::VectorXd kv(d);
  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    bool zero = std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
    if (!zero) {
      for (int i = 0; i < d; ++i) kv[i] = k[i];
      const Eigen::VectorXd x = t * kv;
      best = std::min(best, std::fabs(x.prod()));
    }
    int i = 0;
    while (i < d && k[i] == radius) k[i++] = -radius;
    if (i == d) break;
    ++k[i];
  }
  return best;
}

}  // namespace frolov

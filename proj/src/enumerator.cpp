#include "frolov/enumerator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "frolov/errors.hpp"

namespace frolov {

namespace {

constexpr double kCubeEps = 1e-12;
constexpr double kRangeEps = 1e-9;

}  // namespace

void CubatureRule::validate() const {
  if (points.rows() != static_cast<Eigen::Index>(weights.size()))
    throw ValidationError("point count and weight count differ", 0);
  if (points.rows() > 0 && points.cols() != d) throw ValidationError("point dimension does not match d", 0);
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    for (Eigen::Index j = 0; j < points.cols(); ++j) {
      const double x = points(i, j);
      if (!(x >= 0.0 && x <= 1.0)) throw ValidationError("coordinate outside [0,1]", 0);
    }
    if (!std::isfinite(weights[i])) throw ValidationError("weight is not finite", 0);
  }
}

QrFactors qr_split(const Matrix& t) {
  if (t.rows() != t.cols() || t.rows() == 0) throw InvalidArgument("qr_split: matrix must be square");
  Eigen::HouseholderQR<Matrix> qr(t);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  const double scale = t.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    if (std::fabs(r(i, i)) <= scale * 1e-14 * static_cast<double>(t.rows()))
      throw SingularMatrix("qr_split: matrix is singular");
    if (r(i, i) < 0) {
      r.row(i) *= -1.0;
      q.col(i) *= -1.0;
    }
  }
  return {std::move(q), std::move(r)};
}

EnumerationResult enumerate(const ScaledBasis& basis) {
  const auto start = std::chrono::steady_clock::now();
  const Matrix& a = basis.matrix();
  const int d = basis.dimension();
  const Matrix r = qr_split(a).r;
  const double radius_sq = d / 4.0;

  EnumerationResult result;
  std::vector<std::int64_t> found_k;
  std::vector<double> found_x;

  // m: current integer vector; partial[j]: sum_{i>j} g_i(m); center[j]:
  // sum_{i>j} R_ji m_i; hi[j]: upper end of K_j.
  std::vector<std::int64_t> m(d, 0), hi(d, 0);
  std::vector<double> partial(d + 1, 0.0);

  auto range = [&](int j, std::int64_t& lo_out, std::int64_t& hi_out) {
    double c = 0.0;
    for (int i = j + 1; i < d; ++i) c += r(j, i) * static_cast<double>(m[i]);
    const double rem = radius_sq - partial[j + 1];
    if (rem < 0) {
      lo_out = 1;
      hi_out = 0;
      return;
    }
    const double s = std::sqrt(rem);
    const double rjj = r(j, j);
    lo_out = static_cast<std::int64_t>(std::ceil((-c - s) / rjj - kRangeEps));
    hi_out = static_cast<std::int64_t>(std::floor((-c + s) / rjj + kRangeEps));
  };
  auto g = [&](int j) {
    double v = 0.0;
    for (int i = j; i < d; ++i) v += r(j, i) * static_cast<double>(m[i]);
    return v * v;
  };

  Eigen::VectorXd kv(d);
  int j = d - 1;
  {
    std::int64_t lo;
    range(j, lo, hi[j]);
    m[j] = lo - 1;
  }
  while (j < d) {
    if (m[j] >= hi[j]) {
      m[j] = 0;
      ++j;
      continue;
    }
    ++m[j];
    if (j > 0) {
      partial[j] = partial[j + 1] + g(j);
      --j;
      std::int64_t lo;
      range(j, lo, hi[j]);
      m[j] = lo - 1;
      continue;
    }
    // j == 0: candidate complete.
    ++result.visited;
    for (int i = 0; i < d; ++i) kv[i] = static_cast<double>(m[i]);
    const Eigen::VectorXd x = a * kv;
    if (x.cwiseAbs().maxCoeff() <= 0.5 + kCubeEps) {
      found_k.insert(found_k.end(), m.begin(), m.end());
      for (int i = 0; i < d; ++i) found_x.push_back(std::clamp(x[i] + 0.5, 0.0, 1.0));
    }
  }

  const std::size_t n = found_k.size() / std::max(d, 1);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
    return std::lexicographical_compare(found_k.begin() + p * d, found_k.begin() + (p + 1) * d,
                                        found_k.begin() + q * d, found_k.begin() + (q + 1) * d);
  });
  result.points.resize(static_cast<Eigen::Index>(n), d);
  result.coefficients.resize(static_cast<Eigen::Index>(n), d);
  for (std::size_t row = 0; row < n; ++row) {
    for (int i = 0; i < d; ++i) {
      result.points(row, i) = found_x[order[row] * d + i];
      result.coefficients(row, i) = found_k[order[row] * d + i];
    }
  }
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

CubatureRule frolov_rule(const ScaledBasis& basis, std::string method) {
  EnumerationResult e = enumerate(basis);
  CubatureRule rule;
  rule.d = basis.dimension();
  rule.points = std::move(e.points);
  rule.weights.assign(static_cast<std::size_t>(rule.points.rows()), 1.0 / basis.n());
  rule.method = std::move(method);
  rule.n_param = basis.n();
  return rule;
}

CubatureRule frolov_rule(PolynomialFamily family, int d, double n) {
  const GeneratingPolynomial p = family == PolynomialFamily::improved ? get_improved(d) : get_classical(d);
  const LatticeBasis basis = stable_representation(p);
  return frolov_rule(scale_for_n(basis, n),
                     family == PolynomialFamily::improved ? "frolov-improved" : "frolov-classical");
}

}  // namespace frolov

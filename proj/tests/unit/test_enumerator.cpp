#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "frolov/enumerator.hpp"
#include "frolov/errors.hpp"
#include "support/oracles.hpp"

using namespace frolov;

namespace {

std::vector<std::vector<double>> rows(const PointMatrix& m) {
  std::vector<std::vector<double>> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count(int d, double n) {
  return enumerate(scale_for_n(stable_representation(get_improved(d)), n)).size();
}

}  // namespace

TEST_CASE("qr split") {
  const QrFactors id = qr_split(Matrix::Identity(3, 3));
  CHECK(id.q.isApprox(Matrix::Identity(3, 3)));
  CHECK(id.r.isApprox(Matrix::Identity(3, 3)));

  const Matrix t = stable_representation(get_improved(3)).generator();
  const QrFactors f = qr_split(t);
  CHECK((f.q * f.r - t).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((f.q.transpose() * f.q - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-12);
  for (int i = 0; i < 3; ++i) {
    CHECK(f.r(i, i) > 0);
    for (int j = 0; j < i; ++j) CHECK(f.r(i, j) == 0.0);
  }

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> k(-20, 20);
  for (int rep = 0; rep < 20; ++rep) {
    Eigen::VectorXd v(3);
    for (int i = 0; i < 3; ++i) v(i) = k(rng);
    CHECK((f.r * v).norm() == doctest::Approx((t * v).norm()).epsilon(1e-10));
  }
  CHECK_THROWS_AS(qr_split(Matrix::Zero(2, 2)), SingularMatrix);
}

TEST_CASE("point counts") {
  CHECK(count(2, 1024) == 1023);
  CHECK(count(9, 1024) == 997);
  CHECK(count(5, 16384) == 16359);
}

TEST_CASE("enumeration equals brute force") {
  for (int d = 2; d <= 4; ++d)
    for (double n : {16.0, 64.0, 256.0}) {
      CAPTURE(d);
      CAPTURE(n);
      const ScaledBasis s = scale_for_n(stable_representation(get_improved(d)), n);
      const auto got = rows(enumerate(s).points);
      const auto expected = oracle::brute_force_points(s.matrix());
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i)
        for (int l = 0; l < d; ++l) CHECK(std::abs(got[i][l] - expected[i][l]) <= 1e-12);
    }
}

TEST_CASE("result invariants") {
  const ScaledBasis s = scale_for_n(stable_representation(get_improved(3)), 500);
  const EnumerationResult e = enumerate(s);
  CHECK(e.points.minCoeff() >= 0.0);
  CHECK(e.points.maxCoeff() <= 1.0);
  CHECK(e.visited >= e.size());
  CHECK(e.wall_time >= 0.0);
  const auto r = rows(e.points);
  CHECK(std::adjacent_find(r.begin(), r.end()) == r.end());
  for (Eigen::Index i = 0; i < e.points.rows(); ++i) {
    const Eigen::VectorXd x = s.matrix() * e.coefficients.row(i).transpose().cast<double>();
    CHECK((x.array() + 0.5 - e.points.row(i).transpose().array()).abs().maxCoeff() <= 1e-12);
  }
  // origin always present, at the cube centre
  CHECK(std::find(r.begin(), r.end(), std::vector<double>{0.5, 0.5, 0.5}) != r.end());
}

TEST_CASE("point sets are symmetric about the centre") {
  const auto r = rows(enumerate(scale_for_n(stable_representation(get_improved(4)), 300)).points);
  for (const auto& p : r) {
    std::vector<double> q(p.size());
    for (std::size_t l = 0; l < p.size(); ++l) q[l] = 1.0 - p[l];
    const auto it = std::lower_bound(r.begin(), r.end(), q, [](const auto& a, const auto& b) {
      for (std::size_t l = 0; l < a.size(); ++l)
        if (std::abs(a[l] - b[l]) > 1e-12) return a[l] < b[l];
      return false;
    });
    REQUIRE(it != r.end());
    for (std::size_t l = 0; l < p.size(); ++l) CHECK(std::abs((*it)[l] - q[l]) <= 1e-12);
  }
}

TEST_CASE("frolov rules") {
  const CubatureRule rule = frolov_rule(PolynomialFamily::improved, 2, 1024);
  CHECK(rule.method == "frolov-improved");
  CHECK(rule.size() == 1023);
  CHECK(rule.n_param.value() == 1024);
  for (double w : rule.weights) CHECK(w == 1.0 / 1024);
  CHECK(frolov_rule(PolynomialFamily::classical, 3, 64).method == "frolov-classical");
  // tiny n still contains the origin
  CHECK(frolov_rule(PolynomialFamily::improved, 2, 1e-3).size() == 1);
}

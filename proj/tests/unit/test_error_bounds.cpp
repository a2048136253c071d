#include <doctest.h>

#include <cmath>

#include "frolov/error_bounds.hpp"
#include "frolov/errors.hpp"
#include "frolov/lattice_core.hpp"

using namespace frolov;

TEST_CASE("bound constant") {
  CHECK(bound_constant(SmoothnessVector::uniform(1, 1)) == doctest::Approx(4 * std::sqrt(3.0)).epsilon(1e-14));
  // Uniform smoothness: only the (1 - 2^{1-2r})^{-d/2} factor besides 2^{d+1}.
  for (int d = 2; d <= 4; ++d)
    for (int r = 1; r <= 3; ++r) {
      const auto s = SmoothnessVector::uniform(d, r);
      const double expected = std::ldexp(1.0, d + 1) * std::pow(1 - std::ldexp(1.0, 1 - 2 * r), -d / 2.0) *
                              std::sqrt(static_cast<double>(norm_equivalence_constant(s)));
      CHECK(bound_constant(s) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("log factor appears only with repeated minimal smoothness") {
  const auto single = SmoothnessVector::parse("1,2");
  const double d_p = 5, b_p = 2;
  const double a = theoretical_bound({1024, single, d_p, b_p});
  const double b = theoretical_bound({2048, single, d_p, b_p});
  CHECK(b / a == doctest::Approx(0.5).epsilon(1e-12));

  const auto repeated = SmoothnessVector::uniform(2, 1);
  const double n = std::ldexp(1.0, 20);
  const double ratio = theoretical_bound({2 * n, repeated, d_p, b_p}) / theoretical_bound({n, repeated, d_p, b_p});
  CHECK(ratio > 0.5);
  CHECK(ratio == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("bound decreases in n") {
  const LatticeBasis basis = stable_representation(get_improved(3));
  const auto r = SmoothnessVector::parse("1,2,2");
  double prev = INFINITY;
  for (double n = 64; n <= 1e7; n *= 3) {
    const double v = theoretical_bound({n, r, basis.discriminant(), basis.b_p_upper()});
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("cell cover count") {
  CHECK(m_bound(100, 5, 0, 3) == doctest::Approx(501));
  CHECK(m_bound(100, 5, 1, 2) > 501);
  const double n = 1000, d_p = 7, b_p = 1.5;
  const double direct = n * d_p * std::pow(1 + 2 * b_p / std::sqrt(d_p * n), 2) + 1;
  CHECK(m_bound(n, d_p, b_p, 2) == doctest::Approx(direct).epsilon(1e-14));
  CHECK_THROWS_AS(m_bound(0, 1, 1, 2), InvalidArgument);
}

TEST_CASE("invalid inputs") {
  const auto r = SmoothnessVector::uniform(2, 2);
  CHECK_THROWS_AS(theoretical_bound({0, r, 5, 1}), InvalidArgument);
  CHECK_THROWS_AS(theoretical_bound({-3, r, 5, 1}), InvalidArgument);
  CHECK_THROWS_AS(theoretical_bound({100, r, 0, 1}), InvalidArgument);
}

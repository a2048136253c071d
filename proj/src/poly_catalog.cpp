#include "frolov/poly_catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <utility>

#include <Eigen/Eigenvalues>

#include "frolov/detail/roots.hpp"
#include "frolov/errors.hpp"

namespace frolov {

namespace detail {

HighPrecision evaluate_hp(std::span<const std::int64_t> coefficients, const HighPrecision& x) {
  HighPrecision acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

HighPrecision derivative_hp(std::span<const std::int64_t> c, const HighPrecision& x) {
  HighPrecision acc = 0;
  for (std::size_t i = c.size() - 1; i >= 1; --i) acc = acc * x + HighPrecision(c[i]) * i;
  return acc;
}

int sign_of(const HighPrecision& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

using Bracket = std::pair<HighPrecision, HighPrecision>;

// Brackets around the real eigenvalues of the companion matrix, split at the
// midpoints between neighbours. Empty unless every bracket shows a sign change.
std::vector<Bracket> seed_brackets(std::span<const std::int64_t> c) {
  const int d = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -static_cast<double>(c[static_cast<std::size_t>(i)]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) return {};
  std::vector<double> seeds;
  for (const auto& z : solver.eigenvalues()) {
    if (std::fabs(z.imag()) > 1e-6 * (1 + std::fabs(z.real()))) return {};
    seeds.push_back(z.real());
  }
  std::sort(seeds.begin(), seeds.end());
  std::vector<HighPrecision> cuts;
  const double outer = d > 1 ? seeds.back() - seeds.front() : 1.0;
  cuts.emplace_back(seeds.front() - outer);
  for (int i = 1; i < d; ++i) cuts.emplace_back((seeds[i - 1] + seeds[i]) / 2);
  cuts.emplace_back(seeds.back() + outer);
  std::vector<Bracket> out;
  for (int i = 0; i < d; ++i) {
    if (sign_of(evaluate_hp(c, cuts[i])) * sign_of(evaluate_hp(c, cuts[i + 1])) >= 0) return {};
    out.emplace_back(cuts[i], cuts[i + 1]);
  }
  return out;
}

std::vector<Bracket> grid_brackets(std::span<const std::int64_t> coefficients) {
  const int d = static_cast<int>(coefficients.size()) - 1;
  // Cauchy bound.
  double bound = 0.0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, std::fabs(static_cast<double>(coefficients[i])));
  bound += 1.0;

  std::vector<Bracket> brackets;
  for (int cells = 1024; cells <= (1 << 20); cells *= 4) {
    brackets.clear();
    const HighPrecision lo = -bound;
    const HighPrecision step = HighPrecision(2 * bound) / cells;
    HighPrecision a = lo;
    int sa = sign_of(evaluate_hp(coefficients, a));
    for (int i = 1; i <= cells; ++i) {
      const HighPrecision b = lo + step * i;
      const int sb = sign_of(evaluate_hp(coefficients, b));
      if (sb == 0) {
        brackets.emplace_back(b, b);
      } else if (sa != 0 && sa != sb) {
        brackets.emplace_back(a, b);
      }
      a = b;
      sa = sb;
    }
    if (static_cast<int>(brackets.size()) == d) break;
  }
  return brackets;
}

}  // namespace

std::vector<HighPrecision> find_real_roots_hp(std::span<const std::int64_t> coefficients) {
  const int d = static_cast<int>(coefficients.size()) - 1;
  if (d < 1) throw InvalidArgument("find_real_roots: degree must be >= 1");
  if (coefficients.back() != 1) throw InvalidArgument("find_real_roots: polynomial must be monic");

  std::vector<std::pair<HighPrecision, HighPrecision>> brackets = seed_brackets(coefficients);
  if (static_cast<int>(brackets.size()) != d) brackets = grid_brackets(coefficients);
  if (static_cast<int>(brackets.size()) != d)
    throw InvalidArgument("find_real_roots: could not isolate " + std::to_string(d) + " simple real roots");

  const HighPrecision tol = std::numeric_limits<HighPrecision>::epsilon() * 16;
  std::vector<HighPrecision> roots;
  roots.reserve(d);
  for (auto [a, b] : brackets) {
    if (a == b) {
      roots.push_back(a);
      continue;
    }
    int sa = sign_of(evaluate_hp(coefficients, a));
    // Bisection to double-level width, then Newton in full precision.
    for (int it = 0; it < 80; ++it) {
      HighPrecision m = (a + b) / 2;
      int sm = sign_of(evaluate_hp(coefficients, m));
      if (sm == 0) {
        a = b = m;
        break;
      }
      if (sm == sa)
        a = m;
      else
        b = m;
    }
    HighPrecision x = (a + b) / 2;
    for (int it = 0; it < 20; ++it) {
      const HighPrecision step = evaluate_hp(coefficients, x) / derivative_hp(coefficients, x);
      x -= step;
      if (abs(step) <= tol * (1 + abs(x))) break;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

HighPrecision two_cos_pi(std::int64_t num, std::int64_t den) {
  // cos(pi*num/den) has period 2 in num/den.
  std::int64_t period = 2 * den;
  std::int64_t r = ((num % period) + period) % period;
  if (r > den) r = period - r;
  static const HighPrecision pi = boost::math::constants::pi<HighPrecision>();
  return 2 * cos(pi * HighPrecision(r) / HighPrecision(den));
}

}  // namespace detail

GeneratingPolynomial::GeneratingPolynomial(std::string name, PolynomialFamily family,
                                           std::vector<std::int64_t> coefficients,
                                           std::vector<double> roots,
                                           std::optional<CosineRootFormula> root_formula)
    : name_(std::move(name)),
      family_(family),
      coefficients_(std::move(coefficients)),
      roots_(std::move(roots)),
      root_formula_(std::move(root_formula)) {
  if (coefficients_.empty()) throw InvalidArgument("polynomial needs at least one coefficient");
  if (coefficients_.back() != 1) throw InvalidArgument("polynomial must be monic");
  if (!roots_.empty() && static_cast<int>(roots_.size()) != degree())
    throw InvalidArgument("root count does not match degree");
  std::sort(roots_.begin(), roots_.end());
}

double GeneratingPolynomial::evaluate(double x) const {
  long double acc = 0;
  const long double lx = x;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    acc = acc * lx + static_cast<long double>(*it);
  return static_cast<double>(acc);
}

namespace {

struct ImprovedRow {
  const char* name;
  std::vector<std::int64_t> descending;  // x^d first
  std::vector<int> cos_numerators;       // empty: no closed form
  int cos_denominator;
};

// Coefficients as printed, highest power first.
const ImprovedRow& improved_row(int d) {
  static const std::array<ImprovedRow, 9> rows = {{
      {"E_{4,2}", {1, 1, -1}, {2, 4}, 5},
      {"E_{6,2}", {1, 1, -2, -1}, {2, 4, 6}, 7},
      {"E_{14,2}", {1, -1, -4, 4, 1}, {2, 4, 8, 14}, 15},
      {"E_{10,2}", {1, 1, -4, -3, 3, 1}, {2, 4, 6, 8, 10}, 11},
      {"E_{12,2}", {1, 1, -5, -4, 6, 3, -1}, {2, 4, 6, 8, 10, 12}, 13},
      {"P_7", {1, 1, -6, -4, 10, 4, -4, -1}, {}, 0},
      {"E_{16,2}", {1, 1, -7, -6, 15, 10, -10, -4, 1}, {2, 4, 6, 8, 10, 12, 14, 16}, 17},
      {"E_{18,2}", {1, 1, -8, -7, 21, 15, -20, -10, 5, 1}, {2, 4, 6, 8, 10, 12, 14, 16, 18}, 19},
      {"E_{24,2}", {1, 0, -10, 0, 35, 1, -50, -5, 25, 5, -1}, {2, 4, 6, 8, 12, 14, 16, 18, 22, 24}, 25},
  }};
  return rows[d - 2];
}

std::vector<double> to_double(const std::vector<detail::HighPrecision>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(static_cast<double>(x));
  return out;
}

bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_mul_overflow(a, b, &out); }
bool checked_add(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_add_overflow(a, b, &out); }

}  // namespace

GeneratingPolynomial get_improved(int d) {
  if (d < 2 || d > 10)
    throw UnsupportedDimension("improved polynomials are available for 2 <= d <= 10, got d=" + std::to_string(d));
  const ImprovedRow& row = improved_row(d);
  std::vector<std::int64_t> coeffs(row.descending.rbegin(), row.descending.rend());

  if (row.cos_numerators.empty()) {
    return GeneratingPolynomial(row.name, PolynomialFamily::improved, coeffs,
                                to_double(detail::find_real_roots_hp(coeffs)));
  }
  std::vector<double> roots;
  for (int num : row.cos_numerators)
    roots.push_back(static_cast<double>(detail::two_cos_pi(num, row.cos_denominator)));
  return GeneratingPolynomial(row.name, PolynomialFamily::improved, std::move(coeffs), std::move(roots),
                              CosineRootFormula{row.cos_numerators, row.cos_denominator});
}

std::vector<std::int64_t> expand_classical(int d) {
  if (d < 1) throw InvalidArgument("classical polynomial needs d >= 1");
  std::vector<std::int64_t> c{1};
  for (int j = 1; j <= d; ++j) {
    const std::int64_t shift = -(2 * j - 1);
    std::vector<std::int64_t> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::int64_t prod;
      if (!checked_add(next[i + 1], c[i], next[i + 1]) || !checked_mul(c[i], shift, prod) ||
          !checked_add(next[i], prod, next[i]))
        throw CoefficientOverflow("classical polynomial coefficients overflow int64 at d=" + std::to_string(d));
    }
    c = std::move(next);
  }
  if (!checked_add(c[0], -1, c[0]))
    throw CoefficientOverflow("classical polynomial coefficients overflow int64 at d=" + std::to_string(d));
  return c;
}

GeneratingPolynomial get_classical(int d) {
  auto coeffs = expand_classical(d);
  auto roots = to_double(detail::find_real_roots_hp(coeffs));
  return GeneratingPolynomial("classical_" + std::to_string(d), PolynomialFamily::classical, std::move(coeffs),
                              std::move(roots));
}

std::vector<double> find_real_roots(std::span<const std::int64_t> coefficients) {
  return to_double(detail::find_real_roots_hp(coefficients));
}

double discriminant(const GeneratingPolynomial& p) {
  auto roots = p.roots();
  long double prod = 1;
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (std::size_t l = k + 1; l < roots.size(); ++l)
      prod *= std::fabs(static_cast<long double>(roots[k]) - roots[l]);
  return static_cast<double>(prod);
}

namespace {

// GF(2)[x] polynomials as bit masks, bit i = coefficient of x^i.
int gf2_degree(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b) {
  const int db = gf2_degree(b);
  for (int da = gf2_degree(a); da >= db; da = gf2_degree(a)) a ^= b << (da - db);
  return a;
}

}  // namespace

bool check_irreducible_mod2(std::span<const std::int64_t> coefficients) {
  const int d = static_cast<int>(coefficients.size()) - 1;
  if (d < 1) throw InvalidArgument("irreducibility test needs degree >= 1");
  if (d > 62) throw InvalidArgument("irreducibility test supports degree <= 62");
  std::uint64_t p = 0;
  for (int i = 0; i <= d; ++i)
    if (coefficients[i] % 2 != 0) p |= std::uint64_t{1} << i;
  if (gf2_degree(p) != d) return false;  // leading coefficient even: degree drops
  // Trial division by every polynomial of degree 1..d/2.
  for (std::uint64_t q = 2; gf2_degree(q) <= d / 2; ++q)
    if (gf2_mod(p, q) == 0) return false;
  return true;
}

bool check_irreducible_mod2(const GeneratingPolynomial& p) { return check_irreducible_mod2(p.coefficients()); }

}  // namespace frolov

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace frolov {

enum class PolynomialFamily { improved, classical };

/// Roots of the form 2cos(pi * numerator / denominator).
struct CosineRootFormula {
  std::vector<int> numerators;
  int denominator = 1;
};

/// Monic integer polynomial with d distinct real roots. Coefficients are
/// indexed by power, so coefficients()[degree()] == 1.
class GeneratingPolynomial {
 public:
  GeneratingPolynomial(std::string name, PolynomialFamily family,
                       std::vector<std::int64_t> coefficients,
                       std::vector<double> roots,
                       std::optional<CosineRootFormula> root_formula = std::nullopt);

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  std::span<const std::int64_t> coefficients() const noexcept { return coefficients_; }
  /// Ascending.
  std::span<const double> roots() const noexcept { return roots_; }
  const std::optional<CosineRootFormula>& root_formula() const noexcept { return root_formula_; }
  PolynomialFamily family() const noexcept { return family_; }
  const std::string& name() const noexcept { return name_; }

  /// Horner evaluation in extended precision.
  double evaluate(double x) const;

 private:
  std::string name_;
  PolynomialFamily family_;
  std::vector<std::int64_t> coefficients_;
  std::vector<double> roots_;
  std::optional<CosineRootFormula> root_formula_;
};

/// Small-discriminant polynomial for 2 <= d <= 10.
GeneratingPolynomial get_improved(int d);

/// prod_{j=1}^d (x - 2j + 1) - 1.
GeneratingPolynomial get_classical(int d);

/// Exact expansion of the classical polynomial. Throws CoefficientOverflow
/// when a coefficient leaves the int64 range.
std::vector<std::int64_t> expand_classical(int d);

/// prod_{k<l} |xi_k - xi_l|.
double discriminant(const GeneratingPolynomial& p);

/// True iff the polynomial reduced mod 2 is irreducible over GF(2). A false
/// result says nothing about irreducibility over the rationals.
bool check_irreducible_mod2(std::span<const std::int64_t> coefficients);
bool check_irreducible_mod2(const GeneratingPolynomial& p);

/// All real roots of a monic integer polynomial whose roots are real and
/// simple: sign-change bracketing, bisection, then Newton refinement in
/// 50-digit arithmetic. Ascending.
std::vector<double> find_real_roots(std::span<const std::int64_t> coefficients);

}  // namespace frolov

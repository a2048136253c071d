#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "frolov/poly_catalog.hpp"

namespace frolov {

using Matrix = Eigen::MatrixXd;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// A lattice generator T (columns are generators) with its invariants.
class LatticeBasis {
 public:
  /// `discriminant` is D_P of the source polynomial, or |det T| for a bare
  /// matrix.
  LatticeBasis(Matrix generator, double discriminant, std::optional<GeneratingPolynomial> source = std::nullopt);

  /// Wraps a bare invertible matrix; D_P is taken to be |det T|.
  static LatticeBasis from_matrix(Matrix generator);

  int dimension() const noexcept { return static_cast<int>(generator_.rows()); }
  const Matrix& generator() const noexcept { return generator_; }
  double det_abs() const noexcept { return det_abs_; }
  double discriminant() const noexcept { return discriminant_; }
  /// max |T_kl| of this representation. An upper bound for the minimal
  /// entry size over all unimodular changes of basis, not the minimum.
  double b_p_upper() const noexcept { return b_p_upper_; }
  const std::optional<GeneratingPolynomial>& source() const noexcept { return source_; }

 private:
  Matrix generator_;
  double det_abs_;
  double discriminant_;
  double b_p_upper_;
  std::optional<GeneratingPolynomial> source_;
};

/// A_n = (n |det T|)^{-1/d} T, so that |det A_n| = 1/n.
class ScaledBasis {
 public:
  ScaledBasis(Matrix matrix, double n, LatticeBasis parent)
      : matrix_(std::move(matrix)), n_(n), parent_(std::move(parent)) {}

  const Matrix& matrix() const noexcept { return matrix_; }
  double n() const noexcept { return n_; }
  const LatticeBasis& parent() const noexcept { return parent_; }
  int dimension() const noexcept { return static_cast<int>(matrix_.rows()); }
  /// B_n = A_n^{-T}, generator of the dual lattice.
  Matrix dual() const { return matrix_.inverse().transpose(); }

 private:
  Matrix matrix_;
  double n_;
  LatticeBasis parent_;
};

/// Row i is (1, xi_i, ..., xi_i^{d-1}).
Matrix vandermonde(const GeneratingPolynomial& p);

/// Numerically stable generator of the lattice spanned by vandermonde(p).
/// Roots in (-2, 2): T_k1 = 1, T_kl = 2cos(pi (l-1) omega_k) with
/// 2cos(pi omega_k) = xi_k. Otherwise the Vandermonde matrix is assembled in
/// 50-digit arithmetic and LLL-reduced.
LatticeBasis stable_representation(const GeneratingPolynomial& p);

struct LllResult {
  Matrix basis;          // input * transform
  IntMatrix transform;   // unimodular
};

/// LLL reduction of the columns of `basis` with Lovasz parameter `delta`.
LllResult lll_reduce_with_transform(const Matrix& basis, double delta = 0.75);
Matrix lll_reduce(const Matrix& basis, double delta = 0.75);

ScaledBasis scale_for_n(const LatticeBasis& b, double n);

/// min over nonzero integer k with |k|_inf <= radius of |prod_i (T k)_i|.
double admissibility_check(const LatticeBasis& b, int radius);

}  // namespace frolov

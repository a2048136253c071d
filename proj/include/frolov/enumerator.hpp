#pragma once

#include <cstdint>
#include <string>

#include "frolov/cubature_rule.hpp"
#include "frolov/lattice_core.hpp"

namespace frolov {

struct QrFactors {
  Matrix q;  // orthogonal
  Matrix r;  // upper triangular, positive diagonal
};

/// T = QR with the sign convention diag(R) > 0.
QrFactors qr_split(const Matrix& t);

struct EnumerationResult {
  PointMatrix points;       // N x d, in [0,1]^d
  IntMatrix coefficients;   // N x d integer vectors k with points = A_n k + 1/2
  std::uint64_t visited = 0;  // integer vectors tested against the cube
  double wall_time = 0.0;     // seconds

  std::size_t size() const noexcept { return static_cast<std::size_t>(points.rows()); }
};

/// All lattice points A_n k inside the closed cube [-1/2, 1/2]^d, shifted
/// into [0,1]^d. Candidates are restricted to the ball of radius sqrt(d)/2
/// by a depth-first walk over the triangular factor of A_n, last coordinate
/// outermost. Output is sorted lexicographically by k.
EnumerationResult enumerate(const ScaledBasis& basis);

/// Frolov cubature rule: the enumerated points with weights 1/n.
CubatureRule frolov_rule(const ScaledBasis& basis, std::string method);

/// Catalog polynomial -> stable basis -> scaled basis -> rule, labelled
/// "frolov-improved" or "frolov-classical".
CubatureRule frolov_rule(PolynomialFamily family, int d, double n);

}  // namespace frolov

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace frolov {

using PointMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Weighted point set Q(f) = sum_i w_i f(x_i) on [0,1]^d.
struct CubatureRule {
  int d = 0;
  PointMatrix points;          // N x d
  std::vector<double> weights;  // N
  std::string method;
  std::optional<double> n_param;  // scaling parameter used at generation, if any

  std::size_t size() const noexcept { return weights.size(); }

  /// Throws ValidationError if points leave [0,1]^d, weights are not
  /// finite, or shapes disagree.
  void validate() const;
};

}  // namespace frolov

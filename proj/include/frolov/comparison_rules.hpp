#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frolov/cubature_rule.hpp"

namespace frolov {

/// Periodic trapezoidal rule: points j/N, j = 0..N-1, weights 1/N.
CubatureRule trapezoid_rule(int n);

struct SparseGridSpec {
  int level = 0;
  int d = 1;
};

/// Smolyak sum of tensor-product trapezoid differences over |k|_1 <= L,
/// expanded into one weighted rule. Points with a zero coordinate are
/// dropped together with their weight; so are interior points whose
/// aggregated weight cancels exactly. Points are sorted lexicographically.
CubatureRule sparse_grid_rule(const SparseGridSpec& spec);

/// N_L = sum_{|k|_1 <= L} prod_j 2^{max(k_j - 1, 0)}, the node count of the
/// untrimmed Smolyak rule.
std::uint64_t sparse_grid_size(const SparseGridSpec& spec);

/// m-th Fibonacci number, F_1 = F_2 = 1.
std::uint64_t fibonacci(int m);

/// Points (j/F_m, frac(j F_{m-1} / F_m)), j = 0..F_m-1, weights 1/F_m.
CubatureRule fibonacci_rule(int m);

/// Reads a point-set file. Without explicit weights every point gets
/// 1/n when the header records a scaling parameter n, 1/N otherwise.
CubatureRule load_pointset(const std::string& path, std::optional<std::vector<double>> weights = std::nullopt);

}  // namespace frolov

#include "frolov/comparison_rules.hpp"

#include <algorithm>
#include <map>

#include "frolov/errors.hpp"
#include "frolov/pointset_io.hpp"

namespace frolov {

CubatureRule trapezoid_rule(int n) {
  if (n < 1) throw InvalidArgument("trapezoid_rule: N must be >= 1");
  CubatureRule rule;
  rule.d = 1;
  rule.points.resize(n, 1);
  for (int j = 0; j < n; ++j) rule.points(j, 0) = static_cast<double>(j) / n;
  rule.weights.assign(static_cast<std::size_t>(n), 1.0 / n);
  rule.method = "trapezoid";
  return rule;
}

namespace {

void check_spec(const SparseGridSpec& spec) {
  if (spec.level < 0) throw InvalidArgument("sparse grid level must be >= 0");
  if (spec.d < 1) throw InvalidArgument("sparse grid dimension must be >= 1");
  if (spec.level > 40) throw InvalidArgument("sparse grid level too large");
}

// Calls f(k) for every k in N_0^d with |k|_1 <= level.
template <class F>
void for_each_multi_index(int d, int level, F&& f) {
  std::vector<int> k(static_cast<std::size_t>(d), 0);
  for (;;) {
    f(k);
    int i = 0;
    int sum = 0;
    for (int v : k) sum += v;
    // Odometer restricted to the simplex.
    while (i < d) {
      if (sum < level) {
        ++k[i];
        break;
      }
      sum -= k[i];
      k[i] = 0;
      ++i;
    }
    if (i == d) return;
  }
}

}  // namespace

CubatureRule sparse_grid_rule(const SparseGridSpec& spec) {
  check_spec(spec);
  const int d = spec.d;
  const int level = spec.level;

  // Coordinates are stored as integers j on the finest grid j / 2^L;
  // weights as integer multiples of 2^{-L}. Both are exact.
  std::map<std::vector<std::int64_t>, std::int64_t> weights;

  for_each_multi_index(d, level, [&](const std::vector<int>& k) {
    // Delta_0 = Q_1 has its only node at 0, which is trimmed; such terms
    // contribute nothing to the interior.
    for (int v : k)
      if (v == 0) return;
    int total = 0;
    for (int v : k) total += v;
    const std::int64_t magnitude = std::int64_t{1} << (level - total);
    // Delta_k in 1-d: node j/2^k with weight +2^{-k} for odd j and -2^{-k}
    // for even j (the latter from subtracting Q_{2^{k-1}}).
    std::vector<std::int64_t> j(static_cast<std::size_t>(d), 1);
    std::vector<std::int64_t> key(static_cast<std::size_t>(d));
    for (;;) {
      int sign = 1;
      for (int i = 0; i < d; ++i) {
        key[i] = j[i] << (level - k[i]);
        if (j[i] % 2 == 0) sign = -sign;
      }
      weights[key] += sign * magnitude;
      int i = 0;
      while (i < d && j[i] == (std::int64_t{1} << k[i]) - 1) j[i++] = 1;
      if (i == d) break;
      ++j[i];
    }
  });

  std::size_t retained = 0;
  for (const auto& [key, w] : weights)
    if (w != 0) ++retained;

  CubatureRule rule;
  rule.d = d;
  rule.method = "sparsegrid";
  rule.points.resize(static_cast<Eigen::Index>(retained), d);
  rule.weights.reserve(retained);
  const double cell = std::ldexp(1.0, -level);
  Eigen::Index row = 0;
  for (const auto& [key, w] : weights) {
    if (w == 0) continue;
    for (int i = 0; i < d; ++i) rule.points(row, i) = static_cast<double>(key[i]) * cell;
    rule.weights.push_back(static_cast<double>(w) * cell);
    ++row;
  }
  return rule;
}

std::uint64_t sparse_grid_size(const SparseGridSpec& spec) {
  check_spec(spec);
  std::uint64_t total = 0;
  for_each_multi_index(spec.d, spec.level, [&](const std::vector<int>& k) {
    std::uint64_t count = 1;
    for (int v : k) count <<= std::max(v - 1, 0);
    total += count;
  });
  return total;
}

std::uint64_t fibonacci(int m) {
  if (m < 1 || m > 92) throw InvalidArgument("fibonacci: m must lie in 1..92");
  std::uint64_t a = 1, b = 1;
  for (int i = 2; i < m; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

CubatureRule fibonacci_rule(int m) {
  if (m < 2) throw InvalidArgument("fibonacci_rule: m must be >= 2");
  const std::uint64_t fm = fibonacci(m);
  const std::uint64_t fprev = fibonacci(m - 1);
  CubatureRule rule;
  rule.d = 2;
  rule.method = "fibonacci";
  rule.points.resize(static_cast<Eigen::Index>(fm), 2);
  for (std::uint64_t j = 0; j < fm; ++j) {
    const auto row = static_cast<Eigen::Index>(j);
    rule.points(row, 0) = static_cast<double>(j) / static_cast<double>(fm);
    // Exact integer residue; j * F_{m-1} fits in 64 bits for the supported m.
    const unsigned __int128 prod = static_cast<unsigned __int128>(j) * fprev;
    rule.points(row, 1) = static_cast<double>(static_cast<std::uint64_t>(prod % fm)) / static_cast<double>(fm);
  }
  rule.weights.assign(static_cast<std::size_t>(fm), 1.0 / static_cast<double>(fm));
  return rule;
}

CubatureRule load_pointset(const std::string& path, std::optional<std::vector<double>> weights) {
  PointSetFile file = read_pointset_file(path);
  CubatureRule rule;
  rule.d = file.d;
  rule.method = file.method;
  rule.n_param = file.n;
  rule.points = std::move(file.points);
  const std::size_t count = static_cast<std::size_t>(rule.points.rows());
  if (weights) {
    if (weights->size() != count)
      throw ValidationError("weight count " + std::to_string(weights->size()) + " does not match N=" +
                                std::to_string(count),
                            0);
    rule.weights = std::move(*weights);
  } else {
    const double denom = file.n ? *file.n : static_cast<double>(count);
    rule.weights.assign(count, count ? 1.0 / denom : 0.0);
  }
  rule.validate();
  return rule;
}

}  // namespace frolov

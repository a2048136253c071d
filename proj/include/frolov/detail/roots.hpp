#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frolov/detail/high_precision.hpp"

namespace frolov::detail {

std::vector<HighPrecision> find_real_roots_hp(std::span<const std::int64_t> coefficients);

HighPrecision evaluate_hp(std::span<const std::int64_t> coefficients, const HighPrecision& x);

/// 2cos(pi * num / den) with the argument reduced exactly before evaluation.
HighPrecision two_cos_pi(std::int64_t num, std::int64_t den);

}  // namespace frolov::detail

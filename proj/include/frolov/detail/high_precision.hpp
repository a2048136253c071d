#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace frolov::detail {

// 50 decimal digits; used for root refinement and the Vandermonde/reduction
// path where powers of roots amplify rounding error.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

}  // namespace frolov::detail

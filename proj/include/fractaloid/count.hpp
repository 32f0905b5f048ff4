#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fractaloid {

/// Exact non-negative counts. Every walk, path and moment count in the
/// library is carried in this type; nothing is ever rounded.
using Count = boost::multiprecision::cpp_int;

/// n choose k; zero when k > n.
Count binomial(std::uint64_t n, std::uint64_t k);

Count factorial(std::uint64_t n);

/// b^e.
Count power(std::uint64_t base, std::uint64_t exponent);

/// Decimal rendering used in every report.
std::string to_decimal(const Count& c);

}  // namespace fractaloid

#include "fractaloid/count.hpp"

namespace fractaloid {

Count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Count factorial(std::uint64_t n) {
  Count result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

Count power(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(Count(base), static_cast<unsigned>(exponent));
}

std::string to_decimal(const Count& c) { return c.str(); }

}  // namespace fractaloid

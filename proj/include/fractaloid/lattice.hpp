#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fractaloid/count.hpp"

namespace fractaloid {

/// The step l_k = (1, e^k) for k > 0 and l_{-|k|} = (1, -e^|k|) for k < 0,
/// kept symbolic as the signed exponent.
class LatticeStep {
 public:
  /// Throws ParameterError for k == 0.
  explicit LatticeStep(int k);

  int index() const noexcept { return index_; }
  int magnitude() const noexcept { return index_ < 0 ? -index_ : index_; }
  LatticeStep flipped() const noexcept { return LatticeStep(-index_); }

  bool operator==(const LatticeStep&) const = default;

 private:
  int index_;
};

class LatticePath {
 public:
  /// Throws ParameterError if some |k| is 0 or exceeds n_max.
  LatticePath(std::span<const int> indices, std::size_t n_max);
  LatticePath(std::initializer_list<int> indices, std::size_t n_max);

  std::span<const LatticeStep> steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::size_t step_bound() const noexcept { return n_max_; }

  LatticePath reversed() const;
  LatticePath negated() const;

 private:
  LatticePath(std::vector<LatticeStep> steps, std::size_t n_max)
      : steps_(std::move(steps)), n_max_(n_max) {}
  std::vector<LatticeStep> steps_;
  std::size_t n_max_;
};

/// The path returns to the horizontal axis. Since e, e^2, ..., e^N are
/// linearly independent over Q this is exactly: #(+k) == #(-k) for every k.
bool has_axis_property(const LatticePath& p);

struct BruteForceCount {
  Count axis_paths;  // |L_N^o(n)|
  Count all_paths;   // |L_N(n)| = (2N)^n
};

inline constexpr std::uint64_t kDefaultPathBudget = 10'000'000;

/// Enumerates all (2N)^n step sequences. Throws LimitError above `budget`
/// and ParameterError for N == 0.
BruteForceCount count_axis_paths_bruteforce(std::size_t n_max, std::size_t length,
                                            std::uint64_t budget = kDefaultPathBudget);

/// A sorted balanced tuple j_1 <= ... <= j_L together with the number of
/// distinct step sequences it represents.
struct BalancedTupleClass {
  std::vector<int> tuple;
  Count coefficient;
};

/// Coefficient of a sorted tuple by the stripping recurrence: remove the
/// trailing run of m equal values from a tuple of current length L and
/// multiply by C(L, m); a constant tuple has coefficient 1. Throws
/// ParameterError for unsorted tuples or zero entries.
Count tuple_coefficient(std::span<const int> sorted_tuple);

/// All sorted length-`length` tuples over {±1..±N} with #(+k) == #(-k) for
/// every k, each with its coefficient. Empty for odd lengths.
std::vector<BalancedTupleClass> balanced_tuples(std::size_t n_max, std::size_t length);

/// |L_N^o(n)| as the sum of tuple coefficients; 0 for odd n.
Count count_axis_paths_recurrence(std::size_t n_max, std::size_t length);

/// |L_1^o(2m)| = C(2m, m) and |L_2^o(2m)| = C(2m, m) * sum_j C(m, j)^2;
/// 0 for odd lengths. Throws ParameterError for N outside {1, 2}.
Count closed_form_count(std::size_t n_max, std::size_t length);

}  // namespace fractaloid

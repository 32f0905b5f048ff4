#include "fractaloid/lattice.hpp"

#include <algorithm>

#include "fractaloid/error.hpp"

namespace fractaloid {

LatticeStep::LatticeStep(int k) : index_(k) {
  if (k == 0) throw ParameterError("lattice step index must be nonzero");
}

LatticePath::LatticePath(std::span<const int> indices, std::size_t n_max) : n_max_(n_max) {
  steps_.reserve(indices.size());
  for (int k : indices) {
    LatticeStep s(k);
    if (static_cast<std::size_t>(s.magnitude()) > n_max)
      throw ParameterError("lattice step " + std::to_string(k) + " exceeds the bound N = " +
                           std::to_string(n_max));
    steps_.push_back(s);
  }
}

LatticePath::LatticePath(std::initializer_list<int> indices, std::size_t n_max)
    : LatticePath(std::span<const int>(indices.begin(), indices.size()), n_max) {}

LatticePath LatticePath::reversed() const {
  return LatticePath(std::vector<LatticeStep>(steps_.rbegin(), steps_.rend()), n_max_);
}

LatticePath LatticePath::negated() const {
  std::vector<LatticeStep> flipped;
  flipped.reserve(steps_.size());
  for (auto s : steps_) flipped.push_back(s.flipped());
  return LatticePath(std::move(flipped), n_max_);
}

bool has_axis_property(const LatticePath& p) {
  std::vector<long> balance(p.step_bound() + 1, 0);
  for (auto s : p.steps()) balance[s.magnitude()] += s.index() > 0 ? 1 : -1;
  return std::all_of(balance.begin(), balance.end(), [](long b) { return b == 0; });
}

namespace {

void check_bound(std::size_t n_max) {
  if (n_max == 0) throw ParameterError("lattice step bound N must be positive");
}

// Depth-first walk over every step sequence; `unbalanced` counts the
// exponents whose up and down steps currently differ.
struct Enumerator {
  std::size_t n_max;
  std::size_t length;
  std::vector<long> balance;
  long unbalanced = 0;
  std::uint64_t hits = 0;

  void run(std::size_t depth) {
    if (depth == length) {
      if (unbalanced == 0) ++hits;
      return;
    }
    for (std::size_t k = 1; k <= n_max; ++k) {
      for (long sign : {1L, -1L}) {
        const long before = balance[k];
        const long after = before + sign;
        unbalanced += (before == 0) - (after == 0);
        balance[k] = after;
        run(depth + 1);
        balance[k] = before;
        unbalanced -= (before == 0) - (after == 0);
      }
    }
  }
};

}  // namespace

BruteForceCount count_axis_paths_bruteforce(std::size_t n_max, std::size_t length,
                                            std::uint64_t budget) {
  check_bound(n_max);
  const Count total = power(2 * n_max, length);
  if (total > budget)
    throw LimitError("brute-force enumeration of (2*" + std::to_string(n_max) + ")^" +
                     std::to_string(length) + " = " + to_decimal(total) +
                     " paths exceeds the budget of " + std::to_string(budget));
  Enumerator e{n_max, length, std::vector<long>(n_max + 1, 0)};
  e.run(0);
  return {Count(e.hits), total};
}

Count tuple_coefficient(std::span<const int> sorted_tuple) {
  if (std::find(sorted_tuple.begin(), sorted_tuple.end(), 0) != sorted_tuple.end())
    throw ParameterError("tuple entries must be nonzero");
  if (!std::is_sorted(sorted_tuple.begin(), sorted_tuple.end()))
    throw ParameterError("tuple must be sorted");
  Count c = 1;
  std::size_t len = sorted_tuple.size();
  while (len > 0) {
    const int last = sorted_tuple[len - 1];
    std::size_t run = 1;
    while (run < len && sorted_tuple[len - 1 - run] == last) ++run;
    c *= binomial(len, run);
    len -= run;
  }
  return c;
}

std::vector<BalancedTupleClass> balanced_tuples(std::size_t n_max, std::size_t length) {
  check_bound(n_max);
  std::vector<BalancedTupleClass> out;
  if (length % 2 != 0) return out;
  const std::size_t pairs = length / 2;

  // multiplicity[k-1] = number of (+k, -k) pairs
  std::vector<std::size_t> multiplicity(n_max, 0);
  auto emit = [&] {
    std::vector<int> tuple;
    tuple.reserve(length);
    for (std::size_t k = n_max; k >= 1; --k)
      tuple.insert(tuple.end(), multiplicity[k - 1], -static_cast<int>(k));
    for (std::size_t k = 1; k <= n_max; ++k)
      tuple.insert(tuple.end(), multiplicity[k - 1], static_cast<int>(k));
    Count c = tuple_coefficient(tuple);
    out.push_back({std::move(tuple), std::move(c)});
  };
  auto fill = [&](auto&& self, std::size_t k, std::size_t remaining) -> void {
    if (k == n_max - 1) {
      multiplicity[k] = remaining;
      emit();
      return;
    }
    for (std::size_t m = 0; m <= remaining; ++m) {
      multiplicity[k] = m;
      self(self, k + 1, remaining - m);
    }
  };
  fill(fill, 0, pairs);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.tuple < b.tuple; });
  return out;
}

Count count_axis_paths_recurrence(std::size_t n_max, std::size_t length) {
  check_bound(n_max);
  if (length % 2 != 0) return 0;
  Count sum = 0;
  for (const auto& cls : balanced_tuples(n_max, length)) sum += cls.coefficient;
  return sum;
}

Count closed_form_count(std::size_t n_max, std::size_t length) {
  if (n_max != 1 && n_max != 2)
    throw ParameterError("closed form is only known for N = 1 and N = 2, got N = " +
                         std::to_string(n_max));
  if (length % 2 != 0) return 0;
  const std::size_t half = length / 2;
  const Count central = binomial(length, half);
  if (n_max == 1) return central;
  Count squares = 0;
  for (std::size_t j = 0; j <= half; ++j) {
    const Count b = binomial(half, j);
    squares += b * b;
  }
  return central * squares;
}

}  // namespace fractaloid

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fractaloid/count.hpp"
#include "fractaloid/graph.hpp"

namespace fractaloid {

/// E(T_G^n): for each vertex v, the number of n-tuples of shadowed arcs
/// whose groupoid product reduces to v. Values are indexed like the
/// graph's vertex list.
struct MomentVector {
  std::size_t n = 0;
  std::vector<std::string> vertices;
  std::vector<Count> values;

  /// Throws LookupError for an unknown vertex.
  const Count& at(std::string_view vertex) const;
};

inline constexpr std::size_t kDefaultMaxStates = 1'000'000;

struct MomentOptions {
  /// Cap on distinct reduced prefixes alive in one DP step.
  std::size_t max_states = kDefaultMaxStates;
};

/// Walk DP over maps ReducedWord -> count, seeded with the vertex word and
/// extended one shadowed arc at a time. Prefixes longer than the remaining
/// number of steps cannot cancel back and are dropped. Throws LimitError
/// when a step holds more than max_states prefixes.
Count radial_moment_at(const ShadowedGraph& g, VertexIndex v, std::size_t n,
                       const MomentOptions& options = {});

MomentVector radial_moment(const DirectedGraph& g, std::size_t n,
                           const MomentOptions& options = {});

/// Closed walks of length n at the root of the 2N-regular tree, by a DP
/// over the distance from the root.
Count tree_return_count(std::size_t degree, std::size_t n);

/// The common value when every vertex carries the same count.
std::optional<Count> is_scalar(const MomentVector& m);

/// Equal vertex counts and, for every 1 <= n <= n_max, equal moments: both
/// scalar with the same value, or both non-scalar with identical vectors.
bool identically_distributed(const DirectedGraph& g1, const DirectedGraph& g2, std::size_t n_max,
                             const MomentOptions& options = {});

struct MomentTheoremRow {
  std::size_t n = 0;
  std::optional<Count> walk;  // (a) scalar value of the walk DP
  Count tree;                 // (b) tree_return_count(N, n)
  Count lattice;              // (c) count_axis_paths_recurrence(N, n)
  bool a_eq_b = false;
  bool a_eq_c = false;
  bool b_eq_c = false;
};

struct MomentTheoremReport {
  std::string graph;
  std::size_t degree = 0;  // N
  std::vector<MomentTheoremRow> rows;
};

/// Tabulates the three columns for n = 1..n_max. Reports, never asserts.
/// Throws DomainError for non-fractal input.
MomentTheoremReport verify_moment_theorem(const DirectedGraph& g, std::size_t n_max,
                                          const MomentOptions& options = {});

}  // namespace fractaloid

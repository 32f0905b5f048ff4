#include "fractaloid/moments.hpp"

#include <algorithm>
#include <unordered_map>

#include "fractaloid/error.hpp"
#include "fractaloid/fractality.hpp"
#include "fractaloid/groupoid.hpp"
#include "fractaloid/lattice.hpp"

namespace fractaloid {

const Count& MomentVector::at(std::string_view vertex) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == vertex) return values[i];
  throw LookupError("unknown vertex '" + std::string(vertex) + "' in moment vector");
}

Count radial_moment_at(const ShadowedGraph& g, VertexIndex v, std::size_t n,
                       const MomentOptions& options) {
  using StateMap = std::unordered_map<ReducedWord, Count, ReducedWordHash>;
  const ReducedWord unit = ReducedWord::vertex(g, v);
  StateMap current{{unit, Count(1)}};
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t remaining = n - step;
    StateMap next;
    for (const auto& [word, count] : current) {
      for (auto a : g.out_arcs(word.range())) {
        ReducedWord extended = multiply(g, word, ReducedWord::letter(g, a));
        if (extended.length() > remaining) continue;
        next[std::move(extended)] += count;
      }
      if (next.size() > options.max_states)
        throw LimitError("moment DP of '" + g.base().name() + "' at n = " + std::to_string(n) +
                         " exceeds " + std::to_string(options.max_states) + " states");
    }
    current = std::move(next);
  }
  auto it = current.find(unit);
  return it == current.end() ? Count(0) : it->second;
}

MomentVector radial_moment(const DirectedGraph& g, std::size_t n, const MomentOptions& options) {
  const ShadowedGraph sg(g);
  MomentVector m;
  m.n = n;
  m.vertices = g.vertices();
  m.values.reserve(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    m.values.push_back(radial_moment_at(sg, v, n, options));
  return m;
}

Count tree_return_count(std::size_t degree, std::size_t n) {
  if (degree == 0) throw ParameterError("tree_return_count needs N >= 1");
  const std::size_t branching = 2 * degree;
  // walks[d] = number of walks currently at distance d from the root
  std::vector<Count> walks(n + 2, 0);
  walks[0] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Count> next(n + 2, 0);
    for (std::size_t d = 0; d <= n; ++d) {
      if (walks[d] == 0) continue;
      if (d == 0) {
        next[1] += walks[0] * branching;
      } else {
        next[d + 1] += walks[d] * (branching - 1);
        next[d - 1] += walks[d];
      }
    }
    walks = std::move(next);
  }
  return walks[0];
}

std::optional<Count> is_scalar(const MomentVector& m) {
  if (m.values.empty()) return std::nullopt;
  const Count& first = m.values.front();
  if (std::all_of(m.values.begin(), m.values.end(), [&](const Count& c) { return c == first; }))
    return first;
  return std::nullopt;
}

bool identically_distributed(const DirectedGraph& g1, const DirectedGraph& g2, std::size_t n_max,
                             const MomentOptions& options) {
  if (g1.vertex_count() != g2.vertex_count()) return false;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto m1 = radial_moment(g1, n, options);
    const auto m2 = radial_moment(g2, n, options);
    const auto s1 = is_scalar(m1);
    const auto s2 = is_scalar(m2);
    if (s1.has_value() != s2.has_value()) return false;
    if (s1 ? *s1 != *s2 : m1.values != m2.values) return false;
  }
  return true;
}

MomentTheoremReport verify_moment_theorem(const DirectedGraph& g, std::size_t n_max,
                                          const MomentOptions& options) {
  if (!is_fractal(g))
    throw DomainError("moment theorem applies to fractal graphs; '" + g.name() +
                      "' is not: " + *non_fractal_reason(g));
  MomentTheoremReport report;
  report.graph = g.name();
  report.degree = max_out_degree(g);
  for (std::size_t n = 1; n <= n_max; ++n) {
    MomentTheoremRow row;
    row.n = n;
    row.walk = is_scalar(radial_moment(g, n, options));
    row.tree = tree_return_count(report.degree, n);
    row.lattice = count_axis_paths_recurrence(report.degree, n);
    row.a_eq_b = row.walk && *row.walk == row.tree;
    row.a_eq_c = row.walk && *row.walk == row.lattice;
    row.b_eq_c = row.tree == row.lattice;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace fractaloid

#include "fractaloid/labeling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fractaloid/error.hpp"

namespace fractaloid {

namespace {

bool balanced_regular(const DirectedGraph& g, std::size_t n) {
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto d = degrees(g, v);
    if (d.out != n || d.in != n) return false;
  }
  return n > 0;
}

// Kuhn's augmenting paths on the bipartite source/target incidence,
// restricted to edges that have no label yet.
class MatchingRound {
 public:
  MatchingRound(const DirectedGraph& g, const std::vector<int>& labels)
      : g_(g), labels_(labels), matched_edge_(g.vertex_count(), kNone) {}

  bool run() {
    for (VertexIndex u = 0; u < g_.vertex_count(); ++u) {
      visited_.assign(g_.vertex_count(), false);
      if (!augment(u)) return false;
    }
    return true;
  }

  // Edge matched into each target vertex.
  const std::vector<EdgeIndex>& matched_edges() const { return matched_edge_; }

 private:
  static constexpr EdgeIndex kNone = static_cast<EdgeIndex>(-1);

  bool augment(VertexIndex u) {
    for (EdgeIndex e : g_.out_edges(u)) {
      if (labels_[e] != 0) continue;
      const VertexIndex w = g_.edge(e).dst;
      if (visited_[w]) continue;
      visited_[w] = true;
      if (matched_edge_[w] == kNone || augment(g_.edge(matched_edge_[w]).src)) {
        matched_edge_[w] = e;
        return true;
      }
    }
    return false;
  }

  const DirectedGraph& g_;
  const std::vector<int>& labels_;
  std::vector<EdgeIndex> matched_edge_;
  std::vector<bool> visited_;
};

}  // namespace

Labeling canonical_labeling(const DirectedGraph& g) {
  std::size_t n = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) n = std::max(n, g.out_edges(v).size());
  std::vector<int> labels(g.edge_count(), 0);

  if (balanced_regular(g, n)) {
    for (std::size_t round = 1; round <= n; ++round) {
      MatchingRound matching(g, labels);
      if (!matching.run())
        throw std::logic_error("no perfect matching in round " + std::to_string(round) +
                               " of a " + std::to_string(n) + "-regular graph '" + g.name() +
                               "'");
      for (EdgeIndex e : matching.matched_edges()) labels[e] = static_cast<int>(round);
    }
    return Labeling(n, std::move(labels));
  }

  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    int next = 1;
    for (EdgeIndex e : g.out_edges(v)) labels[e] = next++;
  }
  return Labeling(n, std::move(labels));
}

bool is_proper_labeling(const DirectedGraph& g, const Labeling& lab) {
  if (lab.labels().size() != g.edge_count()) return false;
  const std::size_t n = lab.degree_bound();
  auto distinct_in_range = [&](std::span<const EdgeIndex> edges) {
    std::set<int> seen;
    for (EdgeIndex e : edges) {
      const int l = lab.label(e);
      if (l < 1 || static_cast<std::size_t>(l) > n || !seen.insert(l).second) return false;
    }
    return true;
  };
  const bool check_in = balanced_regular(g, n);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!distinct_in_range(g.out_edges(v))) return false;
    if (check_in && !distinct_in_range(g.in_edges(v))) return false;
  }
  return true;
}

LatticePath label_walk(const DirectedGraph& g, const Labeling& lab,
                       std::span<const SignedEdge> walk) {
  std::vector<int> steps;
  steps.reserve(walk.size());
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (walk[i].edge >= g.edge_count())
      throw StructuralError("walk letter #" + std::to_string(i) + " is not an edge of '" +
                            g.name() + "'");
    if (i > 0 && arc_target(g, walk[i - 1]) != arc_source(g, walk[i]))
      throw StructuralError("walk is not admissible at position " + std::to_string(i) + ": " +
                            letter_id(g, walk[i - 1]) + " then " + letter_id(g, walk[i]));
    steps.push_back(lab.label(walk[i]));
  }
  return LatticePath(steps, lab.degree_bound());
}

GraphAutomaton::GraphAutomaton(DirectedGraph g, Labeling lab)
    : graph_(std::move(g)), labeling_(std::move(lab)) {
  if (labeling_.labels().size() != graph_.base().edge_count())
    throw StructuralError("labeling does not match graph '" + graph_.base().name() + "'");
}

GraphAutomaton::GraphAutomaton(const DirectedGraph& g)
    : GraphAutomaton(g, canonical_labeling(g)) {}

std::vector<int> GraphAutomaton::alphabet() const {
  std::vector<int> out{kEmptyLabel};
  const int n = static_cast<int>(labeling_.degree_bound());
  for (int k = 1; k <= n; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

std::vector<GraphAutomaton::State> GraphAutomaton::states() const {
  std::vector<State> out{std::nullopt};
  for (auto a : graph_.arcs()) out.emplace_back(a);
  return out;
}

GraphAutomaton::Step GraphAutomaton::step(int label, State state) const {
  if (label == kEmptyLabel || !state) return {};
  std::optional<SignedEdge> continuation;
  for (auto a : graph_.out_arcs(graph_.target(*state))) {
    if (labeling_.label(a) != label) continue;
    if (continuation) return {};  // ambiguous
    continuation = a;
  }
  if (!continuation) return {};
  return {label, continuation};
}

}  // namespace fractaloid

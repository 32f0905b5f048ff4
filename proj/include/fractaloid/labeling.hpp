#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fractaloid/graph.hpp"
#include "fractaloid/lattice.hpp"

namespace fractaloid {

/// Lattice labels on edges: edge e carries index label(e) in 1..N and its
/// shadow carries -label(e).
class Labeling {
 public:
  Labeling(std::size_t degree_bound, std::vector<int> labels)
      : degree_bound_(degree_bound), labels_(std::move(labels)) {}

  std::size_t degree_bound() const noexcept { return degree_bound_; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  int label(EdgeIndex e) const { return labels_.at(e); }
  int label(SignedEdge a) const {
    return a.orientation == Orientation::Forward ? label(a.edge) : -label(a.edge);
  }

 private:
  std::size_t degree_bound_;
  std::vector<int> labels_;
};

/// Out-edges of every vertex get distinct labels 1..out-degree. When every
/// vertex has out-degree = in-degree = N, the labels come from splitting the
/// source/target incidence into N perfect matchings, so in-labels are
/// distinct as well. Deterministic in the declared edge order.
Labeling canonical_labeling(const DirectedGraph& g);

/// Out-labels distinct at every vertex; for balanced regular graphs also
/// in-labels distinct.
bool is_proper_labeling(const DirectedGraph& g, const Labeling& lab);

/// Forward e -> +label(e), shadow -> -label(e). Throws StructuralError for a
/// walk whose consecutive arcs do not compose.
LatticePath label_walk(const DirectedGraph& g, const Labeling& lab,
                       std::span<const SignedEdge> walk);

/// The automaton over the alphabet {∅_X, ±1..±N} whose states are the
/// shadowed arcs plus the sink ∅. From state e and label l it emits l and
/// moves to the unique arc leaving the range of e that carries l; without
/// such a unique arc it emits ∅_X and falls into the sink.
class GraphAutomaton {
 public:
  using State = std::optional<SignedEdge>;  // nullopt is the sink ∅
  static constexpr int kEmptyLabel = 0;     // ∅_X

  struct Step {
    int output = kEmptyLabel;
    State next;

    bool operator==(const Step&) const = default;
  };

  GraphAutomaton(DirectedGraph g, Labeling lab);
  explicit GraphAutomaton(const DirectedGraph& g);

  const ShadowedGraph& graph() const noexcept { return graph_; }
  const Labeling& labeling() const noexcept { return labeling_; }

  std::vector<int> alphabet() const;
  std::vector<State> states() const;

  Step step(int label, State state) const;

 private:
  ShadowedGraph graph_;
  Labeling labeling_;
};

}  // namespace fractaloid

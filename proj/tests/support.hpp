#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fractaloid/graph.hpp"

namespace fractaloid::testing {

inline DirectedGraph O(std::size_t n) { return family(Family::OneVertexLoops, n); }
inline DirectedGraph K(std::size_t n) { return family(Family::Circulant, n); }
inline DirectedGraph C(std::size_t n) { return family(Family::Complete, n); }
inline DirectedGraph P(std::size_t n) { return family(Family::LinearPath, n); }
inline DirectedGraph Ge() { return family(Family::TwoVertexTree, 1); }
inline DirectedGraph T21() { return family(Family::TwoVertexTree, 2); }
inline DirectedGraph R2K3() { return regularize(K(3), 2); }
inline DirectedGraph K3O1() { return iterated_glue_loops(K(3), 1); }

/// Random multigraph with loops and parallel edges.
inline DirectedGraph random_graph(std::mt19937& rng, std::size_t vertices, std::size_t edges,
                                  const std::string& name = "rand") {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < vertices; ++i) vs.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < edges; ++i)
    es.push_back({"e" + std::to_string(i), vs[pick(rng)], vs[pick(rng)]});
  return DirectedGraph(name, vs, es);
}

/// Same graph with renamed ids, listed in shuffled order.
inline DirectedGraph scrambled(const DirectedGraph& g, std::mt19937& rng) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) vs.push_back("x" + std::to_string(i));
  std::shuffle(vs.begin(), vs.end(), rng);
  std::vector<EdgeSpec> es;
  for (const auto& e : g.edges())
    es.push_back({"f" + std::to_string(es.size()), "x" + std::to_string(e.src),
                  "x" + std::to_string(e.dst)});
  std::shuffle(es.begin(), es.end(), rng);
  return DirectedGraph(g.name() + "'", vs, es);
}

}  // namespace fractaloid::testing

#include "fractaloid/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "fractaloid/error.hpp"

namespace fractaloid {

namespace {

using Multiplicity = std::vector<std::vector<std::size_t>>;

Multiplicity multiplicities(const DirectedGraph& g) {
  Multiplicity m(g.vertex_count(), std::vector<std::size_t>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) ++m[e.src][e.dst];
  return m;
}

using Signature = std::tuple<std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const DirectedGraph& g, const Multiplicity& m) {
  std::vector<Signature> sig(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto d = degrees(g, v);
    sig[v] = {d.out, d.in, m[v][v]};
  }
  return sig;
}

class Search {
 public:
  Search(const DirectedGraph& g1, const DirectedGraph& g2, const IsomorphismOptions& options)
      : m1_(multiplicities(g1)),
        m2_(multiplicities(g2)),
        sig1_(signatures(g1, m1_)),
        sig2_(signatures(g2, m2_)),
        limit_(options.max_search_nodes),
        image_(g1.vertex_count()),
        used_(g2.vertex_count(), false) {
    order_.resize(g1.vertex_count());
    std::iota(order_.begin(), order_.end(), VertexIndex{0});
    // most constrained first
    std::stable_sort(order_.begin(), order_.end(), [&](VertexIndex a, VertexIndex b) {
      auto [oa, ia, la] = sig1_[a];
      auto [ob, ib, lb] = sig1_[b];
      return oa + ia > ob + ib;
    });
  }

  bool run() { return extend(0); }
  const std::vector<VertexIndex>& image() const { return image_; }

 private:
  bool consistent(std::size_t depth, VertexIndex u, VertexIndex x) const {
    if (m1_[u][u] != m2_[x][x]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const VertexIndex w = order_[i];
      const VertexIndex y = image_[w];
      if (m1_[u][w] != m2_[x][y] || m1_[w][u] != m2_[y][x]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > limit_)
      throw LimitError("graph isomorphism search exceeded " + std::to_string(limit_) + " nodes");
    const VertexIndex u = order_[depth];
    for (VertexIndex x = 0; x < used_.size(); ++x) {
      if (used_[x] || sig1_[u] != sig2_[x] || !consistent(depth, u, x)) continue;
      used_[x] = true;
      image_[u] = x;
      if (extend(depth + 1)) return true;
      used_[x] = false;
    }
    return false;
  }

  Multiplicity m1_, m2_;
  std::vector<Signature> sig1_, sig2_;
  std::size_t limit_;
  std::size_t nodes_ = 0;
  std::vector<VertexIndex> order_;
  std::vector<VertexIndex> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<GraphIsomorphism> graph_isomorphic(const DirectedGraph& g1, const DirectedGraph& g2,
                                                 const IsomorphismOptions& options) {
  for (const auto* g : {&g1, &g2})
    if (g->vertex_count() > options.max_vertices)
      throw LimitError("graph '" + g->name() + "' has " + std::to_string(g->vertex_count()) +
                       " vertices; isomorphism search is limited to " +
                       std::to_string(options.max_vertices));
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;

  Search search(g1, g2, options);
  {
    auto s1 = signatures(g1, multiplicities(g1));
    auto s2 = signatures(g2, multiplicities(g2));
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  if (!search.run()) return std::nullopt;

  GraphIsomorphism iso;
  iso.vertex_map = search.image();
  std::map<std::pair<VertexIndex, VertexIndex>, std::vector<EdgeIndex>> parallel2;
  for (EdgeIndex e = 0; e < g2.edge_count(); ++e)
    parallel2[{g2.edge(e).src, g2.edge(e).dst}].push_back(e);
  std::map<std::pair<VertexIndex, VertexIndex>, std::size_t> taken;
  iso.edge_map.resize(g1.edge_count());
  for (EdgeIndex e = 0; e < g1.edge_count(); ++e) {
    const std::pair key{iso.vertex_map[g1.edge(e).src], iso.vertex_map[g1.edge(e).dst]};
    iso.edge_map[e] = parallel2.at(key).at(taken[key]++);
  }
  return iso;
}

bool is_valid_isomorphism(const DirectedGraph& g1, const DirectedGraph& g2,
                          const GraphIsomorphism& iso) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  if (iso.vertex_map.size() != g1.vertex_count() || iso.edge_map.size() != g1.edge_count())
    return false;
  std::vector<bool> hit_v(g2.vertex_count(), false), hit_e(g2.edge_count(), false);
  for (auto x : iso.vertex_map) {
    if (x >= g2.vertex_count() || hit_v[x]) return false;
    hit_v[x] = true;
  }
  for (EdgeIndex e = 0; e < g1.edge_count(); ++e) {
    const auto f = iso.edge_map[e];
    if (f >= g2.edge_count() || hit_e[f]) return false;
    hit_e[f] = true;
    if (iso.vertex_map[g1.edge(e).src] != g2.edge(f).src ||
        iso.vertex_map[g1.edge(e).dst] != g2.edge(f).dst)
      return false;
  }
  return true;
}

}  // namespace fractaloid

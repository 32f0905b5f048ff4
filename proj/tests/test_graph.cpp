#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>

#include "fractaloid/error.hpp"
#include "fractaloid/graph.hpp"
#include "fractaloid/graph_io.hpp"
#include "fractaloid/isomorphism.hpp"
#include "support.hpp"

using namespace fractaloid;
using namespace fractaloid::testing;

namespace {

std::set<std::string> letter_ids(const ShadowedGraph& sg) {
  std::set<std::string> out;
  for (auto a : sg.arcs()) out.insert(sg.letter_id(a));
  return out;
}

bool isomorphic(const DirectedGraph& a, const DirectedGraph& b) {
  auto iso = graph_isomorphic(a, b);
  if (iso) REQUIRE(is_valid_isomorphism(a, b, *iso));
  return iso.has_value();
}

}  // namespace

TEST_CASE("shadow adds one inverse arc per edge") {
  const auto o1 = shadow(O(1));
  CHECK(o1.base().vertex_count() == 1);
  CHECK(letter_ids(o1) == std::set<std::string>{"e1", "e1~"});

  const auto bare = shadow(DirectedGraph("bare", {"a", "b"}, {}));
  CHECK(bare.arcs().empty());

  const auto k2 = shadow(K(2));
  CHECK(k2.base().vertex_count() == 2);
  CHECK(letter_ids(k2) == std::set<std::string>{"e1", "e1~", "e2", "e2~"});

  // v1 -e1-> v2 : the shadow runs v2 -> v1
  const SignedEdge e1_inv{0, Orientation::Inverse};
  CHECK(k2.source(e1_inv) == 1);
  CHECK(k2.target(e1_inv) == 0);
  CHECK(e1_inv.inverse().inverse() == e1_inv);
}

TEST_CASE("degrees") {
  CHECK(degrees(C(3), "v1") == Degrees{2, 2, 4});
  CHECK(degrees(Ge(), "v2") == Degrees{0, 1, 1});
  CHECK(degrees(O(3), "v") == Degrees{3, 3, 6});
  CHECK_THROWS_AS(degrees(C(3), "nope"), LookupError);
}

TEST_CASE("families") {
  const auto c3 = family(Family::Complete, 3);
  CHECK(c3.vertex_count() == 3);
  CHECK(c3.edge_count() == 6);

  const auto o1 = family(Family::OneVertexLoops, 1);
  CHECK(o1.vertex_count() == 1);
  CHECK(o1.edge_count() == 1);
  CHECK(o1.edge(0).is_loop());

  const auto k2 = family(Family::Circulant, 2);
  REQUIRE(k2.edge_count() == 2);
  CHECK(k2.edge_spec(0) == EdgeSpec{"e1", "v1", "v2"});
  CHECK(k2.edge_spec(1) == EdgeSpec{"e2", "v2", "v1"});

  const auto t21 = T21();
  CHECK(t21.vertex_count() == 3);
  CHECK(t21.edge_spec(0) == EdgeSpec{"e1", "v1", "v2"});
  CHECK(t21.edge_spec(1) == EdgeSpec{"e2", "v1", "v3"});

  CHECK(P(4).edge_count() == 3);

  CHECK_THROWS_AS(family(Family::Circulant, 1), ParameterError);
  CHECK_THROWS_AS(family(Family::Complete, 1), ParameterError);
  CHECK_THROWS_AS(family(Family::OneVertexLoops, 0), ParameterError);
  CHECK_THROWS_AS(family(Family::LinearPath, 0), ParameterError);
}

TEST_CASE("regularize") {
  const auto r = R2K3();
  CHECK(r.vertex_count() == 3);
  CHECK(r.edge_count() == 6);
  CHECK(r.edge(0).id == "e1#1");
  CHECK(r.edge(1).id == "e1#2");
  for (VertexIndex v = 0; v < 3; ++v) CHECK(degrees(r, v) == Degrees{2, 2, 4});

  CHECK(isomorphic(regularize(C(3), 1), C(3)));
  CHECK(isomorphic(regularize(O(1), 3), O(3)));
  CHECK_THROWS_AS(regularize(O(1), 0), ParameterError);
}

TEST_CASE("regularize composes multiplicatively") {
  for (const auto& g : {K(3), T21(), O(1), C(3)})
    for (std::size_t k = 1; k <= 3; ++k)
      for (std::size_t m = 1; m <= 3; ++m)
        CHECK(isomorphic(regularize(regularize(g, k), m), regularize(g, k * m)));
}

TEST_CASE("glue") {
  CHECK(isomorphic(glue(O(1), "v", O(1), "v"), O(2)));

  const auto chain = glue(Ge(), "v2", Ge(), "v1");
  CHECK(chain.vertex_count() == 3);
  CHECK(isomorphic(chain, P(3)));

  const auto k3o1 = glue(K(3), "v1", O(1), "v");
  CHECK(k3o1.vertex_count() == 3);
  CHECK(k3o1.edge_count() == 4);

  CHECK_THROWS_AS(glue(K(3), "zz", O(1), "v"), LookupError);
  CHECK_THROWS_AS(glue(K(3), "v1", O(1), "zz"), LookupError);
}

TEST_CASE("glue preserves counts") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_graph(rng, 1 + rng() % 4, rng() % 6, "a");
    const auto b = random_graph(rng, 1 + rng() % 4, rng() % 6, "b");
    const auto g = glue(a, a.vertex_name(rng() % a.vertex_count()), b,
                        b.vertex_name(rng() % b.vertex_count()));
    CHECK(g.vertex_count() == a.vertex_count() + b.vertex_count() - 1);
    CHECK(g.edge_count() == a.edge_count() + b.edge_count());
  }
}

TEST_CASE("iterated_glue_loops") {
  const auto g = K3O1();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 6);
  for (VertexIndex v = 0; v < 3; ++v) CHECK(degrees(g, v) == Degrees{2, 2, 4});

  for (std::size_t n = 1; n <= 4; ++n) CHECK(isomorphic(iterated_glue_loops(O(n), n), O(2 * n)));

  // same graph as gluing O_n at every vertex one after another
  for (const auto& base : {K(3), C(3), T21()}) {
    for (std::size_t n = 1; n <= 2; ++n) {
      DirectedGraph folded = base;
      for (const auto& v : base.vertices()) folded = glue(folded, v, O(n), "v");
      const auto direct = iterated_glue_loops(base, n);
      CHECK(direct.edge_count() == base.edge_count() + n * base.vertex_count());
      CHECK(isomorphic(direct, folded));
    }
  }
}

TEST_CASE("graph_isomorphic") {
  CHECK_FALSE(graph_isomorphic(R2K3(), C(3)));

  const auto c3 = C(3);
  auto self = graph_isomorphic(c3, c3);
  REQUIRE(self);
  CHECK(is_valid_isomorphism(c3, c3, *self));

  CHECK_FALSE(graph_isomorphic(shadow_as_graph(R2K3()), shadow_as_graph(K3O1())));

  IsomorphismOptions small;
  small.max_vertices = 4;
  CHECK_THROWS_AS(graph_isomorphic(C(5), C(5), small), LimitError);

  IsomorphismOptions tight;
  tight.max_search_nodes = 3;
  CHECK_THROWS_AS(graph_isomorphic(K(8), K(8), tight), LimitError);
}

TEST_CASE("graph_isomorphic is reflexive and symmetric, and sees through relabeling") {
  std::mt19937 rng(2024);
  std::vector<DirectedGraph> corpus;
  for (int i = 0; i < 40; ++i)
    corpus.push_back(random_graph(rng, 2 + rng() % 4, 2 + rng() % 6, "g" + std::to_string(i)));
  for (const auto& a : corpus) {
    CHECK(isomorphic(a, a));
    CHECK(isomorphic(a, scrambled(a, rng)));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j)
      CHECK(isomorphic(corpus[i], corpus[j]) == isomorphic(corpus[j], corpus[i]));
}

TEST_CASE("is_connected") {
  CHECK(is_connected(K(3)));
  CHECK_FALSE(is_connected(DirectedGraph("two", {"a", "b"}, {{"x", "a", "a"}, {"y", "b", "b"}})));
  CHECK(is_connected(P(1)));
  CHECK_FALSE(is_connected(DirectedGraph()));
}

TEST_CASE("degree sums") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(rng, 1 + rng() % 5, rng() % 9);
    const auto sg = shadow(g);
    std::size_t out = 0, in = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      const auto d = degrees(g, v);
      out += d.out;
      in += d.in;
      CHECK(sg.out_arcs(v).size() == d.total);
    }
    CHECK(out == g.edge_count());
    CHECK(in == g.edge_count());
    CHECK(sg.arcs().size() == 2 * g.edge_count());
  }
}

TEST_CASE("construction rejects malformed graphs") {
  CHECK_THROWS_AS(DirectedGraph("g", {"a", "a"}, {}), StructuralError);
  CHECK_THROWS_AS(DirectedGraph("g", {"a"}, {{"e", "a", "b"}}), StructuralError);
  CHECK_THROWS_AS(DirectedGraph("g", {"a"}, {{"e", "a", "a"}, {"e", "a", "a"}}), StructuralError);
  CHECK_THROWS_AS(DirectedGraph("g", {"a"}, {{"a", "a", "a"}}), StructuralError);
  CHECK_THROWS_AS(DirectedGraph("g", {""}, {}), StructuralError);
}

TEST_CASE("graph JSON") {
  const auto c3 = C(3);
  CHECK(parse_graph(dump_graph(c3)) == c3);

  const auto path = std::filesystem::temp_directory_path() / "fractaloid_test_c3.json";
  save_graph(c3, path);
  CHECK(load_graph(path) == c3);
  std::filesystem::remove(path);

  CHECK(graph_to_json(K(2)).dump() ==
        R"({"name":"K2","vertices":["v1","v2"],"edges":[{"id":"e1","src":"v1","dst":"v2"},)"
        R"({"id":"e2","src":"v2","dst":"v1"}]})");

  SUBCASE("unknown endpoint names the edge") {
    try {
      parse_graph(R"({"name":"g","vertices":["a"],"edges":[{"id":"bad","src":"zz","dst":"a"}]})");
      FAIL("expected an error");
    } catch (const StructuralError& e) {
      CHECK(std::string(e.what()).find("bad") != std::string::npos);
    }
  }
  SUBCASE("duplicate edge id") {
    CHECK_THROWS_AS(parse_graph(R"({"name":"g","vertices":["a"],"edges":[)"
                                R"({"id":"e","src":"a","dst":"a"},{"id":"e","src":"a","dst":"a"}]})"),
                    StructuralError);
  }
  SUBCASE("unknown keys") {
    CHECK_THROWS_AS(parse_graph(R"({"name":"g","vertices":[],"edges":[],"extra":1})"),
                    StructuralError);
    CHECK_THROWS_AS(
        parse_graph(R"({"name":"g","vertices":["a"],"edges":[{"id":"e","src":"a","dst":"a","w":2}]})"),
        StructuralError);
  }
  SUBCASE("missing keys and wrong types") {
    CHECK_THROWS_AS(parse_graph(R"({"name":"g","vertices":[]})"), StructuralError);
    CHECK_THROWS_AS(parse_graph(R"({"name":"g","vertices":[1],"edges":[]})"), StructuralError);
    CHECK_THROWS_AS(parse_graph("not json"), StructuralError);
  }
}

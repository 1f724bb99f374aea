#include <doctest.h>

#include <algorithm>
#include <set>

#include "bpd/decomposition.hpp"
#include "bpd/error.hpp"
#include "bpd/gadgets.hpp"
#include "bpd/graph.hpp"
#include "bpd/oracle.hpp"
#include "testkit.hpp"

using namespace bpd;

namespace {

// Components of g - s, each as an induced subgraph.
std::vector<Graph> pieces_after(const Graph& g, const VertexSet& s) {
  std::vector<char> gone(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : s) gone[static_cast<std::size_t>(v)] = 1;
  VertexSet keep;
  for (int v = 0; v < g.n(); ++v) {
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  }
  const auto rest = g.induced(keep);
  std::vector<Graph> out;
  for (const auto& comp : connected_components(rest)) out.push_back(rest.induced(comp));
  return out;
}

bool is_cycle(const Graph& g) {
  if (g.n() < 3 || static_cast<int>(g.edges().size()) != g.n()) return false;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return connected_components(g).size() == 1;
}

}  // namespace

TEST_CASE("phi") {
  CHECK(phi(1, 4, 5) == 12);
  CHECK(phi(5, 3, 5) == 69);
  CHECK_THROWS_AS(phi(0, 1, 5), Error);
  CHECK_THROWS_AS(phi(1, 6, 5), Error);
  for (int t = 1; t <= 8; ++t) {
    std::set<int> seen;
    for (int a = 1; a <= t; ++a) {
      for (int b = 1; b <= t; ++b) {
        const int v = phi(a, b, t);
        CHECK(v % 3 == 0);
        CHECK(seen.insert(v).second);
      }
    }
    CHECK(*seen.rbegin() == 3 * t * t);
  }
}

TEST_CASE("chain shape") {
  const std::vector<int> x = {3, 6};
  const auto chain = gadget_chain(x);
  CHECK(chain.graph.n() == 7);
  REQUIRE(chain.u.size() == 1);
  const auto parts = pieces_after(chain.graph, {chain.u[0]});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].n() == 3);
  CHECK(parts[1].n() == 3);
  CHECK(chain.b.size() == 3);
  CHECK(chain.d.size() == 3);

  CHECK_THROWS_AS(gadget_chain(std::vector<int>{3}), Error);
  CHECK_THROWS_AS(gadget_chain(std::vector<int>{2, 6}), Error);
  CHECK_THROWS_AS(gadget_chain(std::vector<int>{3, 5}), Error);
}

TEST_CASE("deleting u_q leaves x_{q-1} vertices on the B side") {
  testkit::Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> x = {testkit::pick(rng, 3, 6)};
    const int z = testkit::pick(rng, 1, 5);
    for (int q = 0; q < z; ++q) x.push_back(x.back() + testkit::pick(rng, 3, 6));
    const auto chain = gadget_chain(x);
    CHECK(chain.graph.n() == x.back() + 1);
    CHECK(static_cast<int>(chain.u.size()) == z);
    for (int q = 1; q <= z; ++q) {
      const Vertex u = chain.u[static_cast<std::size_t>(q - 1)];
      VertexSet keep;
      for (int v = 0; v < chain.graph.n(); ++v) {
        if (v != u) keep.push_back(v);
      }
      const auto rest = chain.graph.induced(keep);
      const auto comps = connected_components(rest);
      REQUIRE(comps.size() == 2);
      // Vertices of `rest` are renumbered in order, so the B side holds vertex 0.
      const auto& b_side = std::find(comps[0].begin(), comps[0].end(), 0) != comps[0].end() ? comps[0] : comps[1];
      CHECK(static_cast<int>(b_side.size()) == x[static_cast<std::size_t>(q - 1)]);
    }
    const auto bags = chain_path_bags(chain);
    TreeDecomposition path;
    path.bags = bags;
    for (std::size_t i = 0; i + 1 < bags.size(); ++i) path.tree_edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    CHECK(validate_td(chain.graph, path).ok);
    CHECK(path.width() <= 3);
  }
}

TEST_CASE("grid normalization and permutation independent sets") {
  GridISInstance grid;
  grid.k = 2;
  grid.normalize();
  CHECK(grid.edges.size() == 4);
  CHECK(is_permutation_is(grid, std::vector<int>{0, 1}));
  CHECK_FALSE(is_permutation_is(grid, std::vector<int>{0, 0}));
  grid.edges.push_back({{0, 0}, {1, 1}});
  grid.normalize();
  CHECK_FALSE(is_permutation_is(grid, std::vector<int>{0, 1}));
  CHECK(is_permutation_is(grid, std::vector<int>{1, 0}));
  GridISInstance bad;
  bad.k = 2;
  bad.edges.push_back({{0, 0}, {2, 0}});
  CHECK_THROWS_AS(bad.normalize(), Error);
}

TEST_CASE("fixed-d construction, k = 2, d = 4") {
  for (Mode variant : {Mode::Component, Mode::Block}) {
    CAPTURE(to_string(variant));
    GridISInstance grid;
    grid.k = 2;
    const auto gen = gen_fixed_d(grid, 4, variant, std::vector<int>{0, 1});
    const auto& inst = gen.instance;
    CHECK(inst.d == 4);
    CHECK(inst.graph.n() == gen.vertices_formula);
    CHECK(inst.k == gen.budget_formula);
    REQUIRE(gen.planted);
    // s = (3d - 2) k (k - 1) m with m = 4 grid edges.
    CHECK(gen.planted->size() == 10u * 2 * 1 * 4);
    CHECK(static_cast<std::int64_t>(gen.planted->size()) == gen.budget_formula);
    CHECK(verify_solution(inst.graph, *gen.planted, 4, inst.family, variant));
    CHECK(validate_td(inst.graph, gen.decomposition).ok);
    CHECK(gen.bag_bound == (3 * 4 + 4) * 2 + 6 * 4 - 4);
    CHECK(gen.decomposition.width() + 1 <= gen.bag_bound);
    for (const auto& piece : pieces_after(inst.graph, *gen.planted)) {
      if (variant == Mode::Component) {
        CHECK(piece.n() == 4);
        CHECK(is_cycle(piece));
      } else {
        for (const auto& block : biconnected_blocks(piece).blocks) {
          const auto bg = piece.induced(block);
          CHECK((bg.n() == 2 || (bg.n() == 4 && is_cycle(bg))));
        }
      }
    }
  }
  GridISInstance grid;
  grid.k = 2;
  grid.edges.push_back({{0, 0}, {1, 1}});
  CHECK_THROWS_AS(gen_fixed_d(grid, 4, Mode::Component, std::vector<int>{0, 1}), Error);
  CHECK_THROWS_AS(gen_fixed_d(grid, 3, Mode::Component), Error);
  CHECK_NOTHROW(gen_fixed_d(grid, 5, Mode::Block, std::vector<int>{1, 0}));
}

TEST_CASE("unbounded-d construction, k = 3, t = 2") {
  const std::vector<int> planted = {1, 0, 1};
  const auto g = random_colored_graph(3, 2, 2, 7, planted);
  CHECK_NOTHROW(validate_colored(g));
  const auto gen = gen_unbounded_d(g, planted);
  const auto& inst = gen.instance;
  CHECK(inst.graph.n() == 180);
  CHECK(gen.vertices_formula == 180);
  CHECK(inst.d == 21);
  REQUIRE(gen.planted);
  CHECK(gen.planted->size() == 12);
  CHECK(inst.k == 12);
  CHECK(validate_td(inst.graph, gen.decomposition).ok);
  CHECK(gen.decomposition.width() <= 54 * 3 - 69);
  for (const auto& piece : pieces_after(inst.graph, *gen.planted)) {
    CHECK(piece.n() == 21);
    CHECK(is_chordal(piece));
  }
  CHECK(verify_solution(inst.graph, *gen.planted, inst.d, inst.family, Mode::Component));
  CHECK_THROWS_AS(gen_unbounded_d(g, std::vector<int>{0, 0, 0}), Error);
}

TEST_CASE("unbounded-d construction, larger k") {
  for (int k : {4, 5}) {
    const std::vector<int> planted(static_cast<std::size_t>(k), 0);
    const auto gen = gen_unbounded_d(random_colored_graph(k, 2, 3, 11, planted), planted);
    CHECK(gen.instance.graph.n() == gen.vertices_formula);
    CHECK(validate_td(gen.instance.graph, gen.decomposition).ok);
    CHECK(gen.decomposition.width() <= gen.width_bound);
    REQUIRE(gen.planted);
    CHECK(verify_solution(gen.instance.graph, *gen.planted, gen.instance.d, gen.instance.family, Mode::Component));
  }
}

TEST_CASE("subgraph-isomorphism variant") {
  const auto host = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  const auto pattern = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const auto gen = gen_unbounded_d_si(host, pattern, std::vector<int>{0, 1, 2});
  CHECK(validate_td(gen.instance.graph, gen.decomposition).ok);
  CHECK(gen.decomposition.width() <= gen.width_bound);
  REQUIRE(gen.planted);
  CHECK(verify_solution(gen.instance.graph, *gen.planted, gen.instance.d, gen.instance.family, Mode::Component));
  CHECK_THROWS_AS(gen_unbounded_d_si(host, pattern, std::vector<int>{0, 3, 1}), Error);
}

TEST_CASE("colored graph validation") {
  CHECK_THROWS_AS(random_colored_graph(3, 2, 5, 1), Error);
  ColoredGraph g{2, 2, Graph::from_edges(4, std::vector<Edge>{{0, 1}})};
  CHECK_THROWS_AS(validate_colored(g), Error);
  ColoredGraph uneven{3, 1, Graph::from_edges(3, std::vector<Edge>{{0, 1}})};
  CHECK_THROWS_AS(validate_colored(uneven), Error);
  const auto a = random_colored_graph(3, 3, 4, 5);
  const auto b = random_colored_graph(3, 3, 4, 5);
  CHECK(a.graph.edges() == b.graph.edges());
}

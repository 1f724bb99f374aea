#include <doctest.h>

#include <algorithm>

#include "bpd/characteristic.hpp"
#include "bpd/dp_component.hpp"
#include "bpd/error.hpp"
#include "testkit.hpp"

using namespace bpd;

namespace {

constexpr LabelSet bit(int l) { return LabelSet{1} << l; }

Pattern make_pattern(std::initializer_list<int> labels, std::initializer_list<Edge> edges) {
  Pattern p;
  for (int l : labels) p.labels |= bit(l);
  for (auto [a, b] : edges) {
    p.adj[static_cast<std::size_t>(a)] |= bit(b);
    p.adj[static_cast<std::size_t>(b)] |= bit(a);
  }
  return p;
}

int index_of(const PatternUniverse& ud, const Pattern& p) {
  const int i = ud.find(p);
  REQUIRE(i >= 0);
  return i;
}

}  // namespace

TEST_CASE("compute_characteristic") {
  const auto chordal3 = enumerate_Ud(3, PFamily::parse("chordal"));
  const auto chordal4 = enumerate_Ud(4, PFamily::parse("chordal"));

  SUBCASE("bare triangle inside the boundary") {
    const std::vector<Edge> es = {{0, 1}, {1, 2}, {0, 2}};
    const BoundariedGraph a(Graph::from_edges(3, es), {0, 1, 2});
    const auto cs = compute_characteristic(a, {0, 1, 2}, chordal3);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].blocks == std::vector<VertexSet>{{0, 1, 2}});
    CHECK(cs[0].g == std::vector<int>{index_of(chordal3, make_pattern({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}))});
    CHECK(cs[0].h == std::vector<LabelSet>{0});
    CHECK(is_characteristic(a, {0, 1, 2}, chordal3, cs[0]));
  }
  SUBCASE("triangle plus an outside vertex on two of its vertices") {
    const std::vector<Edge> es = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}};
    const BoundariedGraph a(Graph::from_edges(4, es), {0, 1, 2});
    const Labeling l = {0, 1, 2, 3};
    const auto cs = compute_characteristic(a, l, chordal4);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].h == std::vector<LabelSet>{bit(3)});
    const auto expected = make_pattern({0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}});
    CHECK(cs[0].g == std::vector<int>{index_of(chordal4, expected)});
  }
  SUBCASE("a chordless S-block has no characteristic") {
    const std::vector<Edge> es = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    const BoundariedGraph a(Graph::from_edges(4, es), {0, 1, 2, 3});
    CHECK_THROWS_AS(compute_characteristic(a, {0, 1, 2, 3}, chordal4), Error);
  }
  SUBCASE("only non-trivial boundary blocks are keyed") {
    const std::vector<Edge> es = {{0, 2}};
    CHECK(boundary_blocks(Graph::from_edges(3, es), VertexSet{0, 1, 2}) == std::vector<VertexSet>{{0, 2}});
  }
}

TEST_CASE("compute_characteristic is order independent and self-consistent") {
  testkit::Rng rng(8);
  const auto ud = enumerate_Ud(4, PFamily::parse("chordal"));
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testkit::pick(rng, 3, 7);
    auto g = testkit::random_graph(rng, n, 45);
    VertexSet boundary;
    for (int v = 0; v < n; ++v) {
      if (rng() % 2) boundary.push_back(v);
    }
    Labeling l(static_cast<std::size_t>(n));
    for (auto& x : l) x = testkit::pick(rng, 0, 3);
    if (!is_block_labeling(g, l)) continue;
    const BoundariedGraph a(g, boundary);
    std::vector<Characteristic> cs;
    try {
      cs = compute_characteristic(a, l, ud);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    auto es = g.edges();
    std::reverse(es.begin(), es.end());
    const BoundariedGraph b(Graph::from_edges(n, es), boundary);
    CHECK(compute_characteristic(b, l, ud) == cs);
    for (const auto& c : cs) CHECK(is_characteristic(a, l, ud, c));
  }
  CHECK(checked > 30);
}

TEST_CASE("respects_check") {
  const auto ud = enumerate_Ud(3, PFamily::parse("chordal"));
  const std::vector<Edge> tri = {{0, 1}, {1, 2}, {0, 2}};
  const std::vector<Edge> edge = {{0, 1}};
  Characteristic c;
  c.blocks = {{0, 1}};
  c.g = {index_of(ud, make_pattern({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}))};
  c.h = {bit(2)};
  const VertexSet boundary = {0, 1};
  CHECK(respects_check(Graph::from_edges(3, tri), {0, 1, 2}, boundary, c, ud));
  CHECK_FALSE(respects_check(Graph::from_edges(3, edge), {0, 1, 2}, boundary, c, ud));
}

TEST_CASE("restriction_of") {
  const auto ud = enumerate_Ud(5, PFamily::parse("chordal"));
  const Labeling l = {0, 1, 2, 3, 4};

  SUBCASE("v outside every block keeps the characteristic") {
    Characteristic parent;
    parent.blocks = {{0, 1}};
    parent.g = {index_of(ud, make_pattern({0, 1}, {{0, 1}}))};
    parent.h = {0};
    CHECK(restriction_of(parent, {{0, 1}}, 2, l, ud) == std::vector<Characteristic>{parent});
  }
  SUBCASE("v completing a triangle with empty h") {
    Characteristic parent;
    parent.blocks = {{0, 1, 2}};
    parent.g = {index_of(ud, make_pattern({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}))};
    parent.h = {0};
    const auto rs = restriction_of(parent, {{0, 1}}, 2, l, ud);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].h == std::vector<LabelSet>{0});
    CHECK(rs[0].g == parent.g);
  }
  SUBCASE("h splitting over two child blocks") {
    // Parent block {0,1,2,3} through v = 2; removing v leaves blocks {0,1} and {1,3}.
    const auto q = make_pattern({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}});
    Characteristic parent;
    parent.blocks = {{0, 1, 2, 3}};
    parent.g = {index_of(ud, q)};
    parent.h = {bit(4)};
    const auto rs = restriction_of(parent, {{0, 1}, {1, 3}}, 2, l, ud);
    // Every cover of {4} by the two child values.
    CHECK(rs.size() == 3);
    for (const auto& r : rs) CHECK((r.h[0] | r.h[1]) == bit(4));

    // A label adjacent to v's label in the pattern cannot be hidden behind the children.
    const auto q2 = make_pattern({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}});
    parent.g = {index_of(ud, q2)};
    CHECK(restriction_of(parent, {{0, 1}, {1, 3}}, 2, l, ud).empty());
  }
}

TEST_CASE("extensions_of") {
  const auto ud = enumerate_Ud(3, PFamily::parse("cliques"));
  const int k2 = index_of(ud, make_pattern({0, 1}, {{0, 1}}));
  const int k3 = index_of(ud, make_pattern({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}));

  SUBCASE("isolated v: any label, characteristic unchanged") {
    const std::vector<Edge> es = {{0, 1}};
    const Graph g = Graph::from_edges(3, es);
    Characteristic parent;
    parent.blocks = {{0, 1}};
    parent.g = {k2};
    parent.h = {0};
    const auto ext = extensions_of(g, VertexSet{0, 1, 2}, 2, parent, {0, 1, -1}, ud);
    REQUIRE(ext.size() == 3);
    for (int i = 0; i < 3; ++i) {
      CHECK(ext[static_cast<std::size_t>(i)].label_v == i);
      CHECK(ext[static_cast<std::size_t>(i)].child == parent);
    }
  }
  SUBCASE("v closing a triangle contributes its own label to h") {
    const std::vector<Edge> es = {{0, 1}, {0, 2}, {1, 2}};
    const Graph g = Graph::from_edges(3, es);
    Characteristic parent;
    parent.blocks = {{0, 1}};
    parent.g = {k3};
    parent.h = {bit(2)};
    const auto ext = extensions_of(g, VertexSet{0, 1, 2}, 2, parent, {0, 1, -1}, ud);
    REQUIRE(ext.size() == 1);
    CHECK(ext[0].label_v == 2);
    CHECK(ext[0].child.blocks == std::vector<VertexSet>{{0, 1, 2}});
    CHECK(ext[0].child.g == std::vector<int>{k3});
    CHECK(ext[0].child.h == std::vector<LabelSet>{0});
    // With the wrong pattern hypothesis for the nested block nothing extends.
    parent.g = {k2};
    parent.h = {bit(2)};
    CHECK(extensions_of(g, VertexSet{0, 1, 2}, 2, parent, {0, 1, -1}, ud).empty());
  }
}

TEST_CASE("join_compatible") {
  const auto ud = enumerate_Ud(4, PFamily::parse("chordal"));
  Characteristic c;
  c.blocks = {{0, 1}};
  c.g = {index_of(ud, make_pattern({0, 1, 2, 3}, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}))};
  c.h = {0};
  auto with_h = [&](LabelSet h) {
    Characteristic x = c;
    x.h = {h};
    return x;
  };
  const std::vector<LabelSet> none = {0};
  CHECK(join_compatible(c, c, none, ud));
  const std::vector<LabelSet> h2 = {bit(2)};
  CHECK_FALSE(join_compatible(with_h(bit(2)), with_h(bit(2)), h2, ud));
  const std::vector<LabelSet> h23 = {bit(2) | bit(3)};
  CHECK_FALSE(join_compatible(with_h(bit(2)), with_h(bit(3)), h23, ud));
  const auto sparse = index_of(ud, make_pattern({0, 1, 2, 3}, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}));
  Characteristic s1 = with_h(bit(2)), s2 = with_h(bit(3));
  s1.g = s2.g = {sparse};
  CHECK(join_compatible(s1, s2, h23, ud));
  CHECK_FALSE(join_compatible(s1, s2, h2, ud));
  Characteristic other = c;
  other.blocks = {{0, 2}};
  CHECK_THROWS_AS(join_compatible(c, other, none, ud), Error);
}

TEST_CASE("characteristic equivalence on random triples") {
  const auto r = testkit::characteristic_equivalence(200, 31);
  INFO(r.detail);
  CHECK(r.ok());
  CHECK(r.nontrivial > 20);
}

TEST_CASE("component characteristics") {
  const auto ud = enumerate_Ud_components(3, PFamily::parse("chordal"));
  SUBCASE("isolated boundary vertex") {
    const BoundariedGraph a(Graph(1), {0});
    const auto cs = compute_component_characteristic(a, {0}, ud);
    const int single = index_of(ud, make_pattern({0}, {}));
    CHECK(std::any_of(cs.begin(), cs.end(), [&](const ComponentCharacteristic& c) { return c.g == std::vector<int>{single}; }));
    for (const auto& c : cs) CHECK(c.h == std::vector<LabelSet>{0});
  }
  SUBCASE("boundary edge with an outside neighbor") {
    const std::vector<Edge> es = {{0, 1}, {0, 2}};
    const BoundariedGraph a(Graph::from_edges(3, es), {0, 1});
    const auto cs = compute_component_characteristic(a, {0, 1, 2}, ud);
    REQUIRE_FALSE(cs.empty());
    for (const auto& c : cs) {
      CHECK(c.comps == std::vector<VertexSet>{{0, 1}});
      CHECK(c.h == std::vector<LabelSet>{bit(2)});
    }
    // The outside vertex is complete, so the only fit is the path 1-0-2 itself.
    CHECK(cs.size() == 1);
  }
  SUBCASE("block universe is rejected") {
    CHECK_THROWS_AS(compute_component_characteristic(BoundariedGraph(Graph(1), {0}), {0},
                                                     enumerate_Ud(3, PFamily::parse("chordal"))),
                    Error);
  }
}

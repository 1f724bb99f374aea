#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "bpd/error.hpp"
#include "bpd/labeling.hpp"
#include "bpd/partition.hpp"
#include "testkit.hpp"

using namespace bpd;

namespace {

Pattern make_pattern(std::initializer_list<int> labels, std::initializer_list<Edge> edges) {
  Pattern p;
  for (int l : labels) p.labels |= LabelSet{1} << l;
  for (auto [a, b] : edges) {
    p.adj[static_cast<std::size_t>(a)] |= LabelSet{1} << b;
    p.adj[static_cast<std::size_t>(b)] |= LabelSet{1} << a;
  }
  return p;
}

// Labeled graphs on label subsets of [d] that satisfy `keep`, counted by brute force.
int count_labeled(int d, int min_size, bool (*keep)(const Graph&)) {
  int count = 0;
  for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
    const int size = std::popcount(mask);
    if (size < min_size) continue;
    std::vector<Edge> pairs;
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) pairs.emplace_back(a, b);
    }
    for (std::uint32_t em = 0; em < (1u << pairs.size()); ++em) {
      std::vector<Edge> es;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((em >> e) & 1u) es.push_back(pairs[e]);
      }
      if (keep(Graph::from_edges(size, es))) ++count;
    }
  }
  return count;
}

bool biconnected_chordal(const Graph& g) {
  VertexSet all(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;
  return testkit::is_biconnected_brute(g, all) && !testkit::has_chordless_cycle(g);
}

bool connected_chordal(const Graph& g) {
  return connected_components(g).size() == 1 && !testkit::has_chordless_cycle(g);
}

}  // namespace

TEST_CASE("family parsing and membership") {
  CHECK(PFamily::parse("k1k2").id() == FamilyId::K1K2);
  CHECK(PFamily::parse("cycles").name() == "cycles");
  CHECK_THROWS_AS(PFamily::parse("trees"), Error);
  CHECK(PFamily::parse("chordal").chordal_only());
  CHECK_FALSE(PFamily::parse("cycles").chordal_only());
  CHECK_FALSE(PFamily::parse("all").chordal_only());
  const std::vector<Edge> c4 = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  CHECK(PFamily::parse("cycles").contains(Graph::from_edges(4, c4)));
  CHECK_FALSE(PFamily::parse("chordal").contains(Graph::from_edges(4, c4)));
  const std::vector<Edge> k3 = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(PFamily::parse("cliques").contains(Graph::from_edges(3, k3)));
  CHECK_FALSE(PFamily::parse("k1k2").contains(Graph::from_edges(3, k3)));
}

TEST_CASE("enumerate_Ud") {
  CHECK(enumerate_Ud(2, PFamily::parse("k1k2")).patterns.size() == 1);
  const auto cl = enumerate_Ud(3, PFamily::parse("cliques"));
  CHECK(cl.patterns.size() == 4);
  CHECK(cl.find(make_pattern({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}})) >= 0);
  CHECK(cl.find(make_pattern({0, 1, 2}, {{0, 1}, {1, 2}})) == -1);

  const int chordal4 = count_labeled(4, 2, biconnected_chordal);
  CHECK(chordal4 == 17);
  CHECK(enumerate_Ud(4, PFamily::parse("chordal")).patterns.size() == static_cast<std::size_t>(chordal4));

  const int comp3 = count_labeled(3, 1, connected_chordal);
  CHECK(comp3 == 10);
  CHECK(enumerate_Ud_components(3, PFamily::parse("chordal")).patterns.size() == static_cast<std::size_t>(comp3));

  CHECK_THROWS_AS(enumerate_Ud(4, PFamily::parse("cycles")), Error);
  CHECK_NOTHROW(enumerate_Ud(3, PFamily::parse("cycles")));
  CHECK_THROWS_AS(enumerate_Ud(ud_cap() + 1, PFamily::parse("chordal")), Error);
}

TEST_CASE("pattern rendering is 1-based") {
  CHECK(make_pattern({0, 1, 2}, {{0, 1}, {0, 2}}).to_string() == "{1,2,3: 1-2 1-3}");
}

TEST_CASE("is_block_labeling") {
  const std::vector<Edge> tri = {{0, 1}, {1, 2}, {0, 2}};
  const auto t = Graph::from_edges(3, tri);
  CHECK(is_block_labeling(t, {0, 1, 2}));
  CHECK_FALSE(is_block_labeling(t, {0, 0, 1}));
  // Two triangles sharing vertex 2.
  const std::vector<Edge> bow = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}};
  CHECK(is_block_labeling(Graph::from_edges(5, bow), {0, 1, 2, 0, 1}));
  CHECK_FALSE(is_block_labeling(Graph::from_edges(5, bow), {0, 1, 2, 2, 1}));
}

TEST_CASE("partial label-isomorphism") {
  const auto triangle = make_pattern({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
  const std::vector<Edge> e = {{0, 1}};
  CHECK(partial_label_isomorphic(Graph::from_edges(2, e), {0, 1}, triangle));
  const std::vector<Edge> path = {{0, 1}, {1, 2}};
  CHECK_FALSE(partial_label_isomorphic(Graph::from_edges(3, path), {0, 1, 2}, triangle));
  const std::vector<Edge> tri = {{0, 1}, {1, 2}, {0, 2}};
  const VertexSet all = {0, 1, 2};
  CHECK(label_isomorphic(Graph::from_edges(3, tri), all, {0, 1, 2}, triangle));
  const VertexSet two = {0, 1};
  CHECK_FALSE(label_isomorphic(Graph::from_edges(3, tri), two, {0, 1, 2}, triangle));
  CHECK(pattern_of(Graph::from_edges(3, tri), all, {0, 1, 2}) == triangle);
}

TEST_CASE("blockwise Q-compatibility") {
  const auto q = make_pattern({0, 1, 2, 3}, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  const std::vector<Edge> e = {{0, 1}};
  const BoundariedGraph bare(Graph::from_edges(4, e), {0, 1}, {0, 1});
  const Labeling l = {0, 1, -1, -1};
  CHECK(blockwise_Q_compatible(bare, l, bare, l, q));

  // Both sides attach an outside vertex labeled 2 to the shared edge.
  const std::vector<Edge> ea = {{0, 1}, {0, 2}, {1, 2}};
  const std::vector<Edge> eb = {{0, 1}, {0, 3}, {1, 3}};
  const BoundariedGraph a(Graph::from_edges(4, ea), {0, 1, 2}, {0, 1});
  const BoundariedGraph b(Graph::from_edges(4, eb), {0, 1, 3}, {0, 1});
  CHECK_FALSE(blockwise_Q_compatible(a, {0, 1, 2, -1}, b, {0, 1, -1, 2}, q));
  // Labels 2 and 3 are not adjacent in q, so these two extensions can coexist.
  CHECK(blockwise_Q_compatible(a, {0, 1, 2, -1}, b, {0, 1, -1, 3}, q));
  const auto q23 = make_pattern({0, 1, 2, 3}, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
  CHECK_FALSE(blockwise_Q_compatible(a, {0, 1, 2, -1}, b, {0, 1, -1, 3}, q23));

  const BoundariedGraph other(Graph::from_edges(4, e), {0, 1, 2}, {0, 2});
  CHECK_THROWS_AS(blockwise_Q_compatible(bare, l, other, l, q), Error);
}

TEST_CASE("sum of block-wise Q-compatible pairs with acyclic Aux stays partially label-isomorphic") {
  testkit::Rng rng(23);
  const auto ud = enumerate_Ud(5, PFamily::parse("chordal"));
  int premise = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Pattern& q = ud.patterns[static_cast<std::size_t>(testkit::pick(rng, 0, static_cast<int>(ud.patterns.size()) - 1))];
    std::vector<int> labels;
    for (int l = 0; l < 5; ++l) {
      if (q.has(l)) labels.push_back(l);
    }
    if (labels.size() < 3) continue;
    for (std::size_t i = labels.size(); i > 1; --i) std::swap(labels[i - 1], labels[rng() % i]);
    const int s = testkit::pick(rng, 2, static_cast<int>(labels.size()) - 1);
    const int n = s + 6;
    VertexSet boundary;
    Labeling base(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < s; ++v) {
      boundary.push_back(v);
      base[static_cast<std::size_t>(v)] = labels[static_cast<std::size_t>(v)];
    }
    std::vector<Edge> se;
    for (int a = 0; a < s; ++a) {
      for (int b = a + 1; b < s; ++b) {
        if (q.adjacent(base[static_cast<std::size_t>(a)], base[static_cast<std::size_t>(b)])) se.emplace_back(a, b);
      }
    }
    // Each side copies q on the boundary plus some of the remaining labels, with rare noise.
    auto side = [&](int first, Labeling& l) {
      std::vector<Edge> es = se;
      VertexSet vs = boundary;
      std::vector<int> pool(labels.begin() + s, labels.end());
      const int extra = testkit::pick(rng, 0, static_cast<int>(pool.size()));
      for (int i = 0; i < extra; ++i) {
        const int v = first + i;
        l[static_cast<std::size_t>(v)] = pool[static_cast<std::size_t>(i)];
        for (Vertex w : vs) {
          const bool want = q.adjacent(l[static_cast<std::size_t>(w)], pool[static_cast<std::size_t>(i)]);
          if (want != (rng() % 20 == 0)) es.emplace_back(w, v);
        }
        vs.push_back(v);
      }
      return BoundariedGraph(Graph::from_edges(n, es), vs, boundary);
    };
    Labeling la = base, lb = base;
    const auto a = side(s, la);
    for (std::size_t i = labels.size(); i > static_cast<std::size_t>(s) + 1; --i) {
      std::swap(labels[i - 1], labels[static_cast<std::size_t>(s) + rng() % (i - static_cast<std::size_t>(s))]);
    }
    const auto b = side(s + 3, lb);
    if (!blockwise_Q_compatible(a, la, b, lb, q)) continue;
    const auto aux_a = aux_partition(a);
    const Partition pair[] = {aux_a.partition, aux_partition(b).partition};
    if (!inc_is_forest(static_cast<int>(aux_a.boundary_components.size()), pair)) continue;
    ++premise;
    const auto sum = sum_boundaried(a, b);
    Labeling l = la;
    for (Vertex v : b.vertices()) l[static_cast<std::size_t>(v)] = lb[static_cast<std::size_t>(v)];
    for (const auto& block : s_blocks(sum)) {
      CHECK(partial_label_isomorphic(sum.graph(), block, l, q));
    }
  }
  CHECK(premise > 100);
}

TEST_CASE("ud_cap honours the environment override") {
  CHECK(ud_cap() == kDefaultUdCap);
#if !defined(_WIN32)
  setenv("BPD_UD_CAP", "3", 1);
  CHECK(ud_cap() == 3);
  CHECK_THROWS_AS(enumerate_Ud(4, PFamily::parse("chordal")), Error);
  setenv("BPD_UD_CAP", "junk", 1);
  CHECK(ud_cap() == kDefaultUdCap);
  unsetenv("BPD_UD_CAP");
#endif
}

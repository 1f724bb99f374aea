#include "bpd/labeling.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <string>

#include "bpd/error.hpp"

namespace bpd {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

bool is_biconnected(const Graph& g) {
  if (g.n() < 2) return false;
  auto bd = biconnected_blocks(g);
  return bd.blocks.size() == 1 && static_cast<int>(bd.blocks.front().size()) == g.n();
}

bool is_connected(const Graph& g) { return g.n() >= 1 && connected_components(g).size() == 1; }

PatternUniverse enumerate(int d, PFamily family, bool components) {
  if (d < 1) throw Error(Errc::InvalidInput, "d must be positive");
  const int cap = ud_cap();
  if (d > cap || d > kMaxLabels) {
    throw Error(Errc::CapExceeded,
                "d=" + std::to_string(d) + " exceeds the pattern universe cap " + std::to_string(cap));
  }
  PatternUniverse u;
  u.d = d;
  u.family = family;
  u.components = components;
  const int min_size = components ? 1 : 2;
  for (LabelSet mask = 1; mask < (LabelSet{1} << d); ++mask) {
    const int size = std::popcount(mask);
    if (size < min_size) continue;
    std::vector<int> labels;
    for (int l = 0; l < d; ++l) {
      if ((mask >> l) & 1u) labels.push_back(l);
    }
    std::vector<Edge> pairs;
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) pairs.emplace_back(a, b);
    }
    for (std::uint64_t em = 0; em < (std::uint64_t{1} << pairs.size()); ++em) {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((em >> e) & 1u) edges.push_back(pairs[e]);
      }
      Graph g = Graph::from_edges(size, edges);
      if (components ? !is_connected(g) : !is_biconnected(g)) continue;
      if (!family.contains(g)) continue;
      if (!is_chordal(g)) {
        throw Error(Errc::NonChordalFamily, "family '" + std::string(family.name()) +
                                                "' has a non-chordal member on " +
                                                std::to_string(size) + " vertices");
      }
      Pattern p;
      p.labels = mask;
      for (auto [a, b] : edges) {
        int la = labels[idx(a)], lb = labels[idx(b)];
        p.adj[idx(la)] |= LabelSet{1} << lb;
        p.adj[idx(lb)] |= LabelSet{1} << la;
      }
      u.patterns.push_back(p);
    }
  }
  return u;
}

}  // namespace

PFamily PFamily::parse(std::string_view name) {
  if (name == "k1k2") return PFamily(FamilyId::K1K2);
  if (name == "cliques") return PFamily(FamilyId::Cliques);
  if (name == "chordal") return PFamily(FamilyId::Chordal);
  if (name == "cycles") return PFamily(FamilyId::Cycles);
  if (name == "all") return PFamily(FamilyId::All);
  throw Error(Errc::InvalidInput, "unknown family '" + std::string(name) + "'");
}

std::string_view PFamily::name() const {
  switch (id_) {
    case FamilyId::K1K2: return "k1k2";
    case FamilyId::Cliques: return "cliques";
    case FamilyId::Chordal: return "chordal";
    case FamilyId::Cycles: return "cycles";
    case FamilyId::All: return "all";
  }
  return "?";
}

bool PFamily::chordal_only() const {
  return id_ == FamilyId::K1K2 || id_ == FamilyId::Cliques || id_ == FamilyId::Chordal;
}

bool PFamily::contains(const Graph& g) const {
  const auto n = static_cast<std::size_t>(g.n());
  const bool complete = g.m() == n * (n - (n > 0 ? 1 : 0)) / 2;
  switch (id_) {
    case FamilyId::K1K2: return n <= 2 && complete;
    case FamilyId::Cliques: return complete;
    case FamilyId::Chordal: return is_chordal(g);
    case FamilyId::Cycles: {
      if (n <= 2) return complete;
      for (Vertex v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 2) return false;
      }
      return is_connected(g);
    }
    case FamilyId::All: return true;
  }
  return false;
}

int Pattern::size() const { return std::popcount(labels); }

LabelSet Pattern::neighbors(LabelSet s) const {
  LabelSet out = 0;
  for (LabelSet r = s; r; r &= r - 1) out |= adj[idx(std::countr_zero(r))];
  return out;
}

Graph Pattern::to_graph() const {
  std::vector<int> pos(kMaxLabels, -1);
  int n = 0;
  for (int l = 0; l < kMaxLabels; ++l) {
    if (has(l)) pos[idx(l)] = n++;
  }
  std::vector<Edge> edges;
  for (int a = 0; a < kMaxLabels; ++a) {
    for (int b = a + 1; b < kMaxLabels; ++b) {
      if (has(a) && has(b) && adjacent(a, b)) edges.emplace_back(pos[idx(a)], pos[idx(b)]);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string Pattern::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int l = 0; l < kMaxLabels; ++l) {
    if (!has(l)) continue;
    if (!first) out += ',';
    out += std::to_string(l + 1);
    first = false;
  }
  out += ':';
  for (int a = 0; a < kMaxLabels; ++a) {
    for (int b = a + 1; b < kMaxLabels; ++b) {
      if (has(a) && has(b) && adjacent(a, b)) out += ' ' + std::to_string(a + 1) + '-' + std::to_string(b + 1);
    }
  }
  return out + '}';
}

int PatternUniverse::find(const Pattern& p) const {
  auto it = std::find(patterns.begin(), patterns.end(), p);
  return it == patterns.end() ? -1 : static_cast<int>(it - patterns.begin());
}

int ud_cap() {
  if (const char* env = std::getenv("BPD_UD_CAP")) {
    int value = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size() && value > 0) return value;
  }
  return kDefaultUdCap;
}

PatternUniverse enumerate_Ud(int d, PFamily family) { return enumerate(d, family, false); }

PatternUniverse enumerate_Ud_components(int d, PFamily family) { return enumerate(d, family, true); }

bool is_block_labeling(const Graph& g, const Labeling& l) {
  if (l.size() < idx(g.n())) return false;
  for (const auto& block : biconnected_blocks(g).blocks) {
    LabelSet seen = 0;
    for (Vertex v : block) {
      int lv = l[idx(v)];
      if (lv < 0 || lv >= kMaxLabels || ((seen >> lv) & 1u)) return false;
      seen |= LabelSet{1} << lv;
    }
  }
  return true;
}

bool partial_label_isomorphic(const Graph& g, std::span<const Vertex> vertices, const Labeling& l,
                              const Pattern& q) {
  LabelSet seen = 0;
  for (Vertex v : vertices) {
    int lv = l[idx(v)];
    if (lv < 0 || lv >= kMaxLabels || !q.has(lv) || ((seen >> lv) & 1u)) return false;
    seen |= LabelSet{1} << lv;
  }
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (g.adjacent(vertices[a], vertices[b]) != q.adjacent(l[idx(vertices[a])], l[idx(vertices[b])])) {
        return false;
      }
    }
  }
  return true;
}

bool partial_label_isomorphic(const Graph& h, const Labeling& l, const Pattern& q) {
  VertexSet all(idx(h.n()));
  for (Vertex v = 0; v < h.n(); ++v) all[idx(v)] = v;
  return partial_label_isomorphic(h, all, l, q);
}

bool label_isomorphic(const Graph& g, std::span<const Vertex> vertices, const Labeling& l,
                      const Pattern& q) {
  return static_cast<int>(vertices.size()) == q.size() && partial_label_isomorphic(g, vertices, l, q);
}

Pattern pattern_of(const Graph& g, std::span<const Vertex> vertices, const Labeling& l) {
  Pattern p;
  for (Vertex v : vertices) {
    int lv = l[idx(v)];
    if (lv < 0 || lv >= kMaxLabels || p.has(lv)) {
      throw Error(Errc::InvalidInput, "labels must be defined and distinct");
    }
    p.labels |= LabelSet{1} << lv;
  }
  for (Vertex u : vertices) {
    for (Vertex v : vertices) {
      if (u != v && g.adjacent(u, v)) p.adj[idx(l[idx(u)])] |= LabelSet{1} << l[idx(v)];
    }
  }
  return p;
}

std::vector<VertexSet> s_blocks(const BoundariedGraph& a) {
  std::vector<VertexSet> out;
  for (auto& block : biconnected_blocks(a.graph(), a.vertices()).blocks) {
    VertexSet inside;
    for (Vertex v : block) {
      if (a.in_boundary(v)) inside.push_back(v);
    }
    bool has_edge = false;
    for (std::size_t i = 0; i < inside.size() && !has_edge; ++i) {
      for (std::size_t j = i + 1; j < inside.size() && !has_edge; ++j) {
        has_edge = a.graph().adjacent(inside[i], inside[j]);
      }
    }
    if (has_edge) out.push_back(std::move(block));
  }
  return out;
}

namespace {

void check_compatible(const BoundariedGraph& a, const BoundariedGraph& b) {
  if (!std::equal(a.boundary().begin(), a.boundary().end(), b.boundary().begin(), b.boundary().end())) {
    throw Error(Errc::IncompatibleBoundary, "boundaries differ");
  }
  auto s = a.boundary();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (a.graph().adjacent(s[i], s[j]) != b.graph().adjacent(s[i], s[j])) {
        throw Error(Errc::IncompatibleBoundary, "boundary subgraphs differ");
      }
    }
  }
}

// Labels of N_X(V(B)) \ S for the S-block X containing the boundary block B.
LabelSet outside_neighbor_labels(const BoundariedGraph& a, const Labeling& l,
                                 const std::vector<VertexSet>& sblocks, const VertexSet& b) {
  LabelSet out = 0;
  for (const auto& x : sblocks) {
    if (!is_subset(b, x)) continue;
    for (Vertex w : x) {
      if (a.in_boundary(w)) continue;
      bool near = std::any_of(b.begin(), b.end(), [&](Vertex u) { return a.graph().adjacent(u, w); });
      if (near && l[idx(w)] >= 0) out |= LabelSet{1} << l[idx(w)];
    }
  }
  return out;
}

}  // namespace

bool blockwise_Q_compatible(const BoundariedGraph& a, const Labeling& la, const BoundariedGraph& b,
                            const Labeling& lb, const Pattern& q) {
  check_compatible(a, b);
  auto sa = s_blocks(a);
  auto sb = s_blocks(b);
  for (const auto& x : sa) {
    if (!partial_label_isomorphic(a.graph(), x, la, q)) return false;
  }
  for (const auto& x : sb) {
    if (!partial_label_isomorphic(b.graph(), x, lb, q)) return false;
  }
  for (const auto& block : biconnected_blocks(a.graph(), a.boundary()).blocks) {
    if (block.size() < 2) continue;
    LabelSet ha = outside_neighbor_labels(a, la, sa, block);
    LabelSet hb = outside_neighbor_labels(b, lb, sb, block);
    if (ha & hb) return false;
    if (q.neighbors(ha) & hb) return false;
  }
  return true;
}

}  // namespace bpd

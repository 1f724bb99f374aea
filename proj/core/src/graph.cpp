#include "bpd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bpd/error.hpp"

namespace bpd {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::ParseError: return "ParseError";
    case Errc::IncompatibleBoundary: return "IncompatibleBoundary";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NonChordalFamily: return "NonChordalFamily";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BadBucket: return "BadBucket";
    case Errc::NoCharacteristic: return "NoCharacteristic";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::BadSequence: return "BadSequence";
    case Errc::NotAnIS: return "NotAnIS";
    case Errc::NotAClique: return "NotAClique";
    case Errc::RangeError: return "RangeError";
  }
  return "Unknown";
}

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(Errc::InvalidInput, "negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::InvalidInput, "edge endpoint out of range: " + std::to_string(u) + " " +
                                          std::to_string(v));
    }
    if (u == v) throw Error(Errc::InvalidInput, "self-loop at " + std::to_string(u));
    g.adj_[idx(u)].push_back(v);
    g.adj_[idx(v)].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

std::size_t Graph::m() const {
  std::size_t total = 0;
  for (const auto& nb : adj_) total += nb.size();
  return total / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_[idx(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adj_[idx(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> pos(adj_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[idx(keep[i])] = static_cast<int>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : adj_[idx(keep[i])]) {
      int j = pos[idx(w)];
      if (j > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), j);
    }
  }
  return from_edges(static_cast<int>(keep.size()), es);
}

Graph Graph::without(std::span<const Vertex> removed) const {
  std::vector<char> gone(adj_.size(), 0);
  for (Vertex v : removed) gone[idx(v)] = 1;
  Graph g(n());
  for (Vertex u = 0; u < n(); ++u) {
    if (gone[idx(u)]) continue;
    for (Vertex w : adj_[idx(u)]) {
      if (!gone[idx(w)]) g.adj_[idx(u)].push_back(w);
    }
  }
  return g;
}

BoundariedGraph::BoundariedGraph(Graph g, VertexSet boundary)
    : BoundariedGraph(g, [&] {
        VertexSet all(static_cast<std::size_t>(g.n()));
        std::iota(all.begin(), all.end(), 0);
        return all;
      }(), std::move(boundary)) {}

BoundariedGraph::BoundariedGraph(Graph g, VertexSet vertices, VertexSet boundary)
    : graph_(std::move(g)), vertices_(std::move(vertices)), boundary_(std::move(boundary)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::sort(boundary_.begin(), boundary_.end());
  boundary_.erase(std::unique(boundary_.begin(), boundary_.end()), boundary_.end());
  for (Vertex v : vertices_) {
    if (v < 0 || v >= graph_.n()) throw Error(Errc::InvalidInput, "vertex outside graph");
  }
  if (!is_subset(boundary_, vertices_)) {
    throw Error(Errc::InvalidInput, "boundary is not a subset of the vertex set");
  }
  for (Vertex u = 0; u < graph_.n(); ++u) {
    if (set_contains(vertices_, u)) continue;
    if (graph_.degree(u) != 0) {
      throw Error(Errc::InvalidInput, "placeholder vertex " + std::to_string(u) + " has edges");
    }
  }
}

bool BoundariedGraph::in_boundary(Vertex v) const { return set_contains(boundary_, v); }
bool BoundariedGraph::contains(Vertex v) const { return set_contains(vertices_, v); }

std::vector<VertexSet> connected_components(const Graph& g) {
  VertexSet all(static_cast<std::size_t>(g.n()));
  std::iota(all.begin(), all.end(), 0);
  return connected_components(g, all);
}

std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> subset) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : subset) in[idx(v)] = 1;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  VertexSet order(subset.begin(), subset.end());
  std::sort(order.begin(), order.end());
  std::vector<VertexSet> comps;
  std::vector<Vertex> stack;
  for (Vertex s : order) {
    if (seen[idx(s)]) continue;
    VertexSet comp;
    stack.push_back(s);
    seen[idx(s)] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (in[idx(w)] && !seen[idx(w)]) {
          seen[idx(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

BlockDecomposition biconnected_blocks(const Graph& g) {
  VertexSet all(static_cast<std::size_t>(g.n()));
  std::iota(all.begin(), all.end(), 0);
  return biconnected_blocks(g, all);
}

BlockDecomposition biconnected_blocks(const Graph& g, std::span<const Vertex> subset) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<char> in(n, 0);
  for (Vertex v : subset) in[idx(v)] = 1;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> blocks;
  std::vector<int> block_count(n, 0);
  int timer = 0;

  VertexSet order(subset.begin(), subset.end());
  std::sort(order.begin(), order.end());
  for (Vertex root : order) {
    if (disc[idx(root)] != -1) continue;
    disc[idx(root)] = low[idx(root)] = timer++;
    bool has_edge = false;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex u = stack.back();
      auto nb = g.neighbors(u);
      if (next_edge[idx(u)] < nb.size()) {
        Vertex w = nb[next_edge[idx(u)]++];
        if (!in[idx(w)]) continue;
        has_edge = true;
        if (disc[idx(w)] == -1) {
          parent[idx(w)] = u;
          disc[idx(w)] = low[idx(w)] = timer++;
          edge_stack.emplace_back(u, w);
          stack.push_back(w);
        } else if (w != parent[idx(u)] && disc[idx(w)] < disc[idx(u)]) {
          edge_stack.emplace_back(u, w);
          low[idx(u)] = std::min(low[idx(u)], disc[idx(w)]);
        }
        continue;
      }
      stack.pop_back();
      Vertex p = parent[idx(u)];
      if (p == -1) continue;
      low[idx(p)] = std::min(low[idx(p)], low[idx(u)]);
      if (low[idx(u)] >= disc[idx(p)]) {
        VertexSet block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e.first == p && e.second == u) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        for (Vertex v : block) ++block_count[idx(v)];
        blocks.push_back(std::move(block));
      }
    }
    if (!has_edge) {
      blocks.push_back({root});
      ++block_count[idx(root)];
    }
  }
  std::sort(blocks.begin(), blocks.end());
  BlockDecomposition out;
  out.blocks = std::move(blocks);
  for (Vertex v : order) {
    if (block_count[idx(v)] >= 2) out.cut_vertices.push_back(v);
  }
  return out;
}

std::vector<Vertex> mcs_order(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> weight(n, 0);
  std::vector<char> done(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (done[idx(v)]) continue;
      if (best == -1 || weight[idx(v)] > weight[idx(best)]) best = v;
    }
    done[idx(best)] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!done[idx(w)]) ++weight[idx(w)];
    }
  }
  return order;
}

bool is_chordal(const Graph& g) {
  // The reverse of an MCS order is a perfect elimination ordering iff g is chordal.
  auto order = mcs_order(g);
  const auto n = order.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[idx(order[i])] = i;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    // Earlier-visited neighbours must form a clique; it suffices to check them against the
    // latest-visited one among them.
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v)) {
      if (pos[idx(w)] < i && (parent == -1 || pos[idx(w)] > pos[idx(parent)])) parent = w;
    }
    if (parent == -1) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w != parent && pos[idx(w)] < i && !g.adjacent(parent, w)) return false;
    }
  }
  return true;
}

BoundariedGraph sum_boundaried(const BoundariedGraph& a, const BoundariedGraph& b) {
  if (!std::ranges::equal(a.boundary(), b.boundary())) {
    throw Error(Errc::IncompatibleBoundary, "boundaries differ");
  }
  auto bnd = a.boundary();
  for (std::size_t i = 0; i < bnd.size(); ++i) {
    for (std::size_t j = i + 1; j < bnd.size(); ++j) {
      if (a.graph().adjacent(bnd[i], bnd[j]) != b.graph().adjacent(bnd[i], bnd[j])) {
        throw Error(Errc::IncompatibleBoundary, "boundary subgraphs differ at " +
                                                    std::to_string(bnd[i]) + "-" +
                                                    std::to_string(bnd[j]));
      }
    }
  }
  auto inner_a = set_difference(a.vertices(), bnd);
  auto inner_b = set_difference(b.vertices(), bnd);
  if (!set_intersection(inner_a, inner_b).empty()) {
    throw Error(Errc::IncompatibleBoundary, "non-boundary vertex sets overlap");
  }
  int n = std::max(a.graph().n(), b.graph().n());
  std::vector<Edge> es = a.graph().edges();
  auto eb = b.graph().edges();
  es.insert(es.end(), eb.begin(), eb.end());
  return BoundariedGraph(Graph::from_edges(n, es), set_union(a.vertices(), b.vertices()),
                         VertexSet(bnd.begin(), bnd.end()));
}

AuxPartition aux_partition(const BoundariedGraph& a) {
  AuxPartition out;
  out.boundary_components = connected_components(a.graph(), a.boundary());
  auto comps = connected_components(a.graph(), a.vertices());
  std::vector<int> comp_of(static_cast<std::size_t>(a.graph().n()), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) comp_of[idx(v)] = static_cast<int>(c);
  }
  std::vector<int> block_of;
  block_of.reserve(out.boundary_components.size());
  for (const auto& bc : out.boundary_components) block_of.push_back(comp_of[idx(bc.front())]);
  out.partition = Partition(block_of);
  return out;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(std::span<const Vertex> s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace bpd

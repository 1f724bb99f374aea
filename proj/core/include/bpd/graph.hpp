#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bpd/partition.hpp"

namespace bpd {

using Vertex = int;
// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  // Duplicate edges are collapsed; self-loops and out-of-range endpoints throw.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const { return static_cast<int>(adj_.size()); }
  std::size_t m() const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Subgraph induced by `keep` with vertices renumbered 0..|keep|-1 in the order given.
  Graph induced(std::span<const Vertex> keep) const;
  // Same vertex identifiers; every edge touching `removed` is dropped.
  Graph without(std::span<const Vertex> removed) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

// A graph together with its vertex set V and boundary S. Identifiers outside V are
// isolated placeholders; this lets two boundaried graphs share one identifier space.
class BoundariedGraph {
 public:
  BoundariedGraph(Graph g, VertexSet boundary);
  BoundariedGraph(Graph g, VertexSet vertices, VertexSet boundary);

  const Graph& graph() const { return graph_; }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Vertex> boundary() const { return boundary_; }
  bool in_boundary(Vertex v) const;
  bool contains(Vertex v) const;

 private:
  Graph graph_;
  VertexSet vertices_;
  VertexSet boundary_;
};

struct BlockDecomposition {
  // Canonical order: each block sorted, blocks sorted lexicographically.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
};

// Components as sorted vertex sets, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
// Components of the subgraph induced by `subset`.
std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> subset);

BlockDecomposition biconnected_blocks(const Graph& g);
// Blocks of the subgraph induced by `subset` (isolated subset vertices become singleton blocks).
BlockDecomposition biconnected_blocks(const Graph& g, std::span<const Vertex> subset);

bool is_chordal(const Graph& g);
// Maximum-cardinality search order (first visited first); ties go to the lowest identifier.
std::vector<Vertex> mcs_order(const Graph& g);

BoundariedGraph sum_boundaried(const BoundariedGraph& a, const BoundariedGraph& b);

struct AuxPartition {
  // Components of G[S], ordered by smallest vertex; these are the ground elements.
  std::vector<VertexSet> boundary_components;
  // Two ground elements share a part iff they lie in one component of G.
  Partition partition;
};

AuxPartition aux_partition(const BoundariedGraph& a);

// PACE `.gr`: header `p tw n m`, one edge per line, 1-based, `c` lines ignored.
Graph read_gr(std::istream& in);
Graph read_gr_file(const std::string& path);
void write_gr(std::ostream& out, const Graph& g);

// Set helpers over sorted vectors.
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
bool set_contains(std::span<const Vertex> s, Vertex v);
bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace bpd

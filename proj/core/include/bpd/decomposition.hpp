#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bpd/graph.hpp"

namespace bpd {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;

  int width() const;
};

struct TdReport {
  bool ok = true;
  // 0: the node graph is not a tree; 1..3: the violated decomposition condition.
  int condition = 0;
  std::string message;
  // Vertices (conditions 1 and 3) or edge endpoints (condition 2) that witness the failure.
  std::vector<Vertex> witness;
};

TdReport validate_td(const Graph& g, const TreeDecomposition& td);

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NodeKind kind = NodeKind::Leaf;
  Vertex vertex = -1;  // introduced or forgotten vertex
  std::vector<int> children;
  VertexSet bag;
};

// Nodes are stored children-first; the root is the last node and has an empty bag.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  int width() const;
  TreeDecomposition as_td() const;
};

// Checks node kinds, the empty leaf and root bags, and the underlying decomposition.
TdReport validate_nice(const Graph& g, const NiceTreeDecomposition& ntd);

NiceTreeDecomposition to_nice(const Graph& g, const TreeDecomposition& td);

// Decomposition from an elimination ordering (first element eliminated first).
TreeDecomposition td_from_elimination(const Graph& g, const std::vector<Vertex>& order);
std::vector<Vertex> min_fill_order(const Graph& g);
TreeDecomposition heuristic_td(const Graph& g);

inline constexpr int kExactTdDefaultLimit = 14;
TreeDecomposition exact_td_small(const Graph& g, int limit = kExactTdDefaultLimit);

// PACE `.td`: `s td <bags> <width+1> <n>`, `b i v...` bag lines, then tree edges; 1-based.
TreeDecomposition read_td(std::istream& in);
TreeDecomposition read_td_file(const std::string& path);
void write_td(std::ostream& out, const TreeDecomposition& td, int n);

}  // namespace bpd

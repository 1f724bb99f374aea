#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bpd/decomposition.hpp"
#include "bpd/graph.hpp"
#include "bpd/instance.hpp"

namespace bpd {

// (a, b) -> 3t(a-1) + 3b for a, b in [t]. Throws RangeError otherwise.
int phi(int a, int b, int t);

// The chain G(X) for X = <x_0, ..., x_z>.
struct GadgetChain {
  std::vector<int> x;
  Graph graph;
  std::vector<std::vector<Vertex>> w;  // w[q][r] is w_{q,r+1}
  std::vector<Vertex> u;               // u[q-1] is u_q
  VertexSet b;                         // w_{0,1..3}
  VertexSet d;                         // w_{z,1..3}
};

// Throws BadSequence unless z >= 1, x_0 >= 3 and consecutive gaps are at least 3.
GadgetChain gadget_chain(std::span<const int> x);

// Path decomposition of a chain with bags of at most four vertices, in path order.
std::vector<VertexSet> chain_path_bags(const GadgetChain& chain);

// A k-by-k grid graph. Cells are (row, column), both 0-based.
struct GridISInstance {
  using Cell = std::pair<int, int>;
  int k = 0;
  std::vector<std::pair<Cell, Cell>> edges;

  // Adds every same-row and same-column pair, orders each edge and sorts the list.
  void normalize();
};

// One column per row, all distinct, no edge between chosen cells (after normalize()).
bool is_permutation_is(const GridISInstance& grid, std::span<const int> columns);

struct GeneratedInstance {
  Instance instance;
  TreeDecomposition decomposition;  // a path, bags in order
  std::optional<VertexSet> planted;
  std::int64_t vertices_formula = 0;
  std::int64_t budget_formula = 0;
  std::int64_t bag_bound = 0;    // largest bag size allowed by the construction
  std::int64_t width_bound = 0;  // bag_bound - 1 unless stated otherwise
};

// Fixed-d construction from a grid instance (normalized internally). The variant picks
// components (no selector path) or blocks (column selectors joined into paths). `planted`
// gives the chosen column of each row; throws NotAnIS if it is not a permutation
// independent set, InvalidInput if d < 4 or k < 1.
GeneratedInstance gen_fixed_d(GridISInstance grid, int d, Mode variant,
                              const std::optional<std::vector<int>>& planted = std::nullopt);

// k color classes of t vertices each; vertex a of class i is i * t + a (both 0-based).
struct ColoredGraph {
  int k = 0;
  int t = 0;
  Graph graph;
};

// Throws InvalidInput on intra-class edges, unequal inter-class edge counts, or bad sizes.
void validate_colored(const ColoredGraph& g);

// Seeded instance with `p` edges between each pair of classes. When `planted` is given
// (one 0-based index per class), those vertices form a multicolored clique.
ColoredGraph random_colored_graph(int k, int t, int p, std::uint64_t seed,
                                  const std::optional<std::vector<int>>& planted = std::nullopt);

// Unbounded-d construction for multicolored clique. `planted` holds one 0-based index per
// class; throws NotAClique if those vertices do not form a clique.
GeneratedInstance gen_unbounded_d(const ColoredGraph& g,
                                  const std::optional<std::vector<int>>& planted = std::nullopt);

// Subgraph-isomorphism variant: host on t vertices, pattern on k vertices. `planted` maps
// pattern vertices to distinct host vertices; throws NotAClique if an edge is not preserved.
GeneratedInstance gen_unbounded_d_si(const Graph& host, const Graph& pattern,
                                     const std::optional<std::vector<int>>& planted = std::nullopt);

}  // namespace bpd

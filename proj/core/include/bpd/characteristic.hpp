#pragma once

#include <compare>
#include <span>
#include <vector>

#include "bpd/graph.hpp"
#include "bpd/labeling.hpp"

namespace bpd {

// (g, h) over the non-trivial blocks of G[S]. g holds indices into a PatternUniverse.
struct Characteristic {
  std::vector<VertexSet> blocks;  // canonical block order
  std::vector<int> g;
  std::vector<LabelSet> h;

  friend auto operator<=>(const Characteristic&, const Characteristic&) = default;
  friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

// Non-trivial blocks of G[S] in canonical order.
std::vector<VertexSet> boundary_blocks(const Graph& g, std::span<const Vertex> boundary);

// Direct check of the label-isomorphism, coincidence, neighborhood and completeness conditions.
bool is_characteristic(const BoundariedGraph& a, const Labeling& l, const PatternUniverse& ud,
                       const Characteristic& c);

// Every admissible (g, h), sorted. Throws NoCharacteristic when there is none.
std::vector<Characteristic> compute_characteristic(const BoundariedGraph& a, const Labeling& l,
                                                   const PatternUniverse& ud);

// Each block's S-block in `sum` is label-isomorphic to its g.
bool respects_check(const Graph& sum, const Labeling& l, std::span<const Vertex> boundary,
                    const Characteristic& c, const PatternUniverse& ud);

// All restrictions of `parent` (over blocks of the bag with v) to `child_blocks` (the bag
// without v). `l` must label v.
std::vector<Characteristic> restriction_of(const Characteristic& parent,
                                           const std::vector<VertexSet>& child_blocks, Vertex v,
                                           const Labeling& l, const PatternUniverse& ud);

struct Extension {
  int label_v = -1;
  Characteristic child;

  friend auto operator<=>(const Extension&, const Extension&) = default;
  friend bool operator==(const Extension&, const Extension&) = default;
};

// All valid (L'(v), g', h') over the blocks of g[child_bag] extending `parent`, which lives on
// child_bag minus v. `l` labels child_bag minus v.
std::vector<Extension> extensions_of(const Graph& g, std::span<const Vertex> child_bag, Vertex v,
                                     const Characteristic& parent, const Labeling& l,
                                     const PatternUniverse& ud);

// Per block: h1, h2 disjoint, h = h1 | h2, and no h1 label adjacent to an h2 label in g(B).
// Throws DomainMismatch if the block domains or g components differ.
bool join_compatible(const Characteristic& c1, const Characteristic& c2, std::span<const LabelSet> h,
                     const PatternUniverse& ud);

}  // namespace bpd

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bpd/graph.hpp"

namespace bpd {

enum class FamilyId { K1K2, Cliques, Chordal, Cycles, All };

// A built-in block-hereditary graph class.
class PFamily {
 public:
  constexpr explicit PFamily(FamilyId id = FamilyId::Chordal) : id_(id) {}
  // Accepts k1k2, cliques, chordal, cycles, all.
  static PFamily parse(std::string_view name);

  FamilyId id() const { return id_; }
  std::string_view name() const;
  bool block_hereditary() const { return true; }
  bool chordal_only() const;
  // Membership of a whole graph (used on blocks and on components).
  bool contains(const Graph& g) const;

  friend bool operator==(PFamily, PFamily) = default;

 private:
  FamilyId id_;
};

inline constexpr int kMaxLabels = 16;
// Bit l set means label l (0-based) is present.
using LabelSet = std::uint32_t;

// A labeled graph whose vertices are its labels.
struct Pattern {
  LabelSet labels = 0;
  std::array<LabelSet, kMaxLabels> adj{};

  int size() const;
  bool has(int label) const { return (labels >> label) & 1u; }
  bool adjacent(int a, int b) const { return (adj[static_cast<std::size_t>(a)] >> b) & 1u; }
  // Labels adjacent to some label in `s`.
  LabelSet neighbors(LabelSet s) const;
  // Vertex i of the result is the i-th smallest label.
  Graph to_graph() const;
  std::string to_string() const;  // 1-based, e.g. "{1,2,3: 1-2 1-3 2-3}"

  friend auto operator<=>(const Pattern&, const Pattern&) = default;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Patterns with vertex set within [d]. Block universes hold biconnected members with at
// least two vertices; component universes hold connected members of any size.
struct PatternUniverse {
  int d = 0;
  PFamily family;
  bool components = false;
  std::vector<Pattern> patterns;

  // Index of `p` or -1.
  int find(const Pattern& p) const;
};

inline constexpr int kDefaultUdCap = 6;
// The cap in force: BPD_UD_CAP if set to a positive integer, else kDefaultUdCap.
int ud_cap();

// Errors: CapExceeded if d exceeds the cap; NonChordalFamily if a member is not chordal.
PatternUniverse enumerate_Ud(int d, PFamily family);
PatternUniverse enumerate_Ud_components(int d, PFamily family);

// labels[v] in 0..d-1, or -1 for vertices without a label.
using Labeling = std::vector<int>;

bool is_block_labeling(const Graph& g, const Labeling& l);

// The subgraph induced by `vertices` maps injectively into q by label and is isomorphic to
// the subgraph of q induced by the labels it uses.
bool partial_label_isomorphic(const Graph& g, std::span<const Vertex> vertices, const Labeling& l,
                              const Pattern& q);
bool partial_label_isomorphic(const Graph& h, const Labeling& l, const Pattern& q);
// Partial label-isomorphism that uses every label of q.
bool label_isomorphic(const Graph& g, std::span<const Vertex> vertices, const Labeling& l,
                      const Pattern& q);

// Labeled pattern realized by `vertices` (labels must be distinct and defined).
Pattern pattern_of(const Graph& g, std::span<const Vertex> vertices, const Labeling& l);

// Blocks of G that contain an edge of G[S], in canonical block order.
std::vector<VertexSet> s_blocks(const BoundariedGraph& a);

// Labelings are indexed by vertex in the shared identifier space. Throws IncompatibleBoundary.
bool blockwise_Q_compatible(const BoundariedGraph& a, const Labeling& la, const BoundariedGraph& b,
                            const Labeling& lb, const Pattern& q);

}  // namespace bpd

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bpd/decomposition.hpp"
#include "bpd/instance.hpp"
#include "bpd/partition.hpp"

namespace bpd {

namespace dp {

// One S-block (block mode) or one component (component mode) of the partial solution that
// meets the bag. `units` are indices into the bag's unit list: the non-trivial blocks of
// G[B_t \ X] in block mode, the components of G[B_t \ X] in component mode. The open members
// are the vertices of those units. Closed members are forgotten, or bag vertices that left every
// unit of the group; they gain no further neighbors in it and are stored up to relabeling:
// closed_adj[i] is a mask over closed members, open_adj[i] a mask over the sorted open members.
struct Group {
  std::vector<int> units;
  std::vector<std::uint32_t> closed_adj;
  std::vector<std::uint32_t> open_adj;

  friend auto operator<=>(const Group&, const Group&) = default;
  friend bool operator==(const Group&, const Group&) = default;
};

struct Key {
  std::uint32_t deleted = 0;  // X as a mask over bag positions
  int budget = 0;             // deletions among forgotten vertices
  std::vector<Group> groups;  // sorted by first unit; the units are partitioned

  friend auto operator<=>(const Key&, const Key&) = default;
  friend bool operator==(const Key&, const Key&) = default;
};

struct Entry {
  Partition partition;  // over the components of G[B_t \ X]
  VertexSet witness;    // forgotten deleted vertices (witness mode only)
};

using Table = std::map<Key, std::vector<Entry>>;

// Per (node, X) view of the bag.
struct BagView {
  VertexSet kept;
  std::vector<VertexSet> comps;
  std::vector<VertexSet> units;
};

class Engine {
 public:
  Engine(const Instance& inst, const NiceTreeDecomposition& ntd, SolveOptions options);

  Table leaf() const;
  Table intro_step(int node, const Table& child);
  Table forget_step(int node, const Table& child);
  Table join_step(int node, const Table& left, const Table& right);

  SolveResult run();

  const BagView& view(int node, std::uint32_t deleted);

 private:
  struct Piece {
    const Group* group;
    std::vector<int> units;  // in the target view
    VertexSet open;
  };

  // Groups after uniting every unit set linked through a piece; nullopt if one is infeasible.
  std::optional<std::vector<Group>> merge(const BagView& view, const std::vector<Piece>& pieces) const;
  bool feasible(const VertexSet& open, const Group& g) const;
  void reduce(int node, Table& table);

  const Instance& inst_;
  const NiceTreeDecomposition& ntd_;
  SolveOptions options_;
  SolveStats stats_;
  std::vector<std::unordered_map<std::uint32_t, BagView>> views_;
};

// Canonical order of a closed part: the relabeling with the smallest (open_adj, closed_adj).
void canonicalize(Group& g);

}  // namespace dp

// Throws NonChordalFamily unless every family member on at most d vertices is chordal, and
// CapExceeded if d exceeds ud_cap().
void check_dp_preconditions(const Instance& inst);

// Requires inst.mode == Mode::Block. Errors: as check_dp_preconditions, InvalidInput.
SolveResult solve_block(const Instance& inst, const NiceTreeDecomposition& ntd,
                        const SolveOptions& options = {});

}  // namespace bpd

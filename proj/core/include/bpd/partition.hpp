#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace bpd {

// Partition of {0..m-1}. Stored as a restricted growth string: parts are numbered in
// order of their smallest element, so equal partitions have equal representations.
class Partition {
 public:
  Partition() = default;
  // `block_of[e]` is any identifier of the part containing e.
  explicit Partition(std::span<const int> block_of);

  static Partition from_parts(int m, const std::vector<std::vector<int>>& parts);
  static Partition singletons(int m);
  static Partition whole(int m);

  int ground_size() const { return static_cast<int>(rgs_.size()); }
  int num_parts() const { return parts_; }
  int part_of(int e) const { return rgs_[static_cast<std::size_t>(e)]; }
  std::span<const int> rgs() const { return rgs_; }
  // Parts in canonical order, each sorted.
  std::vector<std::vector<int>> parts() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> rgs_;
  int parts_ = 0;
};

// Acyclicity of the bipartite incidence graph between ground elements and the parts of
// every listed partition (parts of different partitions are distinct nodes).
bool inc_is_forest(int m, std::span<const Partition> xs);
bool inc_is_connected(int m, std::span<const Partition> xs);

// Finest common coarsening.
Partition uplus(const Partition& x, const Partition& y);

// Every partition obtained by merging a sub-collection of parts of x into one part,
// x itself first, then by increasing bitmask of the merged parts.
std::vector<Partition> one_coarsenings(const Partition& x);

// All partitions of {0..m-1} in restricted-growth-string lexicographic order.
std::vector<Partition> all_partitions(int m);
// All partitions of {0..m-1} with exactly `parts` parts.
std::vector<Partition> all_partitions_with_parts(int m, int parts);

}  // namespace bpd

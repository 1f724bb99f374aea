#include "bpd/partition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "bpd/error.hpp"

namespace bpd {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Partition::Partition(std::span<const int> block_of) {
  rgs_.reserve(block_of.size());
  std::vector<int> seen;
  for (int id : block_of) {
    auto it = std::find(seen.begin(), seen.end(), id);
    if (it == seen.end()) {
      rgs_.push_back(static_cast<int>(seen.size()));
      seen.push_back(id);
    } else {
      rgs_.push_back(static_cast<int>(it - seen.begin()));
    }
  }
  parts_ = static_cast<int>(seen.size());
}

Partition Partition::from_parts(int m, const std::vector<std::vector<int>>& parts) {
  std::vector<int> block_of(static_cast<std::size_t>(m), -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw Error(Errc::InvalidInput, "empty part");
    for (int e : parts[p]) {
      if (e < 0 || e >= m) throw Error(Errc::InvalidInput, "element out of range");
      if (block_of[static_cast<std::size_t>(e)] != -1) {
        throw Error(Errc::InvalidInput, "element " + std::to_string(e) + " in two parts");
      }
      block_of[static_cast<std::size_t>(e)] = static_cast<int>(p);
    }
  }
  if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end()) {
    throw Error(Errc::InvalidInput, "parts do not cover the ground set");
  }
  return Partition(block_of);
}

Partition Partition::singletons(int m) {
  std::vector<int> ids(static_cast<std::size_t>(m));
  std::iota(ids.begin(), ids.end(), 0);
  return Partition(ids);
}

Partition Partition::whole(int m) {
  std::vector<int> ids(static_cast<std::size_t>(m), 0);
  return Partition(ids);
}

std::vector<std::vector<int>> Partition::parts() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(parts_));
  for (std::size_t e = 0; e < rgs_.size(); ++e) {
    out[static_cast<std::size_t>(rgs_[e])].push_back(static_cast<int>(e));
  }
  return out;
}

bool inc_is_forest(int m, std::span<const Partition> xs) {
  std::size_t nodes = static_cast<std::size_t>(m);
  for (const auto& x : xs) nodes += static_cast<std::size_t>(x.num_parts());
  UnionFind uf(nodes);
  std::size_t offset = static_cast<std::size_t>(m);
  for (const auto& x : xs) {
    if (x.ground_size() != m) throw Error(Errc::InvalidInput, "ground set mismatch");
    for (int e = 0; e < m; ++e) {
      if (!uf.unite(static_cast<std::size_t>(e), offset + static_cast<std::size_t>(x.part_of(e)))) {
        return false;
      }
    }
    offset += static_cast<std::size_t>(x.num_parts());
  }
  return true;
}

bool inc_is_connected(int m, std::span<const Partition> xs) {
  std::size_t nodes = static_cast<std::size_t>(m);
  for (const auto& x : xs) nodes += static_cast<std::size_t>(x.num_parts());
  if (nodes == 0) return true;
  UnionFind uf(nodes);
  std::size_t offset = static_cast<std::size_t>(m);
  for (const auto& x : xs) {
    for (int e = 0; e < m; ++e) {
      uf.unite(static_cast<std::size_t>(e), offset + static_cast<std::size_t>(x.part_of(e)));
    }
    offset += static_cast<std::size_t>(x.num_parts());
  }
  for (std::size_t i = 1; i < nodes; ++i) {
    if (uf.find(i) != uf.find(0)) return false;
  }
  return true;
}

Partition uplus(const Partition& x, const Partition& y) {
  if (x.ground_size() != y.ground_size()) throw Error(Errc::InvalidInput, "ground set mismatch");
  const auto m = static_cast<std::size_t>(x.ground_size());
  UnionFind uf(m);
  std::vector<int> first_x(static_cast<std::size_t>(x.num_parts()), -1);
  std::vector<int> first_y(static_cast<std::size_t>(y.num_parts()), -1);
  for (std::size_t e = 0; e < m; ++e) {
    auto& fx = first_x[static_cast<std::size_t>(x.part_of(static_cast<int>(e)))];
    if (fx == -1) fx = static_cast<int>(e); else uf.unite(static_cast<std::size_t>(fx), e);
    auto& fy = first_y[static_cast<std::size_t>(y.part_of(static_cast<int>(e)))];
    if (fy == -1) fy = static_cast<int>(e); else uf.unite(static_cast<std::size_t>(fy), e);
  }
  std::vector<int> block_of(m);
  for (std::size_t e = 0; e < m; ++e) block_of[e] = static_cast<int>(uf.find(e));
  return Partition(block_of);
}

std::vector<Partition> one_coarsenings(const Partition& x) {
  const int p = x.num_parts();
  if (p > 20) throw Error(Errc::TooLarge, "too many parts for 1-coarsening enumeration");
  std::vector<Partition> out{x};
  std::vector<int> block_of(x.rgs().begin(), x.rgs().end());
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    if (std::popcount(mask) < 2) continue;
    int target = std::countr_zero(mask);
    for (std::size_t e = 0; e < block_of.size(); ++e) {
      int part = x.part_of(static_cast<int>(e));
      block_of[e] = (mask >> part) & 1u ? target : part;
    }
    out.emplace_back(block_of);
  }
  return out;
}

std::vector<Partition> all_partitions(int m) {
  std::vector<Partition> out;
  if (m < 0) return out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> rgs(static_cast<std::size_t>(m), 0);
  std::vector<int> maxp(static_cast<std::size_t>(m), 0);
  while (true) {
    out.emplace_back(rgs);
    int i = m - 1;
    while (i > 0 && rgs[static_cast<std::size_t>(i)] > maxp[static_cast<std::size_t>(i - 1)]) --i;
    if (i == 0) break;
    ++rgs[static_cast<std::size_t>(i)];
    maxp[static_cast<std::size_t>(i)] =
        std::max(maxp[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < m; ++j) {
      rgs[static_cast<std::size_t>(j)] = 0;
      maxp[static_cast<std::size_t>(j)] = maxp[static_cast<std::size_t>(j - 1)];
    }
  }
  return out;
}

std::vector<Partition> all_partitions_with_parts(int m, int parts) {
  std::vector<Partition> out;
  for (auto& p : all_partitions(m)) {
    if (p.num_parts() == parts) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace bpd

#include "bpd/repset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "bpd/error.hpp"

namespace bpd {

namespace {

using Row = std::vector<std::uint64_t>;

void set_bit(Row& r, std::size_t c) { r[c / 64] |= std::uint64_t{1} << (c % 64); }

// Incremental XOR basis keyed by the highest set bit of each stored row.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t columns) : columns_(columns), pivots_(columns) {}

  // Returns true (and stores the row) when it is independent of the rows seen so far.
  bool insert(Row r) {
    for (std::size_t c = columns_; c-- > 0;) {
      if (!((r[c / 64] >> (c % 64)) & 1u)) continue;
      auto& p = pivots_[c];
      if (p.empty()) {
        p = std::move(r);
        return true;
      }
      for (std::size_t w = 0; w < r.size(); ++w) r[w] ^= p[w];
    }
    return false;
  }

 private:
  std::size_t columns_;
  std::vector<Row> pivots_;
};

void check_bucket(int m, std::span<const Partition> bucket, int j) {
  if (bucket.empty()) return;
  const int i = bucket.front().num_parts();
  for (const auto& p : bucket) {
    if (p.ground_size() != m) throw Error(Errc::BadBucket, "ground set mismatch in bucket");
    if (p.num_parts() != i) throw Error(Errc::BadBucket, "part counts disagree within bucket");
  }
  if (i + j != m + 1) {
    throw Error(Errc::BadBucket, "bucket with " + std::to_string(i) + " parts cannot pair with " +
                                     std::to_string(j) + "-part partitions on " +
                                     std::to_string(m) + " elements");
  }
}

}  // namespace

Row cut_matrix_row(const Partition& p) {
  const int m = p.ground_size();
  if (m < 1) return Row{1};
  if (m > 24) throw Error(Errc::TooLarge, "cut matrix too wide");
  const std::size_t columns = std::size_t{1} << (m - 1);
  Row row((columns + 63) / 64, 0);
  // A cut is consistent with p iff it is a union of parts; enumerate unions containing the
  // part of element 0 directly.
  auto parts = p.parts();
  const std::size_t others = parts.size() - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << others); ++mask) {
    std::size_t column = 0;
    for (int e : parts[0]) {
      if (e > 0) column |= std::size_t{1} << (e - 1);
    }
    for (std::size_t q = 0; q < others; ++q) {
      if (!((mask >> q) & 1u)) continue;
      for (int e : parts[q + 1]) column |= std::size_t{1} << (e - 1);
    }
    set_bit(row, column);
  }
  return row;
}

std::vector<Partition> reduce_connected(int m, std::span<const Partition> bucket, int j) {
  check_bucket(m, bucket, j);
  std::vector<Partition> out;
  if (bucket.empty()) return out;
  if (m <= 1) {
    out.push_back(bucket.front());
    return out;
  }
  Gf2Basis basis(std::size_t{1} << (m - 1));
  for (const auto& p : bucket) {
    if (basis.insert(cut_matrix_row(p))) out.push_back(p);
  }
  return out;
}

std::vector<Partition> reduce_connected_exhaustive(int m, std::span<const Partition> bucket, int j) {
  check_bucket(m, bucket, j);
  if (m > 7) throw Error(Errc::TooLarge, "exhaustive engine limited to 7 elements");
  std::vector<Partition> out;
  if (bucket.empty()) return out;
  auto columns = all_partitions_with_parts(m, j);
  Gf2Basis basis(columns.size());
  for (const auto& p : bucket) {
    Row row((columns.size() + 63) / 64, 0);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const Partition pair[] = {p, columns[c]};
      if (inc_is_connected(m, pair)) set_bit(row, c);
    }
    if (basis.insert(std::move(row))) out.push_back(p);
  }
  return out;
}

std::vector<Partition> rep_partitions(int m, std::span<const Partition> family) {
  std::vector<Partition> originals;
  {
    std::set<Partition> seen;
    for (const auto& p : family) {
      if (p.ground_size() != m) throw Error(Errc::InvalidInput, "ground set mismatch");
      if (seen.insert(p).second) originals.push_back(p);
    }
  }
  if (m == 0 || originals.size() <= 1) return originals;

  // Step 1: 1-coarsenings, each remembering the first original it came from.
  std::map<Partition, std::size_t> origin;
  std::vector<std::vector<Partition>> buckets(static_cast<std::size_t>(m) + 1);
  for (std::size_t k = 0; k < originals.size(); ++k) {
    for (auto& c : one_coarsenings(originals[k])) {
      auto [it, fresh] = origin.emplace(c, k);
      // Step 2: bucket by number of parts.
      if (fresh) buckets[static_cast<std::size_t>(it->first.num_parts())].push_back(it->first);
    }
  }
  // Step 3: reduce each bucket against partitions with j = m + 1 - i parts.
  std::vector<char> keep(originals.size(), 0);
  for (int i = 1; i <= m; ++i) {
    for (const auto& c : reduce_connected(m, buckets[static_cast<std::size_t>(i)], m + 1 - i)) {
      // Step 4: map back to the original partition.
      keep[origin.at(c)] = 1;
    }
  }
  std::vector<Partition> out;
  for (std::size_t k = 0; k < originals.size(); ++k) {
    if (keep[k]) out.push_back(originals[k]);
  }
  return out;
}

bool verify_representative(int m, std::span<const Partition> family, std::span<const Partition> sub) {
  if (m > 7) throw Error(Errc::TooLarge, "verify_representative limited to 7 elements");
  for (const auto& y : all_partitions(m)) {
    bool needed = std::any_of(family.begin(), family.end(), [&](const Partition& x) {
      const Partition pair[] = {x, y};
      return inc_is_forest(m, pair);
    });
    if (!needed) continue;
    bool covered = std::any_of(sub.begin(), sub.end(), [&](const Partition& x) {
      const Partition pair[] = {x, y};
      return inc_is_forest(m, pair);
    });
    if (!covered) return false;
  }
  return true;
}

}  // namespace bpd

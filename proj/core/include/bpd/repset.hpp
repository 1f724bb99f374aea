#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bpd/partition.hpp"

namespace bpd {

// Row of the cut matrix over GF(2). Columns are the 2^(m-1) subsets of {0..m-1} that contain
// element 0, ordered by the numeric value of their characteristic vector; an entry is 1 when
// every part of p lies entirely inside or entirely outside the cut.
std::vector<std::uint64_t> cut_matrix_row(const Partition& p);

// Keeps a subfamily of `bucket` (all members with i parts, i + j = m + 1) such that every
// j-part partition connected-joined by some member is connected-joined by a kept member.
// Gaussian elimination on the cut matrix; first-seen independent rows are kept.
std::vector<Partition> reduce_connected(int m, std::span<const Partition> bucket, int j);

// Same contract, with columns the j-part partitions themselves. For differential testing.
std::vector<Partition> reduce_connected_exhaustive(int m, std::span<const Partition> bucket, int j);

// Representative subfamily (acyclicity against every partition) of size at most m * 2^(m-1).
std::vector<Partition> rep_partitions(int m, std::span<const Partition> family);

// Exhaustive check of the representative-set definition; m <= 7.
bool verify_representative(int m, std::span<const Partition> family, std::span<const Partition> sub);

}  // namespace bpd

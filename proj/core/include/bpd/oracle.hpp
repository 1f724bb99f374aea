#pragma once

#include <cstdint>
#include <span>

#include "bpd/instance.hpp"

namespace bpd {

// Every block (or component) of g - s has at most d vertices and belongs to the family.
bool verify_solution(const Graph& g, std::span<const Vertex> s, int d, PFamily family, Mode mode);

struct OracleResult {
  bool feasible = false;  // some solution of size <= k exists
  int min_size = -1;      // smallest solution size when feasible
  VertexSet solution;     // lexicographically first smallest solution
};

inline constexpr std::uint64_t kOracleSubsetBudget = 50'000'000;

// Exhaustive search by increasing size. Throws TooLarge if more than `budget` subsets
// could be examined.
OracleResult brute_force_solve(const Instance& inst, std::uint64_t budget = kOracleSubsetBudget);

}  // namespace bpd

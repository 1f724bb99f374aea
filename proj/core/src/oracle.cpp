#include "bpd/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bpd/error.hpp"

namespace bpd {

Mode parse_mode(std::string_view name) {
  if (name == "block") return Mode::Block;
  if (name == "component") return Mode::Component;
  throw Error(Errc::InvalidInput, "unknown mode '" + std::string(name) + "'");
}

std::string_view to_string(Mode mode) { return mode == Mode::Block ? "block" : "component"; }

bool verify_solution(const Graph& g, std::span<const Vertex> s, int d, PFamily family, Mode mode) {
  std::vector<char> removed(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.n()) throw Error(Errc::InvalidInput, "deletion set vertex out of range");
    removed[static_cast<std::size_t>(v)] = 1;
  }
  VertexSet keep;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!removed[static_cast<std::size_t>(v)]) keep.push_back(v);
  }
  Graph rest = g.induced(keep);
  auto pieces = mode == Mode::Block ? biconnected_blocks(rest).blocks : connected_components(rest);
  return std::all_of(pieces.begin(), pieces.end(), [&](const VertexSet& piece) {
    return static_cast<int>(piece.size()) <= d && family.contains(rest.induced(piece));
  });
}

OracleResult brute_force_solve(const Instance& inst, std::uint64_t budget) {
  const int n = inst.graph.n();
  const int kmax = std::clamp(inst.k, 0, n);
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (int j = 0; j <= kmax; ++j) {
    if (j > 0) binom = binom * static_cast<std::uint64_t>(n - j + 1) / static_cast<std::uint64_t>(j);
    total += binom;
    if (total > budget) {
      throw Error(Errc::TooLarge, "oracle would examine more than " + std::to_string(budget) + " subsets");
    }
  }
  OracleResult out;
  for (int size = 0; size <= kmax; ++size) {
    std::vector<Vertex> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (verify_solution(inst.graph, pick, inst.d, inst.family, inst.mode)) {
        out.feasible = true;
        out.min_size = size;
        out.solution = pick;
        return out;
      }
      // Next combination in lexicographic order.
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace bpd

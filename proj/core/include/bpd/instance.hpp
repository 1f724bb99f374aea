#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "bpd/graph.hpp"
#include "bpd/labeling.hpp"

namespace bpd {

enum class Mode { Block, Component };

// Accepts "block" and "component".
Mode parse_mode(std::string_view name);
std::string_view to_string(Mode mode);

struct Instance {
  Graph graph;
  int d = 2;
  int k = 0;
  PFamily family;
  Mode mode = Mode::Block;
};

struct SolveOptions {
  // Keep one partial solution per retained partition and report a deletion set.
  bool witness = false;
};

struct SolveStats {
  std::size_t nodes = 0;
  std::size_t states = 0;       // table keys summed over all nodes
  std::size_t retained = 0;     // partitions summed over all nodes
  std::size_t max_family = 0;   // largest family after reduction
  bool within_rep_bound = true; // every family met the representative-set size bound
  int width = -1;
  double seconds = 0.0;
};

struct SolveResult {
  bool yes = false;
  std::optional<VertexSet> witness;
  SolveStats stats;
};

}  // namespace bpd

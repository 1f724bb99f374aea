#pragma once

#include <optional>

#include "bpd/decomposition.hpp"
#include "bpd/instance.hpp"

namespace bpd {

// Decomposition used when none is supplied: exact for small graphs, min-fill otherwise.
TreeDecomposition default_td(const Graph& g);

// Dispatches on inst.mode. A supplied decomposition is validated first (InvalidInput).
// In witness mode the reported deletion set is re-checked against the oracle verifier.
SolveResult solve(const Instance& inst, const std::optional<TreeDecomposition>& td = std::nullopt,
                  const SolveOptions& options = {});

}  // namespace bpd

#include "bpd/solve.hpp"

#include <stdexcept>

#include "bpd/dp_block.hpp"
#include "bpd/dp_component.hpp"
#include "bpd/error.hpp"
#include "bpd/oracle.hpp"

namespace bpd {

TreeDecomposition default_td(const Graph& g) {
  return g.n() <= kExactTdDefaultLimit ? exact_td_small(g) : heuristic_td(g);
}

SolveResult solve(const Instance& inst, const std::optional<TreeDecomposition>& td, const SolveOptions& options) {
  if (inst.k < 0) throw Error(Errc::InvalidInput, "k must be non-negative");
  TreeDecomposition base = td ? *td : default_td(inst.graph);
  if (td) {
    auto report = validate_td(inst.graph, base);
    if (!report.ok) throw Error(Errc::InvalidInput, "invalid tree decomposition: " + report.message);
  }
  const auto ntd = to_nice(inst.graph, base);
  auto result = inst.mode == Mode::Block ? solve_block(inst, ntd, options) : solve_component(inst, ntd, options);
  if (result.witness) {
    const auto& s = *result.witness;
    if (static_cast<int>(s.size()) > inst.k || !verify_solution(inst.graph, s, inst.d, inst.family, inst.mode)) {
      throw std::logic_error("dynamic program produced an invalid deletion set");
    }
  }
  return result;
}

}  // namespace bpd

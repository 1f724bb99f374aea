#pragma once

#include <compare>
#include <vector>

#include "bpd/decomposition.hpp"
#include "bpd/graph.hpp"
#include "bpd/instance.hpp"
#include "bpd/labeling.hpp"

namespace bpd {

// (g, h) over the components of G[S]. g holds indices into a component PatternUniverse.
struct ComponentCharacteristic {
  std::vector<VertexSet> comps;  // components of G[S], ordered by smallest vertex
  std::vector<int> g;
  std::vector<LabelSet> h;

  friend auto operator<=>(const ComponentCharacteristic&, const ComponentCharacteristic&) = default;
  friend bool operator==(const ComponentCharacteristic&, const ComponentCharacteristic&) = default;
};

// Every admissible (g, h), sorted. `ud` must be a component universe. Throws NoCharacteristic
// when there is none.
std::vector<ComponentCharacteristic> compute_component_characteristic(const BoundariedGraph& a,
                                                                      const Labeling& l,
                                                                      const PatternUniverse& ud);

// Requires inst.mode == Mode::Component. Errors: NonChordalFamily, CapExceeded, InvalidInput.
SolveResult solve_component(const Instance& inst, const NiceTreeDecomposition& ntd,
                            const SolveOptions& options = {});

}  // namespace bpd

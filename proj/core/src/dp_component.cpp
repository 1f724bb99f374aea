#include "bpd/dp_component.hpp"

#include <algorithm>

#include "bpd/dp_block.hpp"
#include "bpd/error.hpp"

namespace bpd {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

}  // namespace

std::vector<ComponentCharacteristic> compute_component_characteristic(const BoundariedGraph& a,
                                                                      const Labeling& l,
                                                                      const PatternUniverse& ud) {
  if (!ud.components) throw Error(Errc::InvalidInput, "a component pattern universe is required");
  const Graph& g = a.graph();
  auto comps = connected_components(g, a.boundary());
  auto hs = connected_components(g, a.vertices());

  // For each component of G that meets S: its admissible patterns and the S-components inside.
  std::vector<std::vector<int>> options;
  std::vector<int> owner(comps.size(), -1);
  for (const auto& h : hs) {
    std::vector<int> inside;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (set_contains(h, comps[c].front())) inside.push_back(static_cast<int>(c));
    }
    if (inside.empty()) continue;
    std::vector<int> fits;
    for (std::size_t q = 0; q < ud.patterns.size(); ++q) {
      const Pattern& p = ud.patterns[q];
      if (!partial_label_isomorphic(g, h, l, p)) continue;
      bool complete = true;
      for (Vertex w : h) {
        if (a.in_boundary(w)) continue;
        LabelSet around = 0;
        for (Vertex x : g.neighbors(w)) {
          if (set_contains(h, x)) around |= LabelSet{1} << l[idx(x)];
        }
        if (around != p.adj[idx(l[idx(w)])]) {
          complete = false;
          break;
        }
      }
      if (complete) fits.push_back(static_cast<int>(q));
    }
    if (fits.empty()) throw Error(Errc::NoCharacteristic, "a component fits no pattern");
    for (int c : inside) owner[idx(c)] = static_cast<int>(options.size());
    options.push_back(std::move(fits));
  }

  ComponentCharacteristic base;
  base.comps = comps;
  base.g.assign(comps.size(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    LabelSet h = 0;
    for (Vertex u : comps[c]) {
      for (Vertex x : g.neighbors(u)) {
        if (a.contains(x) && !set_contains(comps[c], x)) h |= LabelSet{1} << l[idx(x)];
      }
    }
    base.h.push_back(h);
  }

  std::vector<ComponentCharacteristic> out{base};
  for (std::size_t o = 0; o < options.size(); ++o) {
    std::vector<ComponentCharacteristic> next;
    for (const auto& partial : out) {
      for (int q : options[o]) {
        next.push_back(partial);
        for (std::size_t c = 0; c < comps.size(); ++c) {
          if (owner[c] == static_cast<int>(o)) next.back().g[c] = q;
        }
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SolveResult solve_component(const Instance& inst, const NiceTreeDecomposition& ntd,
                            const SolveOptions& options) {
  if (inst.mode != Mode::Component) throw Error(Errc::InvalidInput, "solve_component needs component mode");
  check_dp_preconditions(inst);
  dp::Engine engine(inst, ntd, options);
  return engine.run();
}

}  // namespace bpd

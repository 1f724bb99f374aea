#include "bpd/characteristic.hpp"

#include <algorithm>
#include <functional>

#include "bpd/error.hpp"

namespace bpd {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

LabelSet labels_of(std::span<const Vertex> vs, const Labeling& l) {
  LabelSet out = 0;
  for (Vertex v : vs) {
    if (l[idx(v)] >= 0) out |= LabelSet{1} << l[idx(v)];
  }
  return out;
}

const VertexSet* containing(const std::vector<VertexSet>& blocks, const VertexSet& b) {
  for (const auto& x : blocks) {
    if (is_subset(b, x)) return &x;
  }
  return nullptr;
}

// Labels of N_X(V(B)) \ S.
LabelSet neighborhood_labels(const BoundariedGraph& a, const Labeling& l, const VertexSet& x,
                             const VertexSet& b) {
  LabelSet out = 0;
  for (Vertex w : x) {
    if (a.in_boundary(w)) continue;
    if (std::any_of(b.begin(), b.end(), [&](Vertex u) { return a.graph().adjacent(u, w); })) {
      if (l[idx(w)] >= 0) out |= LabelSet{1} << l[idx(w)];
    }
  }
  return out;
}

// Vertices of X subject to the completeness condition.
VertexSet completeness_vertices(const BoundariedGraph& a, const VertexSet& x) {
  VertexSet out;
  for (Vertex w : x) {
    if (!a.in_boundary(w)) out.push_back(w);
  }
  for (const auto& comp : connected_components(a.graph(), a.boundary())) {
    auto common = set_intersection(comp, x);
    if (common.size() == 1) out.push_back(common.front());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool complete_at(const BoundariedGraph& a, const Labeling& l, const VertexSet& x, Vertex w,
                 const Pattern& q) {
  LabelSet around = 0;
  for (Vertex u : x) {
    if (u != w && a.graph().adjacent(u, w)) around |= LabelSet{1} << l[idx(u)];
  }
  return around == q.adj[idx(l[idx(w)])];
}

bool admissible(const BoundariedGraph& a, const Labeling& l, const VertexSet& x, const Pattern& q) {
  if (!partial_label_isomorphic(a.graph(), x, l, q)) return false;
  for (Vertex w : completeness_vertices(a, x)) {
    if (!complete_at(a, l, x, w, q)) return false;
  }
  return true;
}

}  // namespace

std::vector<VertexSet> boundary_blocks(const Graph& g, std::span<const Vertex> boundary) {
  std::vector<VertexSet> out;
  for (auto& b : biconnected_blocks(g, boundary).blocks) {
    if (b.size() >= 2) out.push_back(std::move(b));
  }
  return out;
}

bool is_characteristic(const BoundariedGraph& a, const Labeling& l, const PatternUniverse& ud,
                       const Characteristic& c) {
  auto blocks = boundary_blocks(a.graph(), a.boundary());
  if (blocks != c.blocks || c.g.size() != blocks.size() || c.h.size() != blocks.size()) return false;
  auto sblocks = s_blocks(a);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (c.g[j] < 0 || idx(c.g[j]) >= ud.patterns.size()) return false;
    const auto* x = containing(sblocks, blocks[j]);
    if (x == nullptr) return false;
    if (!admissible(a, l, *x, ud.patterns[idx(c.g[j])])) return false;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (is_subset(blocks[k], *x) && c.g[k] != c.g[j]) return false;
    }
    if (c.h[j] != neighborhood_labels(a, l, *x, blocks[j])) return false;
  }
  return true;
}

std::vector<Characteristic> compute_characteristic(const BoundariedGraph& a, const Labeling& l,
                                                   const PatternUniverse& ud) {
  Characteristic base;
  base.blocks = boundary_blocks(a.graph(), a.boundary());
  const std::size_t nb = base.blocks.size();
  base.g.assign(nb, -1);
  base.h.assign(nb, 0);
  auto sblocks = s_blocks(a);
  // Blocks grouped by their S-block; each group picks one pattern.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::vector<int>> candidates;
  for (const auto& x : sblocks) {
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < nb; ++j) {
      if (is_subset(base.blocks[j], x)) {
        members.push_back(j);
        base.h[j] = neighborhood_labels(a, l, x, base.blocks[j]);
      }
    }
    if (members.empty()) continue;
    std::vector<int> fits;
    for (std::size_t p = 0; p < ud.patterns.size(); ++p) {
      if (admissible(a, l, x, ud.patterns[p])) fits.push_back(static_cast<int>(p));
    }
    groups.push_back(std::move(members));
    candidates.push_back(std::move(fits));
  }
  std::vector<Characteristic> out;
  std::function<void(std::size_t)> pick = [&](std::size_t gi) {
    if (gi == groups.size()) {
      out.push_back(base);
      return;
    }
    for (int p : candidates[gi]) {
      for (std::size_t j : groups[gi]) base.g[j] = p;
      pick(gi + 1);
    }
  };
  pick(0);
  if (out.empty()) throw Error(Errc::NoCharacteristic, "no pattern admits every S-block");
  std::sort(out.begin(), out.end());
  return out;
}

bool respects_check(const Graph& sum, const Labeling& l, std::span<const Vertex> boundary,
                    const Characteristic& c, const PatternUniverse& ud) {
  (void)boundary;
  auto blocks = biconnected_blocks(sum).blocks;
  for (std::size_t j = 0; j < c.blocks.size(); ++j) {
    const auto* f = containing(blocks, c.blocks[j]);
    if (f == nullptr || !label_isomorphic(sum, *f, l, ud.patterns[idx(c.g[j])])) return false;
  }
  return true;
}

std::vector<Characteristic> restriction_of(const Characteristic& parent,
                                           const std::vector<VertexSet>& child_blocks, Vertex v,
                                           const Labeling& l, const PatternUniverse& ud) {
  const int lv = l[idx(v)];
  Characteristic base;
  base.blocks = child_blocks;
  base.g.assign(child_blocks.size(), -1);
  base.h.assign(child_blocks.size(), 0);
  // Child blocks that sit inside a parent block through v, grouped by that parent block.
  std::vector<std::vector<std::size_t>> inside(parent.blocks.size());
  for (std::size_t c = 0; c < child_blocks.size(); ++c) {
    std::size_t p = 0;
    while (p < parent.blocks.size() && !is_subset(child_blocks[c], parent.blocks[p])) ++p;
    if (p == parent.blocks.size()) return {};
    base.g[c] = parent.g[p];
    if (set_contains(parent.blocks[p], v)) {
      inside[p].push_back(c);
    } else {
      base.h[c] = parent.h[p];
    }
  }
  struct Split {
    std::vector<std::size_t> children;
    LabelSet target;
  };
  std::vector<Split> splits;
  for (std::size_t p = 0; p < parent.blocks.size(); ++p) {
    if (!set_contains(parent.blocks[p], v)) continue;
    const LabelSet target = parent.h[p];
    const LabelSet forbidden = ud.patterns[idx(parent.g[p])].adj[idx(lv)];
    if (target & forbidden) return {};
    if (inside[p].empty()) {
      if (target != 0) return {};
      continue;
    }
    splits.push_back({inside[p], target});
  }
  std::vector<Characteristic> out;
  std::function<void(std::size_t, std::size_t, LabelSet)> assign = [&](std::size_t s, std::size_t k,
                                                                       LabelSet covered) {
    if (s == splits.size()) {
      out.push_back(base);
      return;
    }
    const auto& split = splits[s];
    if (k == split.children.size()) {
      if (covered == split.target) assign(s + 1, 0, 0);
      return;
    }
    // Enumerate subsets of the target for this child.
    for (LabelSet sub = split.target;; sub = (sub - 1) & split.target) {
      base.h[split.children[k]] = sub;
      assign(s, k + 1, covered | sub);
      if (sub == 0) break;
    }
  };
  assign(0, 0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Extension> extensions_of(const Graph& g, std::span<const Vertex> child_bag, Vertex v,
                                     const Characteristic& parent, const Labeling& l,
                                     const PatternUniverse& ud) {
  auto child_blocks = boundary_blocks(g, child_bag);
  const LabelSet all = (LabelSet{1} << ud.d) - 1;
  std::vector<Extension> out;
  Labeling l2 = l;
  for (int label_v = 0; label_v < ud.d; ++label_v) {
    l2[idx(v)] = label_v;
    using Option = std::pair<int, LabelSet>;
    std::vector<std::vector<Option>> options(child_blocks.size());
    bool feasible = true;
    for (std::size_t c = 0; c < child_blocks.size() && feasible; ++c) {
      const auto& b2 = child_blocks[c];
      const LabelSet own = labels_of(b2, l2);
      const LabelSet free_labels = all & ~own;
      std::vector<std::size_t> parents;
      for (std::size_t p = 0; p < parent.blocks.size(); ++p) {
        if (is_subset(parent.blocks[p], b2)) parents.push_back(p);
      }
      auto& opts = options[c];
      if (parents.empty()) {
        for (std::size_t q = 0; q < ud.patterns.size(); ++q) {
          if (!partial_label_isomorphic(g, b2, l2, ud.patterns[q])) continue;
          for (LabelSet sub = free_labels;; sub = (sub - 1) & free_labels) {
            opts.emplace_back(static_cast<int>(q), sub);
            if (sub == 0) break;
          }
        }
      } else {
        const int gv = parent.g[parents.front()];
        bool same = std::all_of(parents.begin(), parents.end(), [&](std::size_t p) { return parent.g[p] == gv; });
        const Pattern& q = ud.patterns[idx(gv)];
        if (same && partial_label_isomorphic(g, b2, l2, q)) {
          if (!set_contains(b2, v)) {
            LabelSet hv = parent.h[parents.front()];
            if ((hv & own) == 0) opts.emplace_back(gv, hv);
          } else {
            for (LabelSet sub = free_labels;; sub = (sub - 1) & free_labels) {
              bool ok = std::all_of(parents.begin(), parents.end(), [&](std::size_t p) {
                LabelSet a = labels_of(parent.blocks[p], l2);
                return parent.h[p] == ((LabelSet{1} << label_v) | (q.neighbors(a) & sub));
              });
              if (ok) opts.emplace_back(gv, sub);
              if (sub == 0) break;
            }
          }
        }
      }
      if (opts.empty()) feasible = false;
    }
    if (!feasible) continue;
    // A block labeling of the child bag is required.
    bool injective = std::all_of(child_blocks.begin(), child_blocks.end(), [&](const VertexSet& b) {
      LabelSet seen = 0;
      for (Vertex u : b) {
        if (l2[idx(u)] < 0 || ((seen >> l2[idx(u)]) & 1u)) return false;
        seen |= LabelSet{1} << l2[idx(u)];
      }
      return true;
    });
    if (!injective) continue;
    Extension ext;
    ext.label_v = label_v;
    ext.child.blocks = child_blocks;
    ext.child.g.assign(child_blocks.size(), -1);
    ext.child.h.assign(child_blocks.size(), 0);
    std::function<void(std::size_t)> pick = [&](std::size_t c) {
      if (c == child_blocks.size()) {
        out.push_back(ext);
        return;
      }
      for (auto [gv, hv] : options[c]) {
        ext.child.g[c] = gv;
        ext.child.h[c] = hv;
        pick(c + 1);
      }
    };
    pick(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool join_compatible(const Characteristic& c1, const Characteristic& c2, std::span<const LabelSet> h,
                     const PatternUniverse& ud) {
  if (c1.blocks != c2.blocks || c1.g != c2.g || h.size() != c1.blocks.size() ||
      c1.h.size() != c1.blocks.size() || c2.h.size() != c2.blocks.size()) {
    throw Error(Errc::DomainMismatch, "characteristics range over different blocks or patterns");
  }
  for (std::size_t j = 0; j < h.size(); ++j) {
    const Pattern& q = ud.patterns[idx(c1.g[j])];
    if (c1.h[j] & c2.h[j]) return false;
    if ((c1.h[j] | c2.h[j]) != h[j]) return false;
    if (q.neighbors(c1.h[j]) & c2.h[j]) return false;
  }
  return true;
}

}  // namespace bpd

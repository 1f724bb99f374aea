#include "bpd/dp_block.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <set>
#include <string>

#include "bpd/error.hpp"
#include "bpd/repset.hpp"

namespace bpd::dp {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

std::uint32_t bit(int p) { return std::uint32_t{1} << p; }

int position(const VertexSet& bag, Vertex v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Mask over the bag without position p, moved to the bag with a fresh position p.
std::uint32_t expand(std::uint32_t mask, int p) {
  const std::uint32_t low = mask & (bit(p) - 1);
  return low | ((mask >> p) << (p + 1));
}

std::uint32_t shrink(std::uint32_t mask, int p) {
  const std::uint32_t low = mask & (bit(p) - 1);
  return low | ((mask >> (p + 1)) << p);
}

int containing(const std::vector<VertexSet>& sets, Vertex v) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (set_contains(sets[i], v)) return static_cast<int>(i);
  }
  return -1;
}

int containing(const std::vector<VertexSet>& sets, const VertexSet& sub) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (is_subset(sub, sets[i])) return static_cast<int>(i);
  }
  return -1;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[idx(x)] != x) x = parent[idx(x)] = parent[idx(parent[idx(x)])];
    return x;
  }
  void unite(int a, int b) { parent[idx(find(a))] = find(b); }
};

void append(std::vector<Entry>& into, const std::vector<Entry>& from) {
  into.insert(into.end(), from.begin(), from.end());
}

}  // namespace

Engine::Engine(const Instance& inst, const NiceTreeDecomposition& ntd, SolveOptions options)
    : inst_(inst), ntd_(ntd), options_(options), views_(ntd.nodes.size()) {}

const BagView& Engine::view(int node, std::uint32_t deleted) {
  auto& cache = views_[idx(node)];
  if (auto it = cache.find(deleted); it != cache.end()) return it->second;
  const auto& bag = ntd_.nodes[idx(node)].bag;
  BagView out;
  for (std::size_t p = 0; p < bag.size(); ++p) {
    if (!((deleted >> p) & 1u)) out.kept.push_back(bag[p]);
  }
  out.comps = connected_components(inst_.graph, out.kept);
  if (inst_.mode == Mode::Block) {
    for (auto& block : biconnected_blocks(inst_.graph, out.kept).blocks) {
      if (block.size() >= 2) out.units.push_back(std::move(block));
    }
  } else {
    out.units = out.comps;
  }
  return cache.emplace(deleted, std::move(out)).first->second;
}

Table Engine::leaf() const {
  Table out;
  out[Key{}].push_back(Entry{Partition(), {}});
  return out;
}

// The realized members must fit in d vertices and, every built-in family being closed under
// induced subgraphs on these sizes, already belong to the family.
bool Engine::feasible(const VertexSet& open, const Group& g) const {
  const int r = static_cast<int>(open.size());
  const int c = static_cast<int>(g.closed_adj.size());
  if (r + c > inst_.d) return false;
  std::vector<Edge> edges;
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      if (inst_.graph.adjacent(open[idx(a)], open[idx(b)])) edges.emplace_back(a, b);
    }
  }
  for (int i = 0; i < c; ++i) {
    for (int a = 0; a < r; ++a) {
      if ((g.open_adj[idx(i)] >> a) & 1u) edges.emplace_back(a, r + i);
    }
    for (int j = i + 1; j < c; ++j) {
      if ((g.closed_adj[idx(i)] >> j) & 1u) edges.emplace_back(r + i, r + j);
    }
  }
  return inst_.family.contains(Graph::from_edges(r + c, edges));
}

std::optional<std::vector<Group>> Engine::merge(const BagView& view, const std::vector<Piece>& pieces) const {
  const std::size_t nu = view.units.size();
  UnionFind uf(nu);
  for (const auto& piece : pieces) {
    for (std::size_t i = 1; i < piece.units.size(); ++i) uf.unite(piece.units[i], piece.units[0]);
  }
  std::vector<int> class_of(nu, -1);
  std::vector<Group> out;
  for (std::size_t u = 0; u < nu; ++u) {
    const int root = uf.find(static_cast<int>(u));
    if (class_of[idx(root)] < 0) {
      class_of[idx(root)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[idx(class_of[idx(root)])].units.push_back(static_cast<int>(u));
  }
  std::vector<VertexSet> open(out.size());
  for (std::size_t c = 0; c < out.size(); ++c) {
    for (int u : out[c].units) open[c] = set_union(open[c], view.units[idx(u)]);
  }
  // Closed members of distinct pieces are distinct vertices with no edge between them.
  for (const auto& piece : pieces) {
    if (piece.units.empty()) continue;
    const auto c = idx(class_of[idx(uf.find(piece.units[0]))]);
    Group& g = out[c];
    const auto offset = static_cast<int>(g.closed_adj.size());
    for (std::size_t i = 0; i < piece.group->closed_adj.size(); ++i) {
      std::uint32_t mask = 0;
      for (std::uint32_t r = piece.group->open_adj[i]; r; r &= r - 1) {
        mask |= bit(position(open[c], piece.open[idx(std::countr_zero(r))]));
      }
      g.open_adj.push_back(mask);
      g.closed_adj.push_back(piece.group->closed_adj[i] << offset);
    }
  }
  for (std::size_t c = 0; c < out.size(); ++c) {
    if (!feasible(open[c], out[c])) return std::nullopt;
    canonicalize(out[c]);
  }
  return out;
}

Table Engine::intro_step(int node, const Table& child) {
  const auto& nd = ntd_.nodes[idx(node)];
  const int c = nd.children.at(0);
  const auto& bag = nd.bag;
  const Vertex v = nd.vertex;
  const int pv = position(bag, v);
  const bool block = inst_.mode == Mode::Block;
  Table out;
  for (const auto& [key, entries] : child) {
    const std::uint32_t xp = expand(key.deleted, pv);

    if (std::popcount(key.deleted) + 1 + key.budget <= inst_.k) {
      append(out[Key{xp | bit(pv), key.budget, key.groups}], entries);
    }

    const BagView& cv = view(c, key.deleted);
    const BagView& pw = view(node, xp);
    std::vector<Piece> pieces;
    for (const auto& g : key.groups) {
      Piece piece{&g, {}, {}};
      for (int u : g.units) {
        const auto& unit = cv.units[idx(u)];
        piece.units.push_back(containing(pw.units, unit));
        piece.open = set_union(piece.open, unit);
      }
      pieces.push_back(std::move(piece));
    }
    auto groups = merge(pw, pieces);
    if (!groups) continue;

    std::vector<int> parent_comp(cv.comps.size());
    for (std::size_t i = 0; i < cv.comps.size(); ++i) parent_comp[i] = containing(pw.comps, cv.comps[i].front());
    const int vc = containing(pw.comps, v);

    std::vector<Entry> fresh;
    for (const auto& e : entries) {
      std::vector<int> touched;
      bool ok = true;
      for (std::size_t i = 0; i < cv.comps.size() && ok; ++i) {
        if (parent_comp[i] != vc) continue;
        const int part = e.partition.part_of(static_cast<int>(i));
        const bool seen = std::find(touched.begin(), touched.end(), part) != touched.end();
        // Two components joined below and again through v close a cycle outside the bag.
        if (seen && block) ok = false;
        if (!seen) touched.push_back(part);
      }
      if (!ok) continue;
      const int merged = static_cast<int>(cv.comps.size()) + 1;
      std::vector<int> block_of(pw.comps.size(), merged);
      for (std::size_t i = 0; i < cv.comps.size(); ++i) {
        const int part = e.partition.part_of(static_cast<int>(i));
        const bool hit = std::find(touched.begin(), touched.end(), part) != touched.end();
        block_of[idx(parent_comp[i])] = hit ? merged : part;
      }
      fresh.push_back(Entry{Partition(block_of), e.witness});
    }
    if (!fresh.empty()) append(out[Key{xp, key.budget, std::move(*groups)}], fresh);
  }
  reduce(node, out);
  return out;
}

Table Engine::forget_step(int node, const Table& child) {
  const auto& nd = ntd_.nodes[idx(node)];
  const int c = nd.children.at(0);
  const auto& cbag = ntd_.nodes[idx(c)].bag;
  const Vertex v = nd.vertex;
  const int pv = position(cbag, v);
  const Graph& graph = inst_.graph;
  Table out;
  for (const auto& [key, entries] : child) {
    const std::uint32_t xp = shrink(key.deleted, pv);
    if ((key.deleted >> pv) & 1u) {
      auto& dst = out[Key{xp, key.budget + 1, key.groups}];
      for (const auto& e : entries) {
        dst.push_back(Entry{e.partition, options_.witness ? set_union(e.witness, VertexSet{v}) : VertexSet{}});
      }
      continue;
    }
    const BagView& cv = view(c, key.deleted);
    const BagView& pw = view(node, xp);

    std::vector<int> child_unit(pw.units.size());
    for (std::size_t u = 0; u < pw.units.size(); ++u) child_unit[u] = containing(cv.units, pw.units[u]);

    bool ok = true;
    std::vector<Group> groups;
    for (const auto& g : key.groups) {
      Group ng;
      VertexSet open_old, open_new;
      for (int u : g.units) open_old = set_union(open_old, cv.units[idx(u)]);
      for (std::size_t u = 0; u < pw.units.size(); ++u) {
        if (std::find(g.units.begin(), g.units.end(), child_unit[u]) != g.units.end()) {
          ng.units.push_back(static_cast<int>(u));
          open_new = set_union(open_new, pw.units[u]);
        }
      }
      // Members that leave every unit become closed, after the existing closed members.
      const VertexSet leaving = set_difference(open_old, open_new);
      const auto oc = static_cast<int>(g.closed_adj.size());
      auto new_open_bits = [&](Vertex u) {
        std::uint32_t mask = 0;
        for (std::size_t a = 0; a < open_new.size(); ++a) {
          if (graph.adjacent(u, open_new[a])) mask |= bit(static_cast<int>(a));
        }
        return mask;
      };
      for (int i = 0; i < oc; ++i) {
        std::uint32_t to_open = 0, to_closed = g.closed_adj[idx(i)];
        for (std::uint32_t r = g.open_adj[idx(i)]; r; r &= r - 1) {
          const Vertex u = open_old[idx(std::countr_zero(r))];
          if (set_contains(open_new, u)) {
            to_open |= bit(position(open_new, u));
          } else {
            to_closed |= bit(oc + position(leaving, u));
          }
        }
        ng.open_adj.push_back(to_open);
        ng.closed_adj.push_back(to_closed);
      }
      for (Vertex u : leaving) {
        std::uint32_t to_closed = 0;
        const int pu = position(open_old, u);
        for (int i = 0; i < oc; ++i) {
          if ((g.open_adj[idx(i)] >> pu) & 1u) to_closed |= bit(i);
        }
        for (std::size_t j = 0; j < leaving.size(); ++j) {
          if (graph.adjacent(u, leaving[j])) to_closed |= bit(oc + static_cast<int>(j));
        }
        ng.open_adj.push_back(new_open_bits(u));
        ng.closed_adj.push_back(to_closed);
      }
      if (ng.units.empty()) {
        // The group is final: all of its members are known.
        if (!feasible({}, ng)) {
          ok = false;
          break;
        }
        continue;
      }
      canonicalize(ng);
      groups.push_back(std::move(ng));
    }
    if (!ok) continue;
    std::sort(groups.begin(), groups.end());

    std::vector<int> from(pw.comps.size());
    for (std::size_t i = 0; i < pw.comps.size(); ++i) from[i] = containing(cv.comps, pw.comps[i].front());
    auto& dst = out[Key{xp, key.budget, std::move(groups)}];
    for (const auto& e : entries) {
      std::vector<int> block_of(pw.comps.size());
      for (std::size_t i = 0; i < from.size(); ++i) block_of[i] = e.partition.part_of(from[i]);
      dst.push_back(Entry{Partition(block_of), e.witness});
    }
  }
  reduce(node, out);
  return out;
}

Table Engine::join_step(int node, const Table& left, const Table& right) {
  const bool block = inst_.mode == Mode::Block;
  std::map<std::uint32_t, std::vector<const Table::value_type*>> index;
  for (const auto& item : right) index[item.first.deleted].push_back(&item);

  Table out;
  for (const auto& [k1, e1] : left) {
    auto it = index.find(k1.deleted);
    if (it == index.end()) continue;
    const BagView& w = view(node, k1.deleted);
    const int m = static_cast<int>(w.comps.size());
    for (const auto* item : it->second) {
      const auto& [k2, e2] = *item;
      const int budget = k1.budget + k2.budget;
      if (std::popcount(k1.deleted) + budget > inst_.k) continue;
      std::vector<Piece> pieces;
      for (const auto* side : {&k1.groups, &k2.groups}) {
        for (const auto& g : *side) {
          Piece piece{&g, g.units, {}};
          for (int u : g.units) piece.open = set_union(piece.open, w.units[idx(u)]);
          pieces.push_back(std::move(piece));
        }
      }
      auto groups = merge(w, pieces);
      if (!groups) continue;
      std::vector<Entry> fresh;
      for (const auto& a : e1) {
        for (const auto& b : e2) {
          const Partition pair[] = {a.partition, b.partition};
          if (block && !inc_is_forest(m, pair)) continue;
          fresh.push_back(Entry{uplus(a.partition, b.partition),
                                options_.witness ? set_union(a.witness, b.witness) : VertexSet{}});
        }
      }
      if (!fresh.empty()) append(out[Key{k1.deleted, budget, std::move(*groups)}], fresh);
    }
  }
  reduce(node, out);
  return out;
}

void Engine::reduce(int node, Table& table) {
  for (auto it = table.begin(); it != table.end();) {
    auto& entries = it->second;
    std::set<Partition> seen;
    std::vector<Entry> unique;
    for (auto& e : entries) {
      if (seen.insert(e.partition).second) unique.push_back(std::move(e));
    }
    const int m = static_cast<int>(view(node, it->first.deleted).comps.size());
    if (inst_.mode == Mode::Block && unique.size() > 1) {
      std::vector<Partition> family;
      family.reserve(unique.size());
      for (const auto& e : unique) family.push_back(e.partition);
      auto kept = rep_partitions(m, family);
      std::set<Partition> keep(kept.begin(), kept.end());
      std::erase_if(unique, [&](const Entry& e) { return !keep.count(e.partition); });
    }
    if (unique.empty()) {
      it = table.erase(it);
      continue;
    }
    const std::size_t bound = m == 0 ? 1 : static_cast<std::size_t>(m) << (m - 1);
    if (inst_.mode == Mode::Block && unique.size() > bound) stats_.within_rep_bound = false;
    stats_.retained += unique.size();
    stats_.max_family = std::max(stats_.max_family, unique.size());
    entries = std::move(unique);
    ++it;
  }
  stats_.states += table.size();
}

SolveResult Engine::run() {
  const auto start = std::chrono::steady_clock::now();
  const auto report = validate_nice(inst_.graph, ntd_);
  if (!report.ok) throw Error(Errc::InvalidInput, "invalid nice tree decomposition: " + report.message);
  if (ntd_.width() + 1 > 31) throw Error(Errc::TooLarge, "bags larger than 31 vertices are not supported");

  std::vector<Table> tables(ntd_.nodes.size());
  for (std::size_t t = 0; t < ntd_.nodes.size(); ++t) {
    const auto& nd = ntd_.nodes[t];
    const int node = static_cast<int>(t);
    switch (nd.kind) {
      case NodeKind::Leaf:
        tables[t] = leaf();
        stats_.states += 1;
        stats_.retained += 1;
        stats_.max_family = std::max<std::size_t>(stats_.max_family, 1);
        break;
      case NodeKind::Introduce: tables[t] = intro_step(node, tables[idx(nd.children[0])]); break;
      case NodeKind::Forget: tables[t] = forget_step(node, tables[idx(nd.children[0])]); break;
      case NodeKind::Join:
        tables[t] = join_step(node, tables[idx(nd.children[0])], tables[idx(nd.children[1])]);
        break;
    }
    for (int ch : nd.children) {
      Table().swap(tables[idx(ch)]);
      views_[idx(ch)].clear();
    }
  }

  SolveResult result;
  stats_.nodes = ntd_.nodes.size();
  stats_.width = ntd_.width();
  const Table& root = tables.back();
  for (const auto& [key, entries] : root) {
    if (entries.empty()) continue;
    result.yes = true;
    if (options_.witness) result.witness = entries.front().witness;
    break;
  }
  stats_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.stats = stats_;
  return result;
}

void canonicalize(Group& g) {
  const std::size_t c = g.closed_adj.size();
  if (c <= 1) return;
  auto relabel = [&](const std::vector<int>& order) {
    // order[new] = old
    std::vector<int> inv(c);
    for (std::size_t i = 0; i < c; ++i) inv[idx(order[i])] = static_cast<int>(i);
    std::vector<std::uint32_t> seq;
    seq.reserve(2 * c);
    for (std::size_t i = 0; i < c; ++i) {
      std::uint32_t mask = 0;
      for (std::uint32_t r = g.closed_adj[idx(order[i])]; r; r &= r - 1) mask |= bit(inv[idx(std::countr_zero(r))]);
      seq.push_back(g.open_adj[idx(order[i])]);
      seq.push_back(mask);
    }
    return seq;
  };
  std::vector<int> order(c);
  std::iota(order.begin(), order.end(), 0);
  if (c > 7) {
    // Exhaustive search is too slow here; a deterministic order still dedupes most states.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::pair(g.open_adj[idx(a)], std::popcount(g.closed_adj[idx(a)])) <
             std::pair(g.open_adj[idx(b)], std::popcount(g.closed_adj[idx(b)]));
    });
  } else {
    auto by_open = [&](int a, int b) { return std::pair(g.open_adj[idx(a)], a) < std::pair(g.open_adj[idx(b)], b); };
    std::sort(order.begin(), order.end(), by_open);
    auto best = relabel(order);
    auto best_order = order;
    // Only orders that keep open_adj sorted can be minimal.
    std::vector<int> perm = order;
    while (std::next_permutation(perm.begin(), perm.end(), by_open)) {
      bool sorted = true;
      for (std::size_t i = 1; i < c && sorted; ++i) sorted = g.open_adj[idx(perm[i - 1])] <= g.open_adj[idx(perm[i])];
      if (!sorted) continue;
      auto seq = relabel(perm);
      if (seq < best) {
        best = std::move(seq);
        best_order = perm;
      }
    }
    order = best_order;
  }
  auto seq = relabel(order);
  for (std::size_t i = 0; i < c; ++i) {
    g.open_adj[i] = seq[2 * i];
    g.closed_adj[i] = seq[2 * i + 1];
  }
}

}  // namespace bpd::dp

namespace bpd {

void check_dp_preconditions(const Instance& inst) {
  if (inst.d < 1) throw Error(Errc::InvalidInput, "d must be positive");
  if (inst.k < 0) throw Error(Errc::InvalidInput, "k must be non-negative");
  if (inst.d > ud_cap()) {
    throw Error(Errc::CapExceeded, "d=" + std::to_string(inst.d) + " exceeds the cap " + std::to_string(ud_cap()));
  }
  // Cycles of length 4 and up are the first non-chordal members of the other families.
  if (!inst.family.chordal_only() && inst.d >= 4) {
    throw Error(Errc::NonChordalFamily,
                "family '" + std::string(inst.family.name()) + "' has non-chordal members on at most d vertices");
  }
}

SolveResult solve_block(const Instance& inst, const NiceTreeDecomposition& ntd, const SolveOptions& options) {
  if (inst.mode != Mode::Block) throw Error(Errc::InvalidInput, "solve_block needs block mode");
  check_dp_preconditions(inst);
  dp::Engine engine(inst, ntd, options);
  return engine.run();
}

}  // namespace bpd

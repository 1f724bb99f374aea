#include "bpd/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "bpd/error.hpp"

namespace bpd {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

}  // namespace

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

TdReport validate_td(const Graph& g, const TreeDecomposition& td) {
  TdReport r;
  const auto nb = td.bags.size();
  auto fail = [&](int condition, std::string msg, std::vector<Vertex> witness) {
    r.ok = false;
    r.condition = condition;
    r.message = std::move(msg);
    r.witness = std::move(witness);
    return r;
  };
  if (nb == 0) {
    if (g.n() == 0) return r;
    return fail(1, "no bags", {0});
  }
  std::vector<std::vector<int>> tree(nb);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || idx(a) >= nb || idx(b) >= nb || a == b) {
      return fail(0, "tree edge references a missing node", {a, b});
    }
    tree[idx(a)].push_back(b);
    tree[idx(b)].push_back(a);
  }
  if (td.tree_edges.size() != nb - 1) return fail(0, "node graph is not a tree", {});
  {
    std::vector<char> seen(nb, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      ++count;
      for (int u : tree[idx(t)]) {
        if (!seen[idx(u)]) {
          seen[idx(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    if (count != nb) return fail(0, "node graph is disconnected", {});
  }
  std::vector<std::vector<int>> nodes_of(idx(g.n()));
  for (std::size_t t = 0; t < nb; ++t) {
    for (Vertex v : td.bags[t]) {
      if (v < 0 || v >= g.n()) return fail(1, "bag contains a non-vertex", {v});
      nodes_of[idx(v)].push_back(static_cast<int>(t));
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (nodes_of[idx(v)].empty()) return fail(1, "vertex in no bag", {v});
  }
  std::vector<std::set<Vertex>> bagset(nb);
  for (std::size_t t = 0; t < nb; ++t) bagset[t] = {td.bags[t].begin(), td.bags[t].end()};
  for (auto [u, v] : g.edges()) {
    bool covered = std::any_of(nodes_of[idx(u)].begin(), nodes_of[idx(u)].end(),
                               [&](int t) { return bagset[idx(t)].count(v) > 0; });
    if (!covered) return fail(2, "edge not covered by any bag", {u, v});
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto& ts = nodes_of[idx(v)];
    std::vector<char> holds(nb, 0), seen(nb, 0);
    for (int t : ts) holds[idx(t)] = 1;
    std::vector<int> stack{ts.front()};
    seen[idx(ts.front())] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      ++count;
      for (int u : tree[idx(t)]) {
        if (holds[idx(u)] && !seen[idx(u)]) {
          seen[idx(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    if (count != ts.size()) return fail(3, "bags containing the vertex are not connected", {v});
  }
  return r;
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()) - 1);
  return w;
}

TreeDecomposition NiceTreeDecomposition::as_td() const {
  TreeDecomposition td;
  for (std::size_t t = 0; t < nodes.size(); ++t) {
    td.bags.push_back(nodes[t].bag);
    for (int c : nodes[t].children) td.tree_edges.emplace_back(c, static_cast<int>(t));
  }
  return td;
}

TdReport validate_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
  TdReport r;
  auto fail = [&](std::string msg, Vertex v) {
    r.ok = false;
    r.condition = 0;
    r.message = std::move(msg);
    r.witness = {v};
    return r;
  };
  if (ntd.nodes.empty()) return fail("no nodes", -1);
  if (!ntd.nodes.back().bag.empty()) return fail("root bag not empty", -1);
  for (std::size_t t = 0; t < ntd.nodes.size(); ++t) {
    const auto& node = ntd.nodes[t];
    for (int c : node.children) {
      if (c < 0 || idx(c) >= t) return fail("child stored after its parent", static_cast<int>(t));
    }
    switch (node.kind) {
      case NodeKind::Leaf:
        if (!node.children.empty() || !node.bag.empty()) return fail("bad leaf", static_cast<int>(t));
        break;
      case NodeKind::Introduce: {
        if (node.children.size() != 1) return fail("introduce arity", static_cast<int>(t));
        const auto& cb = ntd.nodes[idx(node.children[0])].bag;
        if (set_contains(cb, node.vertex) || set_union(cb, VertexSet{node.vertex}) != node.bag) {
          return fail("introduce bag mismatch", node.vertex);
        }
        break;
      }
      case NodeKind::Forget: {
        if (node.children.size() != 1) return fail("forget arity", static_cast<int>(t));
        const auto& cb = ntd.nodes[idx(node.children[0])].bag;
        if (!set_contains(cb, node.vertex) || set_difference(cb, VertexSet{node.vertex}) != node.bag) {
          return fail("forget bag mismatch", node.vertex);
        }
        break;
      }
      case NodeKind::Join:
        if (node.children.size() != 2) return fail("join arity", static_cast<int>(t));
        for (int c : node.children) {
          if (ntd.nodes[idx(c)].bag != node.bag) return fail("join bag mismatch", static_cast<int>(t));
        }
        break;
    }
  }
  return validate_td(g, ntd.as_td());
}

NiceTreeDecomposition to_nice(const Graph& g, const TreeDecomposition& td) {
  auto report = validate_td(g, td);
  if (!report.ok) throw Error(Errc::InvalidInput, "invalid tree decomposition: " + report.message);
  NiceTreeDecomposition out;
  auto add = [&](NiceNode node) {
    out.nodes.push_back(std::move(node));
    return static_cast<int>(out.nodes.size()) - 1;
  };
  auto chain = [&](int top, const VertexSet& from, const VertexSet& to) {
    VertexSet bag = from;
    for (Vertex v : set_difference(from, to)) {
      bag = set_difference(bag, VertexSet{v});
      top = add({NodeKind::Forget, v, {top}, bag});
    }
    for (Vertex v : set_difference(to, from)) {
      bag = set_union(bag, VertexSet{v});
      top = add({NodeKind::Introduce, v, {top}, bag});
    }
    return top;
  };
  if (td.bags.empty()) {
    add({NodeKind::Leaf, -1, {}, {}});
    return out;
  }
  std::vector<std::vector<int>> tree(td.bags.size());
  for (auto [a, b] : td.tree_edges) {
    tree[idx(a)].push_back(b);
    tree[idx(b)].push_back(a);
  }
  for (auto& nb : tree) std::sort(nb.begin(), nb.end());

  std::function<int(int, int)> build = [&](int t, int parent) -> int {
    std::vector<int> tops;
    for (int c : tree[idx(t)]) {
      if (c == parent) continue;
      int top = build(c, t);
      tops.push_back(chain(top, td.bags[idx(c)], td.bags[idx(t)]));
    }
    if (tops.empty()) {
      int leaf = add({NodeKind::Leaf, -1, {}, {}});
      return chain(leaf, {}, td.bags[idx(t)]);
    }
    int top = tops.front();
    for (std::size_t k = 1; k < tops.size(); ++k) {
      top = add({NodeKind::Join, -1, {top, tops[k]}, td.bags[idx(t)]});
    }
    return top;
  };
  int top = build(0, -1);
  chain(top, td.bags[0], {});
  return out;
}

TreeDecomposition td_from_elimination(const Graph& g, const std::vector<Vertex>& order) {
  const auto n = idx(g.n());
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < g.n(); ++v) adj[idx(v)] = {g.neighbors(v).begin(), g.neighbors(v).end()};
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < order.size(); ++i) pos[idx(order[i])] = i;
  td.bags.resize(n);
  std::vector<int> parent(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    VertexSet later(adj[idx(v)].begin(), adj[idx(v)].end());
    VertexSet bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = bag;
    if (!later.empty()) {
      Vertex first = *std::min_element(later.begin(), later.end(),
                                       [&](Vertex a, Vertex b) { return pos[idx(a)] < pos[idx(b)]; });
      parent[i] = static_cast<int>(pos[idx(first)]);
    }
    for (Vertex a : later) {
      adj[idx(a)].erase(v);
      for (Vertex b : later) {
        if (a != b) adj[idx(a)].insert(b);
      }
    }
  }
  int first_root = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (parent[i] != -1) {
      td.tree_edges.emplace_back(static_cast<int>(i), parent[i]);
    } else if (first_root == -1) {
      first_root = static_cast<int>(i);
    } else {
      td.tree_edges.emplace_back(static_cast<int>(i), first_root);
    }
  }
  return td;
}

std::vector<Vertex> min_fill_order(const Graph& g) {
  const auto n = idx(g.n());
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < g.n(); ++v) adj[idx(v)] = {g.neighbors(v).begin(), g.neighbors(v).end()};
  std::vector<char> done(n, 0);
  std::vector<Vertex> order;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = -1;
    std::size_t best_fill = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < g.n(); ++v) {
      if (done[idx(v)]) continue;
      std::size_t fill = 0;
      for (auto a = adj[idx(v)].begin(); a != adj[idx(v)].end(); ++a) {
        for (auto b = std::next(a); b != adj[idx(v)].end(); ++b) {
          if (!adj[idx(*a)].count(*b)) ++fill;
        }
      }
      if (fill < best_fill) {
        best_fill = fill;
        best = v;
      }
    }
    done[idx(best)] = 1;
    order.push_back(best);
    VertexSet nb(adj[idx(best)].begin(), adj[idx(best)].end());
    for (Vertex a : nb) {
      adj[idx(a)].erase(best);
      for (Vertex b : nb) {
        if (a != b) adj[idx(a)].insert(b);
      }
    }
    adj[idx(best)].clear();
  }
  return order;
}

TreeDecomposition heuristic_td(const Graph& g) { return td_from_elimination(g, min_fill_order(g)); }

TreeDecomposition exact_td_small(const Graph& g, int limit) {
  const int n = g.n();
  if (n > limit || n > 24) {
    throw Error(Errc::TooLarge, "exact treewidth limited to " + std::to_string(limit) + " vertices");
  }
  if (n == 0) return td_from_elimination(g, {});
  std::vector<std::uint32_t> nbmask(idx(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) nbmask[idx(v)] |= 1u << w;
  }
  // q(S, v): vertices outside S + v reachable from v through S.
  auto q_size = [&](std::uint32_t s, Vertex v) {
    std::uint32_t seen = 1u << v, frontier = 1u << v, reach = 0;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) {
        int u = std::countr_zero(f);
        next |= nbmask[idx(u)];
      }
      next &= ~seen;
      seen |= next;
      reach |= next & ~s;
      frontier = next & s;
    }
    return std::popcount(reach);
  };
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<int> tw(std::size_t{1} << n, std::numeric_limits<int>::max());
  std::vector<std::int8_t> choice(std::size_t{1} << n, -1);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t prev = s & ~(1u << v);
      int value = std::max(tw[prev], q_size(prev, v));
      if (value < tw[s]) {
        tw[s] = value;
        choice[s] = static_cast<std::int8_t>(v);
      }
    }
  }
  std::vector<Vertex> order;
  for (std::uint32_t s = full; s; s &= ~(1u << choice[s])) order.push_back(choice[s]);
  std::reverse(order.begin(), order.end());
  return td_from_elimination(g, order);
}

TreeDecomposition read_td(std::istream& in) {
  TreeDecomposition td;
  std::string line;
  long long declared = -1;
  int lineno = 0;
  std::vector<char> seen_bag;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    auto bad = [&](const std::string& what) {
      return Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + what);
    };
    if (line[0] == 's') {
      std::string s, kind;
      long long w1 = 0, n = 0;
      if (!(ls >> s >> kind >> declared >> w1 >> n) || kind != "td" || declared < 0) throw bad("bad header");
      td.bags.assign(static_cast<std::size_t>(declared), {});
      seen_bag.assign(static_cast<std::size_t>(declared), 0);
      continue;
    }
    if (declared < 0) throw bad("content before header");
    if (line[0] == 'b') {
      std::string b;
      long long i = 0;
      if (!(ls >> b >> i) || i < 1 || i > declared) throw bad("bad bag line");
      auto& bag = td.bags[static_cast<std::size_t>(i - 1)];
      if (seen_bag[static_cast<std::size_t>(i - 1)]) throw bad("duplicate bag");
      seen_bag[static_cast<std::size_t>(i - 1)] = 1;
      long long v = 0;
      while (ls >> v) {
        if (v < 1) throw bad("bad vertex");
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      continue;
    }
    long long a = 0, b = 0;
    if (!(ls >> a >> b) || a < 1 || b < 1 || a > declared || b > declared) throw bad("bad tree edge");
    td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (declared < 0) throw Error(Errc::ParseError, "missing header");
  return td;
}

TreeDecomposition read_td_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return read_td(in);
}

void write_td(std::ostream& out, const TreeDecomposition& td, int n) {
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
  for (std::size_t t = 0; t < td.bags.size(); ++t) {
    out << "b " << t + 1;
    for (Vertex v : td.bags[t]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

}  // namespace bpd

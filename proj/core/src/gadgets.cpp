#include "bpd/gadgets.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "bpd/error.hpp"

namespace bpd {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

// Edge list builder over a growing vertex range.
struct Builder {
  int n = 0;
  std::vector<Edge> edges;

  int add_vertices(int count) {
    const int first = n;
    n += count;
    return first;
  }
  void add(Vertex a, Vertex b) { edges.emplace_back(std::min(a, b), std::max(a, b)); }
  void complete_bipartite(std::span<const Vertex> xs, std::span<const Vertex> ys) {
    for (Vertex a : xs) {
      for (Vertex b : ys) add(a, b);
    }
  }
  Graph build() const { return Graph::from_edges(n, edges); }
};

VertexSet shifted(std::span<const Vertex> vs, int offset) {
  VertexSet out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(v + offset);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int phi(int a, int b, int t) {
  if (t < 1 || a < 1 || a > t || b < 1 || b > t) {
    throw Error(Errc::RangeError, "phi needs 1 <= a, b <= t");
  }
  return 3 * t * (a - 1) + 3 * b;
}

GadgetChain gadget_chain(std::span<const int> x) {
  if (x.size() < 2) throw Error(Errc::BadSequence, "a chain needs at least two values");
  if (x[0] < 3) throw Error(Errc::BadSequence, "x_0 must be at least 3");
  for (std::size_t s = 1; s < x.size(); ++s) {
    if (x[s] - x[s - 1] < 3) throw Error(Errc::BadSequence, "consecutive values must differ by at least 3");
  }
  const int z = static_cast<int>(x.size()) - 1;
  GadgetChain chain;
  chain.x.assign(x.begin(), x.end());
  Builder b;
  chain.w.resize(idx(z + 1));
  for (int q = 0; q <= z; ++q) {
    const int dq = q == 0 ? x[0] : x[idx(q)] - x[idx(q - 1)];
    const bool end = q == 0 || q == z;
    const int size = end ? dq : dq - 1;
    const int first = b.add_vertices(size);
    for (int r = 0; r < size; ++r) chain.w[idx(q)].push_back(first + r);
    const int reach = end ? 3 : 2;
    for (int r = 0; r < size; ++r) {
      for (int s = r + 1; s < size && s - r <= reach; ++s) b.add(first + r, first + s);
    }
    if (q > 0) {
      const Vertex u = b.add_vertices(1);
      chain.u.push_back(u);
      for (int q2 : {q - 1, q}) {
        b.add(u, chain.w[idx(q2)][0]);
        b.add(u, chain.w[idx(q2)][1]);
      }
    }
  }
  chain.graph = b.build();
  chain.b = {chain.w[0][0], chain.w[0][1], chain.w[0][2]};
  chain.d = {chain.w[idx(z)][0], chain.w[idx(z)][1], chain.w[idx(z)][2]};
  std::sort(chain.b.begin(), chain.b.end());
  std::sort(chain.d.begin(), chain.d.end());
  return chain;
}

std::vector<VertexSet> chain_path_bags(const GadgetChain& chain) {
  const int z = static_cast<int>(chain.u.size());
  std::vector<VertexSet> bags;
  auto push = [&](VertexSet bag) {
    std::sort(bag.begin(), bag.end());
    bags.push_back(std::move(bag));
  };
  // P_0 is walked from its far end toward the vertices next to u_1.
  const auto& p0 = chain.w[0];
  for (int r = static_cast<int>(p0.size()) - 4; r >= 0; --r) {
    push({p0[idx(r)], p0[idx(r + 1)], p0[idx(r + 2)], p0[idx(r + 3)]});
  }
  if (p0.size() < 4) push(p0);
  for (int q = 1; q <= z; ++q) {
    const Vertex u = chain.u[idx(q - 1)];
    const auto& prev = chain.w[idx(q - 1)];
    const auto& cur = chain.w[idx(q)];
    push({prev[0], prev[1], u});
    if (q < z) {
      // Inner pieces hang off u_q and u_{q+1}; walk them back toward their first two vertices.
      for (int r = static_cast<int>(cur.size()) - 3; r >= 0; --r) push({u, cur[idx(r)], cur[idx(r + 1)], cur[idx(r + 2)]});
      if (cur.size() < 3) push({u, cur[0], cur[1]});
    } else {
      push({u, cur[0], cur[1]});
      for (std::size_t r = 0; r + 4 <= cur.size(); ++r) push({cur[r], cur[r + 1], cur[r + 2], cur[r + 3]});
      if (cur.size() < 4) push(cur);
    }
  }
  return bags;
}

void GridISInstance::normalize() {
  if (k < 1) throw Error(Errc::InvalidInput, "grid size must be positive");
  std::set<std::pair<Cell, Cell>> all;
  auto in_range = [&](const Cell& c) { return c.first >= 0 && c.first < k && c.second >= 0 && c.second < k; };
  for (auto [a, b] : edges) {
    if (!in_range(a) || !in_range(b)) throw Error(Errc::InvalidInput, "grid cell out of range");
    if (a == b) throw Error(Errc::InvalidInput, "grid self-loop");
    all.emplace(std::min(a, b), std::max(a, b));
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int h = 0; h < k; ++h) {
        if (h > j) all.emplace(Cell{i, j}, Cell{i, h});
        if (h > i) all.emplace(Cell{i, j}, Cell{h, j});
      }
    }
  }
  edges.assign(all.begin(), all.end());
}

bool is_permutation_is(const GridISInstance& grid, std::span<const int> columns) {
  const int k = grid.k;
  if (static_cast<int>(columns.size()) != k) return false;
  std::vector<char> used(idx(k), 0);
  for (int c : columns) {
    if (c < 0 || c >= k || used[idx(c)]) return false;
    used[idx(c)] = 1;
  }
  for (auto [a, b] : grid.edges) {
    if (columns[idx(a.first)] == a.second && columns[idx(b.first)] == b.second) return false;
  }
  return true;
}

GeneratedInstance gen_fixed_d(GridISInstance grid, int d, Mode variant, const std::optional<std::vector<int>>& planted) {
  if (d < 4) throw Error(Errc::InvalidInput, "the fixed-d construction needs d >= 4");
  grid.normalize();
  const int k = grid.k;
  const int m = static_cast<int>(grid.edges.size());
  if (planted && !is_permutation_is(grid, *planted)) {
    throw Error(Errc::NotAnIS, "planted columns are not a permutation independent set");
  }
  const int gsize = 3 * d - 2;

  // Per-edge copy: selectors r_0..r_{k-1}, c_0..c_{k-1}, then k^2 vertex gadgets in row-major
  // order. A vertex gadget is: path (d-3 vertices), plus vertex, two d-cycles.
  Builder b;
  std::vector<int> base(idx(m));
  for (int h = 0; h < m; ++h) base[idx(h)] = b.add_vertices(2 * k + k * k * gsize);
  auto r_of = [&](int h, int i) { return base[idx(h)] + i; };
  auto c_of = [&](int h, int j) { return base[idx(h)] + k + j; };
  auto gadget = [&](int h, int i, int j) { return base[idx(h)] + 2 * k + (i * k + j) * gsize; };
  auto gadget_vertices = [&](int h, int i, int j) {
    VertexSet out(idx(gsize));
    for (int s = 0; s < gsize; ++s) out[idx(s)] = gadget(h, i, j) + s;
    return out;
  };
  const int path_len = d - 3;
  auto end_a = [&](int h, int i, int j) { return gadget(h, i, j); };
  auto end_b = [&](int h, int i, int j) { return gadget(h, i, j) + path_len - 1; };
  auto plus = [&](int h, int i, int j) { return gadget(h, i, j) + path_len; };

  for (int h = 0; h < m; ++h) {
    const int next = (h + 1) % m;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const int g0 = gadget(h, i, j);
        for (int s = 0; s + 1 < path_len; ++s) b.add(g0 + s, g0 + s + 1);
        for (int cyc = 0; cyc < 2; ++cyc) {
          const int first = g0 + path_len + 1 + cyc * d;
          for (int s = 0; s < d; ++s) b.add(first + s, first + (s + 1) % d);
        }
        b.add(end_a(h, i, j), r_of(h, i));
        b.add(end_b(h, i, j), c_of(h, j));
        b.add(plus(h, i, j), r_of(next, i));
        b.add(plus(h, i, j), c_of(next, j));
        for (int j2 = j + 1; j2 < k; ++j2) b.complete_bipartite(gadget_vertices(h, i, j), gadget_vertices(h, i, j2));
      }
    }
    const auto [ea, eb] = grid.edges[idx(h)];
    b.complete_bipartite(gadget_vertices(h, ea.first, ea.second), gadget_vertices(h, eb.first, eb.second));
    if (variant == Mode::Block) {
      for (int j = 0; j + 1 < k; ++j) b.add(c_of(h, j), c_of(h, j + 1));
    }
  }

  GeneratedInstance out;
  out.vertices_formula = (static_cast<std::int64_t>(gsize) * k * k + 2 * k) * m;
  out.budget_formula = static_cast<std::int64_t>(gsize) * k * (k - 1) * m;
  out.bag_bound = static_cast<std::int64_t>(3 * d + 4) * k + 6 * d - 4;
  out.width_bound = out.bag_bound - 1;
  out.instance.graph = b.build();
  out.instance.d = d;
  out.instance.k = static_cast<int>(out.budget_formula);
  out.instance.family = PFamily(FamilyId::Cycles);
  out.instance.mode = variant;

  auto selectors = [&](int h) {
    VertexSet s;
    for (int i = 0; i < k; ++i) {
      s.push_back(r_of(h, i));
      s.push_back(c_of(h, i));
    }
    return s;
  };
  for (int h = 0; h < m; ++h) {
    VertexSet common = selectors(0);
    common = set_union(common, selectors(h));
    if (h + 1 < m) common = set_union(common, selectors(h + 1));
    const auto [ea, eb] = grid.edges[idx(h)];
    common = set_union(common, gadget_vertices(h, ea.first, ea.second));
    common = set_union(common, gadget_vertices(h, eb.first, eb.second));
    for (int i = 0; i < k; ++i) {
      VertexSet bag = common;
      for (int j = 0; j < k; ++j) bag = set_union(bag, gadget_vertices(h, i, j));
      out.decomposition.bags.push_back(std::move(bag));
    }
  }
  for (int s = 0; s + 1 < static_cast<int>(out.decomposition.bags.size()); ++s) {
    out.decomposition.tree_edges.emplace_back(s, s + 1);
  }

  if (planted) {
    VertexSet s;
    for (int h = 0; h < m; ++h) {
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          if (j == (*planted)[idx(i)]) continue;
          for (Vertex v : gadget_vertices(h, i, j)) s.push_back(v);
        }
      }
    }
    std::sort(s.begin(), s.end());
    out.planted = std::move(s);
  }
  return out;
}

void validate_colored(const ColoredGraph& g) {
  if (g.k < 2 || g.t < 1) throw Error(Errc::InvalidInput, "need k >= 2 classes of t >= 1 vertices");
  if (g.graph.n() != g.k * g.t) throw Error(Errc::InvalidInput, "vertex count must be k * t");
  std::map<std::pair<int, int>, int> count;
  for (auto [a, b] : g.graph.edges()) {
    const int ca = a / g.t, cb = b / g.t;
    if (ca == cb) throw Error(Errc::InvalidInput, "edge inside a color class");
    ++count[{std::min(ca, cb), std::max(ca, cb)}];
  }
  std::set<int> sizes;
  for (int i = 0; i < g.k; ++i) {
    for (int j = i + 1; j < g.k; ++j) sizes.insert(count[{i, j}]);
  }
  if (sizes.size() != 1 || *sizes.begin() < 1) {
    throw Error(Errc::InvalidInput, "every pair of classes needs the same positive number of edges");
  }
}

ColoredGraph random_colored_graph(int k, int t, int p, std::uint64_t seed, const std::optional<std::vector<int>>& planted) {
  if (k < 2 || t < 1 || p < 1 || p > t * t) throw Error(Errc::InvalidInput, "need k >= 2, t >= 1, 1 <= p <= t^2");
  if (planted) {
    if (static_cast<int>(planted->size()) != k) throw Error(Errc::InvalidInput, "planted clique needs one index per class");
    for (int a : *planted) {
      if (a < 0 || a >= t) throw Error(Errc::InvalidInput, "planted index out of range");
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::vector<std::pair<int, int>> pool;
      for (int a = 0; a < t; ++a) {
        for (int b = 0; b < t; ++b) pool.emplace_back(a, b);
      }
      // Fisher-Yates with plain modulo keeps the output identical across standard libraries.
      for (std::size_t s = pool.size(); s > 1; --s) std::swap(pool[s - 1], pool[rng() % s]);
      if (planted) {
        auto want = std::pair((*planted)[idx(i)], (*planted)[idx(j)]);
        std::iter_swap(pool.begin(), std::find(pool.begin(), pool.end(), want));
      }
      for (int s = 0; s < p; ++s) edges.emplace_back(i * t + pool[idx(s)].first, j * t + pool[idx(s)].second);
    }
  }
  return ColoredGraph{k, t, Graph::from_edges(k * t, edges)};
}

namespace {

struct EdgeGadgetSpec {
  int i = 0;  // 1-based class indices, i <= j
  int j = 0;
  std::vector<int> seq;
};

// Shared layout of the unbounded-d construction. `order` is the cyclic gadget order.
GeneratedInstance build_unbounded(int k, int t, const std::vector<EdgeGadgetSpec>& order,
                                  const std::optional<std::vector<int>>& gamma, bool cyclic_layout) {
  const int n_gadgets = static_cast<int>(order.size());
  Builder b;
  struct Placed {
    GadgetChain chain;
    int offset = 0;
    VertexSet bset, dset;
  };
  auto place = [&](GadgetChain chain) {
    Placed p;
    p.offset = b.add_vertices(chain.graph.n());
    for (auto [x, y] : chain.graph.edges()) b.add(x + p.offset, y + p.offset);
    p.bset = shifted(chain.b, p.offset);
    p.dset = shifted(chain.d, p.offset);
    p.chain = std::move(chain);
    return p;
  };

  std::vector<Placed> edge_gadgets;
  for (const auto& entry : order) edge_gadgets.push_back(place(gadget_chain(entry.seq)));

  std::vector<int> h_seq, ht_seq;
  for (int s = 1; s <= t + 1; ++s) {
    h_seq.push_back(3 * s);
    ht_seq.push_back(3 * t * s);
  }
  // Outgoing propagators of gadget g: by first index (a copy of H~_i) and by second index
  // (a copy of H_j), each leading to the next gadget in cyclic order sharing that index.
  struct Propagator {
    Placed placed;
    int cls = 0;  // 1-based color class it carries
    int from = 0;
    int to = 0;
  };
  std::vector<Propagator> props;
  std::vector<int> in_first(idx(n_gadgets)), in_second(idx(n_gadgets));
  std::vector<int> out_first(idx(n_gadgets)), out_second(idx(n_gadgets));
  for (int g = 0; g < n_gadgets; ++g) {
    for (int by_first : {1, 0}) {
      const int key = by_first ? order[idx(g)].i : order[idx(g)].j;
      int next = g;
      for (int s = 1; s <= n_gadgets; ++s) {
        const int cand = (g + s) % n_gadgets;
        if ((by_first ? order[idx(cand)].i : order[idx(cand)].j) == key) {
          next = cand;
          break;
        }
      }
      Propagator p{place(gadget_chain(by_first ? ht_seq : h_seq)), key, g, next};
      b.complete_bipartite(edge_gadgets[idx(g)].dset, p.placed.bset);
      b.complete_bipartite(p.placed.dset, edge_gadgets[idx(next)].bset);
      const int id = static_cast<int>(props.size());
      (by_first ? out_first : out_second)[idx(g)] = id;
      (by_first ? in_first : in_second)[idx(next)] = id;
      props.push_back(std::move(p));
    }
  }

  GeneratedInstance out;
  const std::int64_t d = 3LL * t * t + 3LL * t + 3;
  out.vertices_formula = (2 * d + 3) * n_gadgets;
  out.budget_formula = 3LL * n_gadgets;
  out.instance.graph = b.build();
  out.instance.d = static_cast<int>(d);
  out.instance.k = static_cast<int>(out.budget_formula);
  out.instance.family = PFamily(FamilyId::Chordal);
  out.instance.mode = Mode::Component;

  // Gadget bags of the auxiliary graph: G_1 plus two consecutive G_i, or all at once.
  std::vector<std::vector<int>> zbags;
  if (cyclic_layout && k >= 4) {
    auto cls = [&](int i) {
      std::vector<int> out_ids;
      for (int g = 0; g < n_gadgets; ++g) {
        if (order[idx(g)].i == i) out_ids.push_back(g);
      }
      return out_ids;
    };
    for (int s = 1; s <= k - 3; ++s) {
      std::vector<int> z = cls(1);
      for (int i : {s + 1, s + 2}) {
        auto more = cls(i);
        z.insert(z.end(), more.begin(), more.end());
      }
      zbags.push_back(std::move(z));
    }
  } else {
    std::vector<int> all(idx(n_gadgets));
    for (int g = 0; g < n_gadgets; ++g) all[idx(g)] = g;
    zbags.push_back(std::move(all));
  }
  std::size_t largest_z = 0;
  for (const auto& z : zbags) largest_z = std::max(largest_z, z.size());
  out.bag_bound = cyclic_layout ? 54LL * k - 68 : 18LL * static_cast<std::int64_t>(largest_z) + 4;
  out.width_bound = out.bag_bound - 1;

  std::vector<char> gadget_done(idx(n_gadgets), 0), prop_done(props.size(), 0);
  auto subpath = [&](const Placed& p, const VertexSet& q) {
    for (const auto& local : chain_path_bags(p.chain)) {
      VertexSet bag = set_union(q, shifted(local, p.offset));
      bag = set_union(bag, p.bset);
      bag = set_union(bag, p.dset);
      out.decomposition.bags.push_back(std::move(bag));
    }
  };
  for (const auto& z : zbags) {
    VertexSet q;
    std::set<int> members(z.begin(), z.end());
    for (int g : z) {
      q = set_union(q, props[idx(in_first[idx(g)])].placed.dset);
      q = set_union(q, props[idx(in_second[idx(g)])].placed.dset);
      q = set_union(q, edge_gadgets[idx(g)].bset);
      q = set_union(q, edge_gadgets[idx(g)].dset);
      q = set_union(q, props[idx(out_first[idx(g)])].placed.bset);
      q = set_union(q, props[idx(out_second[idx(g)])].placed.bset);
    }
    const std::size_t before = out.decomposition.bags.size();
    for (int g : z) {
      if (gadget_done[idx(g)]) continue;
      gadget_done[idx(g)] = 1;
      subpath(edge_gadgets[idx(g)], q);
    }
    for (std::size_t p = 0; p < props.size(); ++p) {
      if (prop_done[p] || !members.count(props[p].from) || !members.count(props[p].to)) continue;
      prop_done[p] = 1;
      subpath(props[p].placed, q);
    }
    if (out.decomposition.bags.size() == before) out.decomposition.bags.push_back(q);
  }
  if (std::find(prop_done.begin(), prop_done.end(), 0) != prop_done.end()) {
    throw std::logic_error("propagator left out of the path decomposition");
  }
  for (int s = 0; s + 1 < static_cast<int>(out.decomposition.bags.size()); ++s) {
    out.decomposition.tree_edges.emplace_back(s, s + 1);
  }

  if (gamma) {
    VertexSet s;
    for (int g = 0; g < n_gadgets; ++g) {
      const auto& entry = order[idx(g)];
      const int value = phi((*gamma)[idx(entry.i - 1)] + 1, (*gamma)[idx(entry.j - 1)] + 1, t);
      auto it = std::find(entry.seq.begin(), entry.seq.end() - 1, value);
      if (it == entry.seq.end() - 1) throw Error(Errc::NotAClique, "planted vertices miss an encoded edge");
      // Deleting u_q leaves x_{q-1} vertices on the left, so the value at index q-1 picks u_q.
      const auto q = static_cast<std::size_t>(it - entry.seq.begin());
      s.push_back(edge_gadgets[idx(g)].chain.u[q] + edge_gadgets[idx(g)].offset);
    }
    for (const auto& p : props) {
      s.push_back(p.placed.chain.u[idx((*gamma)[idx(p.cls - 1)])] + p.placed.offset);
    }
    std::sort(s.begin(), s.end());
    out.planted = std::move(s);
  }
  return out;
}

std::vector<int> encode(const std::vector<std::pair<int, int>>& pairs, int t) {
  std::vector<int> seq;
  for (auto [a, b] : pairs) seq.push_back(phi(a + 1, b + 1, t));
  std::sort(seq.begin(), seq.end());
  seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
  seq.push_back(3 * t * t + 3);
  return seq;
}

std::vector<int> diagonal(int t) {
  std::vector<int> seq;
  for (int a = 1; a <= t; ++a) seq.push_back(phi(a, a, t));
  seq.push_back(3 * t * t + 3);
  return seq;
}

}  // namespace

GeneratedInstance gen_unbounded_d(const ColoredGraph& g, const std::optional<std::vector<int>>& planted) {
  validate_colored(g);
  const int k = g.k, t = g.t;
  if (planted) {
    if (static_cast<int>(planted->size()) != k) throw Error(Errc::NotAClique, "planted clique needs one index per class");
    for (int i = 0; i < k; ++i) {
      const int a = (*planted)[idx(i)];
      if (a < 0 || a >= t) throw Error(Errc::NotAClique, "planted index out of range");
      for (int j = 0; j < i; ++j) {
        if (!g.graph.adjacent(j * t + (*planted)[idx(j)], i * t + a)) {
          throw Error(Errc::NotAClique, "planted vertices are not pairwise adjacent");
        }
      }
    }
  }
  std::vector<EdgeGadgetSpec> order;
  for (int i = 1; i <= k - 1; ++i) {
    for (int j = (i == 1 ? 2 : i); j <= k; ++j) {
      if (i == j) {
        order.push_back({i, j, diagonal(t)});
        continue;
      }
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < t; ++a) {
        for (int b2 = 0; b2 < t; ++b2) {
          if (g.graph.adjacent((i - 1) * t + a, (j - 1) * t + b2)) pairs.emplace_back(a, b2);
        }
      }
      order.push_back({i, j, encode(pairs, t)});
    }
  }
  auto out = build_unbounded(k, t, order, planted, true);
  // The closed forms of the construction, independent of the layout code above.
  const std::int64_t d = 3LL * t * t + 3LL * t + 3;
  out.vertices_formula = (2 * d + 3) * (binom2(k + 1) - 2);
  out.budget_formula = 3 * binom2(k + 1) - 6;
  return out;
}

GeneratedInstance gen_unbounded_d_si(const Graph& host, const Graph& pattern, const std::optional<std::vector<int>>& planted) {
  const int t = host.n(), k = pattern.n();
  if (k < 2 || t < 1) throw Error(Errc::InvalidInput, "need a pattern with at least two vertices and a nonempty host");
  if (host.m() == 0) throw Error(Errc::InvalidInput, "host graph has no edges");
  if (planted) {
    if (static_cast<int>(planted->size()) != k) throw Error(Errc::NotAClique, "embedding needs one host vertex per pattern vertex");
    std::set<int> seen;
    for (int a : *planted) {
      if (a < 0 || a >= t || !seen.insert(a).second) throw Error(Errc::NotAClique, "embedding is not injective");
    }
    for (auto [x, y] : pattern.edges()) {
      if (!host.adjacent((*planted)[idx(x)], (*planted)[idx(y)])) {
        throw Error(Errc::NotAClique, "embedding does not preserve a pattern edge");
      }
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : host.edges()) {
    pairs.emplace_back(a, b);
    pairs.emplace_back(b, a);
  }
  const auto seq = encode(pairs, t);
  std::vector<EdgeGadgetSpec> order;
  for (int i = 1; i <= k - 1; ++i) {
    for (int j = i; j <= k; ++j) {
      if (i == j && i >= 2) order.push_back({i, j, diagonal(t)});
      if (i < j && pattern.adjacent(i - 1, j - 1)) order.push_back({i, j, seq});
    }
  }
  if (order.empty()) throw Error(Errc::InvalidInput, "pattern graph has no edges");
  return build_unbounded(k, t, order, planted, false);
}

}  // namespace bpd

// bpd: command-line front end for the solver, the generators and the decomposition tools.
// Vertices are 1-based on the command line and in every file; 0-based inside the library.
// Exit codes: 0 YES or success, 1 NO or a failed check, 2 usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bpd/decomposition.hpp"
#include "bpd/error.hpp"
#include "bpd/gadgets.hpp"
#include "bpd/graph.hpp"
#include "bpd/labeling.hpp"
#include "bpd/oracle.hpp"
#include "bpd/solve.hpp"
#include "testkit.hpp"

namespace {

using nlohmann::ordered_json;
using namespace bpd;

constexpr const char* kSolveSchema = "bpd.solve/1";
constexpr const char* kGenSchema = "bpd.gen/1";
constexpr int kUsage = 2;

// Bad flag values detected after parsing; reported like parse errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> one_based(std::span<const Vertex> vs) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

std::vector<int> zero_based(const std::vector<int>& vs, int limit, const char* what) {
  std::vector<int> out;
  for (int v : vs) {
    if (v < 1 || v > limit) throw UsageError(std::string(what) + " entry out of range: " + std::to_string(v));
    out.push_back(v - 1);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

// ---- solve ----

struct SolveArgs {
  std::string mode, engine = "dp", family, graph, td;
  int d = 0, k = 0;
  bool witness = false, json = false;
};

int run_solve(const SolveArgs& a) {
  Instance inst;
  inst.mode = parse_mode(a.mode);
  inst.family = PFamily::parse(a.family);
  inst.d = a.d;
  inst.k = a.k;
  inst.graph = read_gr_file(a.graph);

  ordered_json out;
  out["schema"] = kSolveSchema;
  out["engine"] = a.engine;
  out["mode"] = std::string(to_string(inst.mode));
  out["family"] = std::string(inst.family.name());
  out["d"] = inst.d;
  out["k"] = inst.k;
  out["n"] = inst.graph.n();
  out["m"] = inst.graph.m();

  bool yes = false;
  std::optional<VertexSet> witness;
  if (a.engine == "oracle") {
    if (inst.d < 1 || inst.k < 0) throw Error(Errc::InvalidInput, "need d >= 1 and k >= 0");
    const auto r = brute_force_solve(inst);
    yes = r.feasible;
    if (yes) witness = r.solution;
    out["min_size"] = r.min_size;
  } else {
    std::optional<TreeDecomposition> td;
    if (!a.td.empty()) td = read_td_file(a.td);
    const auto r = solve(inst, td, SolveOptions{a.witness});
    yes = r.yes;
    witness = r.witness;
    out["stats"] = {{"width", r.stats.width},
                    {"nodes", r.stats.nodes},
                    {"states", r.stats.states},
                    {"retained", r.stats.retained},
                    {"max_family", r.stats.max_family},
                    {"within_rep_bound", r.stats.within_rep_bound}};
  }
  out["decision"] = yes ? "YES" : "NO";
  if (a.witness && witness) out["witness"] = one_based(*witness);

  if (a.json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << (yes ? "YES" : "NO") << '\n';
    if (a.witness && witness) {
      std::cout << "witness:";
      for (int v : one_based(*witness)) std::cout << ' ' << v;
      std::cout << '\n';
    }
  }
  return yes ? 0 : 1;
}

// ---- verify ----

struct VerifyArgs {
  std::string mode, family, graph, set;
  int d = 0;
  int k = -1;
};

int run_verify(const VerifyArgs& a) {
  const Graph g = read_gr_file(a.graph);
  std::ifstream in(a.set);
  if (!in) throw Error(Errc::ParseError, "cannot open " + a.set);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::vector<int> listed;
  if (text.find('{') != std::string::npos) {
    const auto j = ordered_json::parse(text);
    if (!j.contains("planted")) throw Error(Errc::ParseError, "sidecar has no planted set");
    listed = j.at("planted").get<std::vector<int>>();
  } else {
    std::istringstream words(text);
    for (int v; words >> v;) listed.push_back(v);
    if (!words.eof()) throw Error(Errc::ParseError, "deletion set must list integers");
  }
  auto s = zero_based(listed, g.n(), "deletion set");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const bool ok = verify_solution(g, s, a.d, PFamily::parse(a.family), parse_mode(a.mode)) &&
                  (a.k < 0 || static_cast<int>(s.size()) <= a.k);
  std::cout << (ok ? "VALID" : "INVALID") << " size " << s.size() << '\n';
  return ok ? 0 : 1;
}

// ---- gen ----

struct GenArgs {
  std::string out;
  std::uint32_t seed = 1;
  std::vector<int> planted;
  // perm-is
  int k = 0, d = 4, extra = 0;
  std::string variant = "component";
  // clique
  int t = 0, p = 0;
  // subgraph-iso
  std::string host, pattern;
};

int emit(const GeneratedInstance& g, const std::string& prefix, ordered_json params) {
  std::ostringstream gr, td;
  write_gr(gr, g.instance.graph);
  write_td(td, g.decomposition, g.instance.graph.n());
  ordered_json side;
  side["schema"] = kGenSchema;
  side["params"] = std::move(params);
  side["instance"] = {{"mode", std::string(to_string(g.instance.mode))},
                      {"family", std::string(g.instance.family.name())},
                      {"d", g.instance.d},
                      {"k", g.instance.k},
                      {"n", g.instance.graph.n()},
                      {"m", g.instance.graph.m()}};
  side["formulas"] = {{"budget", g.budget_formula},
                      {"d", g.instance.d},
                      {"vertices", g.vertices_formula},
                      {"bag_bound", g.bag_bound},
                      {"width_bound", g.width_bound}};
  side["decomposition"] = {{"bags", g.decomposition.bags.size()}, {"width", g.decomposition.width()}};
  if (g.planted) side["planted"] = one_based(*g.planted);
  write_file(prefix + ".gr", gr.str());
  write_file(prefix + ".td", td.str());
  write_file(prefix + ".json", side.dump(2) + "\n");
  std::cout << "wrote " << prefix << ".gr " << prefix << ".td " << prefix << ".json\n";
  return 0;
}

int run_gen_perm_is(const GenArgs& a) {
  if (a.k < 1) throw UsageError("-k must be positive");
  std::optional<std::vector<int>> planted;
  if (!a.planted.empty()) planted = zero_based(a.planted, a.k, "--planted");
  GridISInstance grid;
  grid.k = a.k;
  // Extra conflicts between cells in distinct rows and columns, avoiding the planted cells.
  std::vector<std::pair<GridISInstance::Cell, GridISInstance::Cell>> candidates;
  for (int i = 0; i < a.k; ++i) {
    for (int j = 0; j < a.k; ++j) {
      for (int i2 = i + 1; i2 < a.k; ++i2) {
        for (int j2 = 0; j2 < a.k; ++j2) {
          if (j2 == j) continue;
          if (planted && (*planted)[static_cast<std::size_t>(i)] == j && (*planted)[static_cast<std::size_t>(i2)] == j2) continue;
          candidates.push_back({{i, j}, {i2, j2}});
        }
      }
    }
  }
  std::mt19937 rng(a.seed);
  for (std::size_t s = candidates.size(); s > 1; --s) std::swap(candidates[s - 1], candidates[rng() % s]);
  if (a.extra < 0 || static_cast<std::size_t>(a.extra) > candidates.size()) throw UsageError("--extra out of range");
  grid.edges.assign(candidates.begin(), candidates.begin() + a.extra);
  const auto g = gen_fixed_d(grid, a.d, parse_mode(a.variant), planted);
  ordered_json params = {{"kind", "perm-is"}, {"k", a.k}, {"d", a.d}, {"variant", a.variant},
                         {"seed", a.seed}, {"extra", a.extra}};
  auto normalized = grid;
  normalized.normalize();
  params["grid_edges"] = normalized.edges.size();
  return emit(g, a.out, std::move(params));
}

int run_gen_clique(const GenArgs& a) {
  std::optional<std::vector<int>> planted;
  if (!a.planted.empty()) planted = zero_based(a.planted, a.t, "--planted");
  const int p = a.p > 0 ? a.p : a.t;
  const auto colored = random_colored_graph(a.k, a.t, p, a.seed, planted);
  const auto g = gen_unbounded_d(colored, planted);
  ordered_json params = {{"kind", "clique"}, {"k", a.k}, {"t", a.t}, {"p", p}, {"seed", a.seed}};
  std::vector<std::vector<int>> edges;
  for (auto [x, y] : colored.graph.edges()) edges.push_back({x + 1, y + 1});
  params["source_edges"] = edges;
  return emit(g, a.out, std::move(params));
}

int run_gen_si(const GenArgs& a) {
  const Graph host = read_gr_file(a.host);
  const Graph pattern = read_gr_file(a.pattern);
  std::optional<std::vector<int>> planted;
  if (!a.planted.empty()) planted = zero_based(a.planted, host.n(), "--planted");
  const auto g = gen_unbounded_d_si(host, pattern, planted);
  ordered_json params = {{"kind", "subgraph-iso"}, {"host_n", host.n()}, {"pattern_n", pattern.n()}};
  return emit(g, a.out, std::move(params));
}

// ---- td ----

struct TdArgs {
  std::string graph, td, out;
  int limit = kExactTdDefaultLimit;
};

void write_td_to(const TdArgs& a, const TreeDecomposition& td, int n) {
  std::ostringstream s;
  write_td(s, td, n);
  if (a.out.empty()) {
    std::cout << s.str();
  } else {
    write_file(a.out, s.str());
  }
}

int run_td_validate(const TdArgs& a) {
  const Graph g = read_gr_file(a.graph);
  const auto td = read_td_file(a.td);
  const auto report = validate_td(g, td);
  if (report.ok) {
    std::cout << "valid width " << td.width() << '\n';
    return 0;
  }
  std::cout << "invalid condition " << report.condition << ": " << report.message;
  if (!report.witness.empty()) {
    std::cout << " (";
    for (std::size_t i = 0; i < report.witness.size(); ++i) std::cout << (i ? " " : "") << report.witness[i] + 1;
    std::cout << ')';
  }
  std::cout << '\n';
  return 1;
}

const char* kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Introduce: return "introduce";
    case NodeKind::Forget: return "forget";
    case NodeKind::Join: return "join";
  }
  return "?";
}

int run_td_nice(const TdArgs& a) {
  const Graph g = read_gr_file(a.graph);
  const auto td = a.td.empty() ? default_td(g) : read_td_file(a.td);
  const auto ntd = to_nice(g, td);
  std::cout << "nodes " << ntd.nodes.size() << " width " << ntd.width() << '\n';
  for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
    const auto& node = ntd.nodes[i];
    std::cout << i + 1 << ' ' << kind_name(node.kind);
    if (node.vertex >= 0) std::cout << ' ' << node.vertex + 1;
    std::cout << " children";
    for (int c : node.children) std::cout << ' ' << c + 1;
    std::cout << " bag";
    for (Vertex v : node.bag) std::cout << ' ' << v + 1;
    std::cout << '\n';
  }
  return 0;
}

// ---- enum-ud ----

int run_enum_ud(int d, const std::string& family, bool components, bool json) {
  const auto fam = PFamily::parse(family);
  const auto ud = components ? enumerate_Ud_components(d, fam) : enumerate_Ud(d, fam);
  if (json) {
    ordered_json out;
    out["d"] = d;
    out["family"] = std::string(fam.name());
    out["components"] = components;
    out["count"] = ud.patterns.size();
    std::vector<std::string> ps;
    for (const auto& p : ud.patterns) ps.push_back(p.to_string());
    out["patterns"] = ps;
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& p : ud.patterns) std::cout << p.to_string() << '\n';
  }
  return 0;
}

// ---- selftest ----

int run_selftest(std::uint32_t seed) {
  using namespace bpd::testkit;
  const std::vector<SuiteReport> reports = {
      oracle_equivalence(Mode::Block, 100, seed),
      oracle_equivalence(Mode::Component, 100, seed + 1),
      fvs_crosscheck(50, seed + 2),
      part_count_identity(6),
      coarsening_observation(5),
      repset_property(100, seed + 3),
      chordal_sum_property(200, seed + 4),
      characteristic_equivalence(200, seed + 5),
  };
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.ok();
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " trials=" << r.trials << " failures=" << r.failures;
    if (!r.detail.empty()) std::cout << " first: " << r.detail;
    std::cout << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded block and component vertex deletion on graphs of bounded treewidth"};
  app.require_subcommand(1);
  std::function<int()> action;

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance");
  solve_cmd->add_option("--mode", sa.mode, "block or component")->required()->check(CLI::IsMember({"block", "component"}));
  solve_cmd->add_option("--engine", sa.engine, "dp or oracle")->check(CLI::IsMember({"dp", "oracle"}));
  solve_cmd->add_option("--family", sa.family, "k1k2, cliques, chordal, cycles or all")->required();
  solve_cmd->add_option("-d", sa.d, "Size bound")->required();
  solve_cmd->add_option("-k", sa.k, "Deletion budget")->required();
  solve_cmd->add_option("--graph", sa.graph, "PACE .gr file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--td", sa.td, "PACE .td file")->check(CLI::ExistingFile);
  solve_cmd->add_flag("--witness", sa.witness, "Report a deletion set");
  solve_cmd->add_flag("--json", sa.json, "JSON output");
  solve_cmd->callback([&] { action = [&] { return run_solve(sa); }; });

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Check a deletion set with the oracle verifier");
  verify_cmd->add_option("--mode", va.mode, "block or component")->required()->check(CLI::IsMember({"block", "component"}));
  verify_cmd->add_option("--family", va.family, "Family identifier")->required();
  verify_cmd->add_option("-d", va.d, "Size bound")->required();
  verify_cmd->add_option("-k", va.k, "Optional budget");
  verify_cmd->add_option("--graph", va.graph, "PACE .gr file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--set", va.set, "Vertex list, or a gen sidecar with a planted set")->required()->check(CLI::ExistingFile);
  verify_cmd->callback([&] { action = [&] { return run_verify(va); }; });

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated instance as PREFIX.gr, PREFIX.td, PREFIX.json");
  gen_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", ga.out, "Output prefix")->required();
    c->add_option("--planted", ga.planted, "Planted solution, comma separated, 1-based")->delimiter(',');
  };
  auto* perm = gen_cmd->add_subcommand("perm-is", "Fixed-d construction from a permutation independent set instance");
  perm->add_option("-k", ga.k, "Grid size")->required();
  perm->add_option("-d", ga.d, "Size bound (at least 4)");
  perm->add_option("--variant", ga.variant, "component or block")->check(CLI::IsMember({"block", "component"}));
  perm->add_option("--extra", ga.extra, "Random extra conflicts between grid cells");
  perm->add_option("--seed", ga.seed, "Seed for the extra conflicts");
  add_common(perm);
  perm->callback([&] { action = [&] { return run_gen_perm_is(ga); }; });
  auto* clique = gen_cmd->add_subcommand("clique", "Unbounded-d construction from multicolored clique");
  clique->add_option("-k", ga.k, "Number of color classes")->required();
  clique->add_option("-t", ga.t, "Vertices per class")->required();
  clique->add_option("-p", ga.p, "Edges per pair of classes (default t)");
  clique->add_option("--seed", ga.seed, "Seed for the colored graph");
  add_common(clique);
  clique->callback([&] { action = [&] { return run_gen_clique(ga); }; });
  auto* si = gen_cmd->add_subcommand("subgraph-iso", "Unbounded-d construction from subgraph isomorphism");
  si->add_option("--host", ga.host, "Host graph (.gr)")->required()->check(CLI::ExistingFile);
  si->add_option("--pattern", ga.pattern, "Pattern graph (.gr)")->required()->check(CLI::ExistingFile);
  add_common(si);
  si->callback([&] { action = [&] { return run_gen_si(ga); }; });

  TdArgs ta;
  auto* td_cmd = app.add_subcommand("td", "Tree decomposition utilities");
  td_cmd->require_subcommand(1);
  auto* td_validate = td_cmd->add_subcommand("validate", "Check a decomposition");
  td_validate->add_option("--graph", ta.graph)->required()->check(CLI::ExistingFile);
  td_validate->add_option("--td", ta.td)->required()->check(CLI::ExistingFile);
  td_validate->callback([&] { action = [&] { return run_td_validate(ta); }; });
  auto* td_heur = td_cmd->add_subcommand("heuristic", "Min-fill decomposition");
  td_heur->add_option("--graph", ta.graph)->required()->check(CLI::ExistingFile);
  td_heur->add_option("--out", ta.out, "Output file (default stdout)");
  td_heur->callback([&] {
    action = [&] {
      const Graph g = read_gr_file(ta.graph);
      write_td_to(ta, heuristic_td(g), g.n());
      return 0;
    };
  });
  auto* td_exact = td_cmd->add_subcommand("exact", "Optimal decomposition for small graphs");
  td_exact->add_option("--graph", ta.graph)->required()->check(CLI::ExistingFile);
  td_exact->add_option("--limit", ta.limit, "Largest vertex count accepted");
  td_exact->add_option("--out", ta.out, "Output file (default stdout)");
  td_exact->callback([&] {
    action = [&] {
      const Graph g = read_gr_file(ta.graph);
      write_td_to(ta, exact_td_small(g, ta.limit), g.n());
      return 0;
    };
  });
  auto* td_nice = td_cmd->add_subcommand("nice", "Print the nice decomposition");
  td_nice->add_option("--graph", ta.graph)->required()->check(CLI::ExistingFile);
  td_nice->add_option("--td", ta.td, "Input decomposition (default: computed)")->check(CLI::ExistingFile);
  td_nice->callback([&] { action = [&] { return run_td_nice(ta); }; });

  int ud_d = 0;
  std::string ud_family;
  bool ud_components = false, ud_json = false;
  auto* ud_cmd = app.add_subcommand("enum-ud", "List the pattern universe");
  ud_cmd->add_option("-d", ud_d, "Size bound")->required();
  ud_cmd->add_option("--family", ud_family, "Family identifier")->required();
  ud_cmd->add_flag("--components", ud_components, "Component universe instead of block universe");
  ud_cmd->add_flag("--json", ud_json, "JSON output");
  ud_cmd->callback([&] { action = [&] { return run_enum_ud(ud_d, ud_family, ud_components, ud_json); }; });

  std::uint32_t st_seed = 20240601;
  auto* st_cmd = app.add_subcommand("selftest", "Run the oracle-equivalence and lemma property suites");
  st_cmd->add_option("--seed", st_seed, "Base seed");
  st_cmd->callback([&] { action = [&] { return run_selftest(st_seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error [ParseError]: " << e.what() << '\n';
  }
  return kUsage;
}

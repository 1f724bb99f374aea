#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "bpd/error.hpp"
#include "bpd/graph.hpp"

namespace bpd {

Graph read_gr(std::istream& in) {
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, tw;
      if (!(ls >> p >> tw >> n >> m) || tw != "tw" || n < 0 || m < 0) {
        throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": bad header");
      }
      continue;
    }
    if (n < 0) throw Error(Errc::ParseError, "edge before header");
    int u = 0, v = 0;
    if (!(ls >> u >> v)) {
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": bad edge");
    }
    if (u < 1 || v < 1 || u > n || v > n) {
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": vertex out of range");
    }
    edges.emplace_back(u - 1, v - 1);
  }
  if (n < 0) throw Error(Errc::ParseError, "missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw Error(Errc::ParseError, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

Graph read_gr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return read_gr(in);
}

void write_gr(std::ostream& out, const Graph& g) {
  out << "p tw " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace bpd

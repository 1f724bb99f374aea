#pragma once

// Test-side oracles and randomized property suites. Shared by the unit tests, the
// acceptance binary and `bpd selftest`; nothing here is part of the installed library.

#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "bpd/graph.hpp"
#include "bpd/instance.hpp"

namespace bpd::testkit {

// mt19937 draws reduced with `%` so that sequences match across standard libraries.
using Rng = std::mt19937;

// Uniform in [lo, hi].
int pick(Rng& rng, int lo, int hi);
// G(n, percent/100).
Graph random_graph(Rng& rng, int n, int percent);
// Random k-tree on n vertices, restricted to a random vertex subset; always chordal.
Graph random_chordal(Rng& rng, int n, int k);

// Searches induced paths for a chordless cycle of length at least 4.
bool has_chordless_cycle(const Graph& g);
// Smallest feedback vertex set size by subset enumeration.
int min_fvs(const Graph& g);
// Connected, at least two vertices, and no single vertex whose removal disconnects.
bool is_biconnected_brute(const Graph& g, std::span<const Vertex> vertices);

struct SuiteReport {
  std::string name;
  int trials = 0;
  int failures = 0;
  int nontrivial = 0;  // suite-specific count of interesting cases (see each suite)
  double seconds = 0.0;
  std::string detail;  // first failure, if any

  bool ok() const { return failures == 0 && trials > 0; }
};

// Random graphs with n <= 12 and exact treewidth <= 4, d in {2,3,4}, k <= 4, families
// k1k2, cliques, chordal. DP decision (with witness re-check) against brute force.
// nontrivial = YES instances.
SuiteReport oracle_equivalence(Mode mode, int count, std::uint32_t seed);

// k1k2, d = 3, block mode against a subset-enumeration feedback vertex set.
// nontrivial = YES instances.
SuiteReport fvs_crosscheck(int count, std::uint32_t seed);

// Random families over ground sets of size 1..max_m: rep_partitions passes
// verify_representative, respects m * 2^(m-1), and every reduced bucket has at most
// 2^(m-1) members. nontrivial = families that were strictly shrunk.
SuiteReport repset_property(int count, std::uint32_t seed, int max_m = 6);

// Compatible chordal pairs whose sum has only chordal S-blocks: the sum is chordal iff
// the joint incidence graph of the two Aux partitions is a forest. nontrivial = non-chordal sums.
SuiteReport chordal_sum_property(int count, std::uint32_t seed);

// Triples (G1,S), (G2,S), (H,S) of labeled block graphs with a shared characteristic and an
// acyclic Aux(G2) + Aux(H): whenever G1 + H is a labeled block graph respecting the
// characteristic, so is G2 + H. nontrivial = triples where the premise on G1 + H held.
SuiteReport characteristic_equivalence(int count, std::uint32_t seed);

// For all partition pairs with connected incidence graph on m <= max_m elements:
// acyclic iff the part counts sum to m + 1.
SuiteReport part_count_identity(int max_m);

// For all partition pairs on m <= max_m elements: acyclic iff some 1-coarsening of the
// first makes the incidence graph connected and acyclic.
SuiteReport coarsening_observation(int max_m);

}  // namespace bpd::testkit

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cheeger/graph.hpp"
#include "cheeger/partition.hpp"
#include "cheeger/rational.hpp"

namespace cheeger {

// One isomorphism class of graphs, with the facts the conjecture report
// cares about.
struct GraphClassInfo {
  Graph graph;                         // the canonical representative
  std::string canonical_hex;
  Rational h;
  bool triangle_free = false;
  bool bipartite = false;
  std::optional<Partition> staircase;  // recognized shape, if any
};

struct SearchReport {
  int n = 0;
  Rational h_value;                          // exact minimum of h over cut-minimal graphs
  std::vector<GraphClassInfo> cheeger_graphs;  // all minimizers up to isomorphism
  long long isomorphism_classes_visited = 0;
  double wall_time_seconds = 0.0;
};

struct ConjectureVerdicts {
  int n = 0;
  bool all_triangle_free = false;
  bool all_bipartite = false;
  long long non_staircase_count = 0;  // Cheeger classes without a staircase form
  SearchReport report;
};

// One representative per isomorphism class of cut-minimal graphs with at
// least one edge, sorted by canonical form.  Requires 3 <= n <= 8.
std::vector<Graph> enumerate_cut_minimal(int n, int jobs = 1);

// Exact h(n) = min h(G) over cut-minimal graphs with edges, with every
// minimizing class.  Requires 3 <= n <= 8.
SearchReport cheeger_number(int n, int jobs = 1);

// Cheeger classes annotated with the triangle-free / bipartite / staircase
// facts.  Requires 3 <= n <= 8.
ConjectureVerdicts conjecture_report(int n, int jobs = 1);

// Same level-by-level scan as cheeger_number but discarding classes whose h
// already exceeds the best value seen.  h is not monotone under edge
// addition, so this is a heuristic: used only as a cross-check.
Rational pruned_min_h_scan(int n);

struct HTableRow {
  int n = 0;
  Rational lower;
  Rational upper;
  std::optional<Rational> exact;
  std::string source;
};

// Bounds table for 3 <= n <= n_max (n_max <= 512): exhaustive search below
// 9, the odd-factor blowup construction when n is not a power of two, and
// the power-of-two staircase family bound otherwise.
std::vector<HTableRow> h_table(int n_max, int jobs = 1);

}  // namespace cheeger

#include "cheeger/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

void check_n(int n) {
  if (n < 3) throw std::invalid_argument("search needs n >= 3");
  if (n > 8)
    throw InfeasibleError("exhaustive class enumeration supports n <= 8");
}

// All classes reachable from `reps` by adding one edge, as canonical bit
// strings.  Valency-capped before the cut check.
std::vector<std::uint64_t> expand_level(int n, const std::vector<std::uint64_t>& reps,
                                        int jobs) {
  const int valency_cap = (n - 1) / 2;
  auto expand_range = [&](size_t lo, size_t hi, std::vector<std::uint64_t>& out) {
    for (size_t i = lo; i < hi; ++i) {
      Graph g = Graph::from_packed_bits(n, reps[i]);
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          if (g.has_edge(u, v)) continue;
          if (g.degree(u) >= valency_cap || g.degree(v) >= valency_cap) continue;
          Graph h = g.with_edge(u, v);
          if (h.cut_minimality_witness().has_value()) continue;
          out.push_back(h.canonical_bits());
        }
      }
    }
  };
  std::vector<std::uint64_t> merged;
  if (jobs <= 1 || reps.size() < 2) {
    expand_range(0, reps.size(), merged);
  } else {
    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), reps.size());
    std::vector<std::vector<std::uint64_t>> parts(workers);
    std::vector<std::thread> threads;
    for (size_t w = 0; w < workers; ++w) {
      size_t lo = reps.size() * w / workers;
      size_t hi = reps.size() * (w + 1) / workers;
      threads.emplace_back([&, lo, hi, w] { expand_range(lo, hi, parts[w]); });
    }
    for (auto& t : threads) t.join();
    for (auto& p : parts) merged.insert(merged.end(), p.begin(), p.end());
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

std::vector<std::vector<std::uint64_t>> levels_of_classes(int n, int jobs) {
  check_n(n);
  // level k holds the classes with k+1 edges; a single edge is always
  // cut-minimal (one edge across every cut separating its endpoints,
  // against at least n-2 >= 1 non-edges)
  std::vector<std::vector<std::uint64_t>> levels;
  levels.push_back({Graph::from_edges(n, {{0, 1}}).canonical_bits()});
  while (true) {
    std::vector<std::uint64_t> next = expand_level(n, levels.back(), jobs);
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

GraphClassInfo class_info(const Graph& g) {
  GraphClassInfo info{g, g.canonical_hex(), g.h(), g.triangle_free(), g.bipartite(),
                      g.staircase_form()};
  return info;
}

bool is_power_of_two(int n) { return (n & (n - 1)) == 0; }

}  // namespace

std::vector<Graph> enumerate_cut_minimal(int n, int jobs) {
  std::vector<std::uint64_t> all;
  for (const auto& level : levels_of_classes(n, jobs))
    all.insert(all.end(), level.begin(), level.end());
  std::sort(all.begin(), all.end());
  std::vector<Graph> out;
  out.reserve(all.size());
  for (std::uint64_t bits : all) out.push_back(Graph::from_packed_bits(n, bits));
  return out;
}

SearchReport cheeger_number(int n, int jobs) {
  auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.n = n;
  bool any = false;
  Rational best;
  std::vector<std::uint64_t> best_bits;
  for (const auto& level : levels_of_classes(n, jobs)) {
    report.isomorphism_classes_visited += static_cast<long long>(level.size());
    for (std::uint64_t bits : level) {
      Rational h = Graph::from_packed_bits(n, bits).h();
      if (!any || h < best) {
        any = true;
        best = h;
        best_bits.clear();
      }
      if (h == best) best_bits.push_back(bits);
    }
  }
  if (!any) throw std::logic_error("no cut-minimal graph with edges found");
  report.h_value = best;
  std::sort(best_bits.begin(), best_bits.end());
  for (std::uint64_t bits : best_bits)
    report.cheeger_graphs.push_back(class_info(Graph::from_packed_bits(n, bits)));
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ConjectureVerdicts conjecture_report(int n, int jobs) {
  ConjectureVerdicts v;
  v.n = n;
  v.report = cheeger_number(n, jobs);
  v.all_triangle_free = true;
  v.all_bipartite = true;
  for (const auto& info : v.report.cheeger_graphs) {
    v.all_triangle_free = v.all_triangle_free && info.triangle_free;
    v.all_bipartite = v.all_bipartite && info.bipartite;
    if (!info.staircase.has_value()) ++v.non_staircase_count;
  }
  return v;
}

Rational pruned_min_h_scan(int n) {
  check_n(n);
  std::vector<std::uint64_t> level = {Graph::from_edges(n, {{0, 1}}).canonical_bits()};
  bool any = false;
  Rational best;
  while (!level.empty()) {
    std::vector<std::pair<Rational, std::uint64_t>> scored;
    for (std::uint64_t bits : level)
      scored.emplace_back(Graph::from_packed_bits(n, bits).h(), bits);
    for (const auto& [h, bits] : scored)
      if (!any || h < best) {
        any = true;
        best = h;
      }
    std::vector<std::uint64_t> kept;  // heuristic: only classes matching the incumbent
    for (const auto& [h, bits] : scored)
      if (h == best) kept.push_back(bits);
    level = expand_level(n, kept, 1);
  }
  return best;
}

std::vector<HTableRow> h_table(int n_max, int jobs) {
  if (n_max < 3) throw std::invalid_argument("the table starts at n = 3");
  if (n_max > 512) throw InfeasibleError("the table supports n_max <= 512");
  std::vector<HTableRow> rows;
  for (int n = 3; n <= n_max; ++n) {
    HTableRow row;
    row.n = n;
    row.lower = Rational(n, 3);
    if (n <= 8) {
      row.exact = cheeger_number(n, jobs).h_value;
      row.upper = *row.exact;
      row.source = "exhaustive-search";
    } else if (!is_power_of_two(n)) {
      // n = c(2t+1): the blown-up corner staircase is exactly n/3-expanding
      row.exact = Rational(n, 3);
      row.upper = Rational(n, 3);
      row.source = "corner-blowup";
    } else {
      row.upper = Rational(n, 3) + Partition::power_of_two_family(n / 4).deficiency();
      row.source = "pow2-family-bound";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cheeger

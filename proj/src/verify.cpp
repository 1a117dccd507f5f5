#include "cheeger/verify.hpp"

#include <map>
#include <random>
#include <sstream>

#include "cheeger/cm_complex.hpp"
#include "cheeger/cochain.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/partition.hpp"
#include "cheeger/rational.hpp"
#include "cheeger/search.hpp"

namespace cheeger {

namespace {

std::string join_ll(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

struct Context {
  int jobs = 1;
  std::map<int, SearchReport> searches;
  std::map<int, std::vector<Graph>> classes;

  const SearchReport& search(int n) {
    auto it = searches.find(n);
    if (it == searches.end()) it = searches.emplace(n, cheeger_number(n, jobs)).first;
    return it->second;
  }
  const std::vector<Graph>& class_list(int n) {
    auto it = classes.find(n);
    if (it == classes.end()) it = classes.emplace(n, enumerate_cut_minimal(n, jobs)).first;
    return it->second;
  }
};

ClaimResult claim_a1(Context& ctx) {
  const std::vector<std::pair<int, Rational>> expected = {
      {3, Rational(1)},     {4, Rational(2)}, {5, Rational(5, 3)},
      {6, Rational(2)},     {7, Rational(7, 3)}, {8, Rational(20, 7)}};
  std::ostringstream exp, got;
  bool pass = true;
  for (auto& [n, e] : expected) {
    Rational v = ctx.search(n).h_value;
    exp << (n > 3 ? ", " : "") << "h(" << n << ")=" << e.str();
    got << (n > 3 ? ", " : "") << "h(" << n << ")=" << v.str();
    pass = pass && v == e;
  }
  return {"A1", "exact minima of the edge-expansion functional over cut-minimal graphs, n=3..8",
          exp.str(), got.str(), pass, false};
}

ClaimResult claim_a2(Context& ctx) {
  std::ostringstream exp, got;
  bool pass = true;
  for (int n : {4, 5, 6}) {
    Rational via_search = ctx.search(n).h_value;
    Rational via_cochains = cheeger_constant(n, 1, true, ctx.jobs).h;
    exp << (n > 4 ? ", " : "") << "n=" << n << ": equal";
    got << (n > 4 ? ", " : "") << "n=" << n << ": " << via_cochains.str()
        << (via_cochains == via_search ? " = " : " != ") << via_search.str();
    pass = pass && via_cochains == via_search;
  }
  return {"A2", "dimension-1 cochain brute force agrees with the graph search, n=4..6",
          exp.str(), got.str(), pass, false};
}

ClaimResult claim_a3(Context&) {
  bool pass = true;
  std::ostringstream got;
  ComplexSummary c3 = cut_minimal_complex(3, true, false);
  ComplexSummary c4 = cut_minimal_complex(4, true, false);
  ComplexSummary c5 = cut_minimal_complex(5, true, true);
  pass = pass && c3.f_vector == std::vector<long long>{3};
  pass = pass && c4.f_vector == std::vector<long long>{6, 3};
  pass = pass && c5.f_vector == std::vector<long long>{10, 45, 100, 10};
  pass = pass && c3.betti_gf2 == std::vector<long long>{3};
  pass = pass && c4.betti_gf2 == std::vector<long long>{3, 0};
  pass = pass && c5.betti_gf2 == std::vector<long long>{1, 0, 54, 0};
  pass = pass && c5.maximal_by_dim == std::vector<long long>{0, 0, 60, 10};
  got << "f(3)=" << join_ll(c3.f_vector) << ", f(4)=" << join_ll(c4.f_vector)
      << ", f(5)=" << join_ll(c5.f_vector) << ", betti(3)=" << join_ll(c3.betti_gf2)
      << ", betti(4)=" << join_ll(c4.betti_gf2) << ", betti(5)=" << join_ll(c5.betti_gf2)
      << ", maximal(5)=" << join_ll(c5.maximal_by_dim);
  return {"A3", "cut-minimal complex: f-vectors, GF(2) Betti numbers, maximal faces",
          "f(3)=(3), f(4)=(6,3), f(5)=(10,45,100,10), betti(3)=(3), betti(4)=(3,0), "
          "betti(5)=(1,0,54,0), maximal(5)=(0,0,60,10)",
          got.str(), pass, false};
}

ClaimResult claim_a4(Context& ctx) {
  bool pass = true;
  std::ostringstream got;
  for (int n : {5, 6}) {
    CheegerKResult r = cheeger_constant(n, n - 3, true, ctx.jobs);
    bool ok = r.h == Rational(2) && r.max_cosystole_expansion == Rational(2);
    pass = pass && ok;
    got << (n > 5 ? ", " : "") << "n=" << n << ": min=" << r.h.str()
        << ", max=" << r.max_cosystole_expansion.str() << " over " << r.cosystole_count
        << " cosystoles";
  }
  return {"A4",
          "codimension-2 constant is 2, and every nonzero cosystole there expands by exactly 2 "
          "(n=5,6)",
          "n=5: min=2, max=2; n=6: min=2, max=2", got.str(), pass, false};
}

ClaimResult claim_a5(Context&) {
  bool pass = true;
  std::ostringstream got;
  for (long long t = 1; t <= 15; ++t) {
    Partition cor = Partition::staircase(t);
    bool ok = cor.n_min() == 2 * t + 1 && cor.h() == Rational(2 * t + 1, 3) &&
              cor.deficiency() == Rational(0);
    pass = pass && ok;
    if (!ok)
      got << "t=" << t << ": n_min=" << cor.n_min() << ", h=" << cor.h().str()
          << ", def=" << cor.deficiency().str() << "; ";
  }
  long long n331 = Partition({3, 3, 1}).n_min();
  long long n652 = Partition({6, 5, 2}).n_min();
  pass = pass && n331 == 8 && n652 == 13;
  if (got.str().empty()) got << "corner identities hold for t=1..15";
  got << "; n_min(3,3,1)=" << n331 << ", n_min(6,5,2)=" << n652;
  return {"A5",
          "corner partitions: n_min=2t+1, h=(2t+1)/3, deficiency 0 (t=1..15); "
          "n_min(3,3,1)=8, n_min(6,5,2)=13",
          "all corner identities hold; n_min(3,3,1)=8, n_min(6,5,2)=13", got.str(), pass, false};
}

ClaimResult claim_a6(Context&) {
  bool pass = true;
  std::ostringstream got;
  for (long long t = 2; t <= 64; ++t) {
    Rational def = Partition::power_of_two_family(t).deficiency();
    Rational expect(2 * t, 3 * (2 * t * t - 1));
    if (def != expect) {
      pass = false;
      got << "t=" << t << ": " << def.str() << " != " << expect.str() << "; ";
    }
  }
  Rational d2 = Partition::power_of_two_family(2).deficiency();
  Rational d4 = Partition::power_of_two_family(4).deficiency();
  Rational d8 = Partition::power_of_two_family(8).deficiency();
  pass = pass && d2 == Rational(4, 21) && d4 == Rational(8, 93) && d8 == Rational(16, 381);
  if (got.str().empty()) got << "deficiency formula holds for t=2..64";
  got << "; t=2: " << d2.str() << ", t=4: " << d4.str() << ", t=8: " << d8.str();
  return {"A6",
          "doubled-odd-square family deficiency equals 2t/(3(2t^2-1)) for t=2..64",
          "formula holds; instances 4/21, 8/93, 16/381", got.str(), pass, false};
}

ClaimResult claim_a7(Context&) {
  long long checked = 0, failed = 0;
  std::ostringstream bad;
  for_each_partition_up_to_weight(12, [&](const Partition& p) {
    ++checked;
    Rational via_graph = Graph::staircase(static_cast<int>(p.n_min()), p).h();
    if (via_graph != p.h()) {
      ++failed;
      if (failed <= 3)
        bad << p.str() << ": " << via_graph.str() << " != " << p.h().str() << "; ";
    }
  });
  std::ostringstream got;
  got << checked << " partitions checked, " << failed << " mismatches";
  if (failed) got << " [" << bad.str() << "]";
  return {"A7",
          "staircase-graph expansion at n_min equals the partition formula, all |lambda| <= 12",
          "0 mismatches over all partitions of weight <= 12", got.str(), failed == 0, false};
}

ClaimResult claim_a8(Context& ctx) {
  std::mt19937_64 rng(0x0c0ffee5eed5ULL);  // fixed: the suite is deterministic
  auto rnd = [&](long long m) {
    return static_cast<long long>(rng() % static_cast<unsigned long long>(m));
  };
  std::vector<std::vector<Partition>> pool;  // pool[w-1] = partitions of weight w
  for (long long w = 1; w <= 10; ++w) pool.push_back(partitions_of_weight(w));
  long long cases = 0, failed = 0;
  std::ostringstream bad;
  auto record = [&](bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failed;
      if (failed <= 3) bad << what << "; ";
    }
  };

  for (int i = 0; i < 250; ++i) {  // partition blowup laws
    long long w = 1 + rnd(10);
    const Partition& lam = pool[static_cast<size_t>(w - 1)][static_cast<size_t>(
        rnd(static_cast<long long>(pool[static_cast<size_t>(w - 1)].size())))];
    long long c = 2 + rnd(4);
    Partition cl = lam.blowup(c);
    bool ok = cl.depth() == c * lam.depth() && cl.weight() == c * c * lam.weight() &&
              cl.sq_weight() == c * c * c * lam.sq_weight() && cl.n_d() <= c * lam.n_d() &&
              cl.n_r() <= c * lam.n_r() && cl.n_min() <= c * lam.n_min() &&
              !(Rational(c) * lam.h() < cl.h());
    if (2 * lam.weight() % lam.depth() == 0) {
      ok = ok && cl.n_d() == c * lam.n_d();
      if (lam.n_min() == lam.n_d())
        ok = ok && cl.n_min() == c * lam.n_min() && cl.h() == Rational(c) * lam.h();
    }
    record(ok, "partition laws at " + lam.str() + " c=" + std::to_string(c));
  }

  for (int i = 0; i < 250; ++i) {  // h scales linearly under blowup
    int n = static_cast<int>(3 + rnd(8));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (rng() & 1) edges.emplace_back(u, v);
    if (edges.empty()) edges.emplace_back(0, 1);
    Graph g = Graph::from_edges(n, edges);
    int c = static_cast<int>(2 + rnd(4));
    record(g.blowup(c).h() == Rational(c) * g.h(),
           "h scaling at n=" + std::to_string(n) + " c=" + std::to_string(c));
  }

  for (int i = 0; i < 250; ++i) {  // blowups preserve cut-minimality
    int n = static_cast<int>(3 + rnd(4));
    const auto& list = ctx.class_list(n);
    const Graph& g = list[static_cast<size_t>(rnd(static_cast<long long>(list.size())))];
    int c = static_cast<int>(2 + rnd(4));
    while (c * n > 32) --c;
    record(g.blowup(c).is_cut_minimal(),
           "cut-minimal blowup at n=" + std::to_string(n) + " c=" + std::to_string(c));
  }

  for (int i = 0; i < 250; ++i) {  // staircase blowup identity
    long long w = 1 + rnd(8);
    const Partition& lam = pool[static_cast<size_t>(w - 1)][static_cast<size_t>(
        rnd(static_cast<long long>(pool[static_cast<size_t>(w - 1)].size())))];
    int n = static_cast<int>(lam.n_min() + rnd(3));
    int c = static_cast<int>(2 + rnd(4));
    while (c > 2 && c * n > 64) --c;
    Graph left = Graph::staircase(n, lam).blowup(c);
    Graph right = Graph::staircase(c * n, lam.blowup(c));
    auto fl = left.staircase_form();
    auto fr = right.staircase_form();
    record(fl.has_value() && fr.has_value() && *fl == *fr,
           "staircase blowup at " + lam.str() + " n=" + std::to_string(n) +
               " c=" + std::to_string(c));
  }

  std::ostringstream got;
  got << cases << " cases, " << failed << " failures";
  if (failed) got << " [" << bad.str() << "]";
  return {"A8",
          "blowup suite, 1000 seeded random cases: partition laws, h scaling, cut-minimality "
          "preservation, staircase identity",
          "1000 cases, 0 failures", got.str(), failed == 0, false};
}

ClaimResult claim_a9(Context& ctx) {
  long long classes = 0, failed = 0;
  std::ostringstream bad;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : ctx.class_list(n)) {
      ++classes;
      VertexCertificate cert = g.vertex_certificate();
      bool ok = cert.m_min >= g.edge_count() && cert.m_total == 3 * g.odd_triangle_count();
      if (!ok) {
        ++failed;
        if (failed <= 3) bad << "n=" << n << " " << g.canonical_hex() << "; ";
      }
    }
  }
  std::ostringstream got;
  got << classes << " classes, " << failed << " failures";
  if (failed) got << " [" << bad.str() << "]";
  return {"A9",
          "per-vertex certificate: min_v M_v >= |E| and M_total = 3|T| on every cut-minimal "
          "class, n <= 7",
          "0 failures over all classes with n <= 7", got.str(), failed == 0, false};
}

// The published expectation (all minimizing classes bipartite, staircase
// except the two-disjoint-edges class) is refuted by the computation: at
// n = 6 the 5-cycle plus an isolated vertex is cut-minimal with h = 2 = h(6),
// and it is neither bipartite nor a staircase.  That graph was cross-checked
// by an independent brute force over all 2^15 graphs on 6 vertices and by
// hand (T = 10 odd triples over 5 edges; every cut satisfies the edge bound).
// This claim therefore always reports FAIL, and the gate accepts the failure
// only when the computed minimizer sets reproduce that finding exactly.
ClaimResult claim_a10(Context& ctx) {
  const Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const Graph c5_plus_isolated =
      Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const std::map<int, size_t> expected_class_counts = {{3, 1}, {4, 2}, {5, 1},
                                                       {6, 2}, {7, 1}, {8, 1}};
  bool criterion_holds = true;  // the published statement, evaluated as written
  bool fingerprint_ok = true;   // reality matches the verified ground truth
  std::ostringstream got;
  for (int n = 3; n <= 8; ++n) {
    const SearchReport& rep = ctx.search(n);
    bool all_tf = true, all_bip = true;
    long long non_staircase = 0;
    bool exceptional_class_seen = false;
    for (const auto& info : rep.cheeger_graphs) {
      all_tf = all_tf && info.triangle_free;
      all_bip = all_bip && info.bipartite;
      bool is_two_edges = n == 4 && info.graph.is_isomorphic_to(two_edges);
      bool is_c5 = n == 6 && info.graph.is_isomorphic_to(c5_plus_isolated);
      if (is_c5) {
        exceptional_class_seen = true;
        fingerprint_ok = fingerprint_ok && info.triangle_free && !info.bipartite &&
                         !info.staircase.has_value() && info.h == Rational(2) &&
                         info.graph.edges().size() == 5;
      }
      if (!info.staircase.has_value()) {
        ++non_staircase;
        criterion_holds = criterion_holds && is_two_edges;
        fingerprint_ok = fingerprint_ok && (is_two_edges || is_c5);
      } else {
        fingerprint_ok = fingerprint_ok && info.bipartite;
      }
    }
    criterion_holds = criterion_holds && all_tf && all_bip;
    fingerprint_ok = fingerprint_ok && all_tf && (n == 6 ? exceptional_class_seen : all_bip) &&
                     rep.cheeger_graphs.size() == expected_class_counts.at(n) &&
                     non_staircase == (n == 4 || n == 6 ? 1 : 0);
    got << (n > 3 ? "; " : "") << "n=" << n << ": " << rep.cheeger_graphs.size() << " class"
        << (rep.cheeger_graphs.size() == 1 ? "" : "es");
    if (n == 4) got << " (two-disjoint-edges class: no staircase form)";
    if (n == 6)
      got << (exceptional_class_seen
                  ? " (5-cycle + isolated vertex: triangle-free, NOT bipartite, no staircase "
                    "form, h=2)"
                  : " (expected 5-cycle + isolated vertex class NOT found)");
  }
  // criterion_holds and fingerprint_ok are mutually exclusive by construction;
  // if the criterion ever "holds", the search lost a verified minimizer.
  bool documented = !criterion_holds && fingerprint_ok;
  return {"A10",
          "conjecture checks over every minimizing class, n <= 8: all triangle-free and "
          "bipartite; staircase form for all but the two-disjoint-edges class on 4 vertices",
          "all triangle-free and bipartite; exactly one non-staircase class, at n=4",
          got.str(), false, false, documented};
}

ClaimResult claim_i1(Context&) {
  long long cases = 0, failed = 0;
  for (int n = 3; n <= 10; ++n) {
    for_each_partition_up_to_weight(n, [&](const Partition& p) {
      if (p.part(p.rows()) < 3) return;  // parts are cycle lengths, so >= 3
      ++cases;
      std::vector<std::pair<int, int>> edges;
      int base = 0;
      for (long long len : p.parts()) {
        for (int i = 0; i < len; ++i)
          edges.emplace_back(std::min(base + i, base + (i + 1) % static_cast<int>(len)),
                             std::max(base + i, base + (i + 1) % static_cast<int>(len)));
        base += static_cast<int>(len);
      }
      Graph g = Graph::from_edges(n, edges);
      if (g.h() < Rational(n - 4)) ++failed;
    });
  }
  std::ostringstream got;
  got << cases << " cycle unions checked, " << failed << " below n-4";
  return {"I1",
          "informational (stated without proof in the source work): disjoint unions of cycles "
          "and isolated vertices satisfy h(G) >= n-4, checked for n <= 10",
          "0 below n-4", got.str(), failed == 0, true};
}

ClaimResult claim_i2(Context& ctx) {
  bool pass = true;
  std::ostringstream got;
  for (int n = 4; n <= 8; ++n) {
    Rational aug = cheeger_constant(n, 0, true, ctx.jobs).h;
    Rational plain = cheeger_constant(n, 0, false, ctx.jobs).h;
    got << (n > 4 ? ", " : "") << "n=" << n << ": augmented=" << aug.str()
        << ", plain=" << plain.str();
    pass = pass && aug == Rational((n + 1) / 2) && plain == Rational(0);
  }
  return {"I2",
          "informational: dimension-0 constant is ceil(n/2) with the augmentation and "
          "degenerates to 0 without it; the published closed form ceil((n+1)/2) differs at "
          "even n",
          "augmented = ceil(n/2) for n=4..8; plain = 0", got.str(), pass, true};
}

}  // namespace

VerifyReport verify_paper(int jobs) {
  Context ctx;
  ctx.jobs = jobs < 1 ? 1 : jobs;
  VerifyReport report;
  report.claims.push_back(claim_a1(ctx));
  report.claims.push_back(claim_a2(ctx));
  report.claims.push_back(claim_a3(ctx));
  report.claims.push_back(claim_a4(ctx));
  report.claims.push_back(claim_a5(ctx));
  report.claims.push_back(claim_a6(ctx));
  report.claims.push_back(claim_a7(ctx));
  report.claims.push_back(claim_a8(ctx));
  report.claims.push_back(claim_a9(ctx));
  report.claims.push_back(claim_a10(ctx));
  report.claims.push_back(claim_i1(ctx));
  report.claims.push_back(claim_i2(ctx));
  report.all_pass = true;
  report.gate_ok = true;
  for (const auto& c : report.claims)
    if (!c.informational) {
      report.all_pass = report.all_pass && c.pass;
      report.gate_ok = report.gate_ok && (c.pass || c.documented_failure);
    }
  return report;
}

}  // namespace cheeger

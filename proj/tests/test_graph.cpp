#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "cheeger/errors.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/partition.hpp"
#include "cheeger/rational.hpp"

using cheeger::Graph;
using cheeger::Partition;
using cheeger::Rational;

namespace {

Partition shape(std::initializer_list<long long> parts) {
  return Partition(std::vector<long long>(parts));
}

Graph k22() { return Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }
Graph two_k2() { return Graph::from_edges(4, {{0, 1}, {2, 3}}); }
Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  return Graph::from_edges(n, e);
}
Graph single_edge(int n) { return Graph::from_edges(n, {{0, 1}}); }

Graph random_graph(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (rng() & 1) e.emplace_back(u, v);
  if (e.empty()) e.emplace_back(0, 1);
  return Graph::from_edges(n, e);
}

// Reference packing used by canonical_bits: upper triangle row-major, pair
// (0,1) in the most significant position.
std::uint64_t packed_bits(const Graph& g) {
  std::uint64_t bits = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      bits = (bits << 1) | (g.has_edge(u, v) ? 1u : 0u);
  return bits;
}

std::uint64_t brute_force_canonical(const Graph& g) {
  std::vector<int> perm(static_cast<size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, packed_bits(g.permuted(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("construction and basic accessors") {
  Graph g = two_k2();
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(0) == 1);
  CHECK(g.neighbors(0) == 0b0010);
  CHECK(g.vertex_mask() == 0b1111);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

  CHECK_THROWS_AS(Graph(2), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  CHECK_NOTHROW(Graph(64));
  CHECK_THROWS_AS(Graph::from_edges(4, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(4, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(4, {{0, 4}}), std::out_of_range);
}

TEST_CASE("with_edge, without_edge and permuted") {
  Graph g = single_edge(4);
  CHECK(g.with_edge(2, 3) == two_k2());
  CHECK(two_k2().without_edge(2, 3) == g);
  // Swap the two components of 2K2.
  CHECK(two_k2().permuted({2, 3, 0, 1}) == two_k2());
  CHECK(single_edge(3).permuted({2, 1, 0}) == Graph::from_edges(3, {{1, 2}}));
  CHECK_THROWS_AS(g.permuted({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(g.permuted({0, 1, 2, 2}), std::invalid_argument);
}

TEST_CASE("text format round-trips") {
  Graph g = two_k2();
  CHECK(g.format() == "4\n1 2\n3 4\n\n");
  CHECK(Graph::parse(g.format()) == g);
  CHECK(Graph::parse("4\n3 4\n1 2\n") == g);       // order does not matter
  CHECK(Graph::parse("3\n") == Graph(3));          // edgeless
  CHECK(Graph::parse("4\n1 2\n\n3 4\n") == single_edge(4));  // blank line ends input

  CHECK_THROWS_AS(Graph::parse(""), cheeger::ParseError);
  CHECK_THROWS_AS(Graph::parse("2\n"), cheeger::ParseError);
  CHECK_THROWS_AS(Graph::parse("4\n2 1\n"), cheeger::ParseError);   // needs u < v
  CHECK_THROWS_AS(Graph::parse("4\n1 1\n"), cheeger::ParseError);
  CHECK_THROWS_AS(Graph::parse("4\n1 5\n"), cheeger::ParseError);   // out of range
  CHECK_THROWS_AS(Graph::parse("4\n1 2\n1 2\n"), cheeger::ParseError);
  CHECK_THROWS_AS(Graph::parse("4\n1 2 3\n"), cheeger::ParseError);
  CHECK_THROWS_AS(Graph::parse("four\n"), cheeger::ParseError);
}

TEST_CASE("staircase graphs have the prescribed shape") {
  // One column vertex, one row vertex, one isolated vertex.
  CHECK(Graph::staircase(3, shape({1})) == Graph::from_edges(3, {{0, 1}}));

  Graph g = Graph::staircase(9, shape({3, 3, 2, 2, 2, 1}));
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 13);  // one edge per box
  // Column vertices have the conjugate parts as degrees, row vertices the parts.
  CHECK(g.degree(0) == 6);
  CHECK(g.degree(1) == 5);
  CHECK(g.degree(2) == 2);
  for (int j = 0; j < 6; ++j) CHECK(g.degree(3 + j) == static_cast<int>(shape({3, 3, 2, 2, 2, 1}).part(j + 1)));

  // Both sides are independent sets, so the graph is bipartite and triangle-free.
  CHECK(g.bipartite());
  CHECK(g.triangle_free());

  CHECK_THROWS_AS(Graph::staircase(5, shape({3, 3, 1})), std::invalid_argument);  // n < box
}

TEST_CASE("staircase graphs of conjugate shapes are isomorphic") {
  for (auto parts : {std::vector<long long>{3, 3, 1}, {2, 2}, {4, 1}, {2, 1, 1}}) {
    Partition p{parts};
    Graph a = Graph::staircase(10, p);
    Graph b = Graph::staircase(10, p.conjugate());
    CHECK(a.canonical_bits() == b.canonical_bits());
  }
}

TEST_CASE("edges_across and cut_report") {
  Graph g = k22();
  CHECK(g.edges_across(0b0011) == 4);
  CHECK(g.non_edges_across(0b0011) == 0);
  CHECK(g.edges_across(0b0001) == 2);
  CHECK(g.non_edges_across(0b0001) == 1);

  auto rep = g.cut_report(0b0011);
  CHECK(rep.edges_across == 4);
  CHECK(rep.non_edges_across == 0);
  CHECK_FALSE(rep.perfect);
  // The larger side is replaced by its complement.
  CHECK(g.cut_report(0b0111).cut_set == 0b1000);

  Graph s = Graph::staircase(8, shape({3, 3, 1}));
  auto w1 = s.cut_report(std::uint64_t{1} << 3);  // first row vertex
  CHECK(w1.edges_across == 3);
  CHECK(w1.non_edges_across == 4);

  CHECK_THROWS_AS(g.cut_report(0), std::invalid_argument);
  CHECK_THROWS_AS(g.cut_report(0b1111), std::invalid_argument);
  CHECK_THROWS_AS(g.edges_across(0b10000), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    Graph r = random_graph(6, rng);
    std::uint64_t side = 1 + rng() % 62;
    long long s_sz = std::popcount(side);
    CHECK(r.edges_across(side) + r.non_edges_across(side) == s_sz * (6 - s_sz));
  }
}

TEST_CASE("odd triple counts on small graphs") {
  CHECK(cycle(3).odd_triangle_count() == 1);  // a full triangle is one odd triple
  for (int n = 3; n <= 10; ++n)
    CHECK(single_edge(n).odd_triangle_count() == n - 2);
  CHECK(Graph(5).odd_triangle_count() == 0);
  CHECK(two_k2().odd_triangle_count() == 4);
  CHECK(k22().odd_triangle_count() == 0);
  CHECK(cycle(5).odd_triangle_count() == 5);
}

TEST_CASE("h on small graphs") {
  CHECK(single_edge(3).h() == Rational(1));
  CHECK(single_edge(4).h() == Rational(2));
  CHECK(two_k2().h() == Rational(2));
  CHECK(cycle(3).h() == Rational(1, 3));
  CHECK(cycle(5).h() == Rational(1));
  CHECK(k22().h() == Rational(0));
  CHECK_THROWS_AS(Graph(4).h(), std::domain_error);

  // h() cross-checks its two computation routes internally; exercising it on
  // random graphs asserts their agreement.
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 14);
    CHECK_NOTHROW(random_graph(n, rng).h());
  }
}

TEST_CASE("h of a staircase graph is h of the shape plus the excess") {
  for (auto parts : {std::vector<long long>{1}, {3, 3, 1}, {3, 2, 1}, {6, 5, 2}, {2, 2}}) {
    Partition p{parts};
    long long n0 = p.n_min();
    for (long long n = n0; n <= std::min<long long>(n0 + 4, 40); ++n)
      CHECK(Graph::staircase(static_cast<int>(n), p).h() == p.h() + Rational(n - n0));
  }
}

TEST_CASE("cut-minimality of named graphs") {
  CHECK(single_edge(3).is_cut_minimal());
  CHECK(two_k2().is_cut_minimal());
  CHECK_FALSE(k22().is_cut_minimal());
  CHECK_FALSE(cycle(3).is_cut_minimal());
  CHECK_FALSE(cycle(5).is_cut_minimal());
  // C6 fails on its bipartition: all 6 edges cross, only 3 non-edges do.
  CHECK_FALSE(cycle(6).is_cut_minimal());
  CHECK(cycle(7).is_cut_minimal());
  // Cut-minimal graphs may contain triangles: K3 plus K2 on five vertices.
  CHECK(Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}}).is_cut_minimal());

  // A violated cut for K22: one vertex against the rest.
  auto w = k22().cut_minimality_witness();
  REQUIRE(w.has_value());
  CHECK(std::popcount(w->cut_set) == 1);
  CHECK(w->cut_set == 0b0001);
  CHECK(w->edges_across == 2);
  CHECK(w->non_edges_across == 1);

  // For C5 the best witness is two vertices at distance two.
  auto w5 = cycle(5).cut_minimality_witness();
  REQUIRE(w5.has_value());
  CHECK(w5->cut_set == 0b00101);
  CHECK(w5->edges_across == 4);
  CHECK(w5->non_edges_across == 2);

  CHECK_FALSE(single_edge(3).cut_minimality_witness().has_value());
  CHECK_THROWS_AS(Graph(33).is_cut_minimal(), cheeger::InfeasibleError);
}

TEST_CASE("staircase graphs at legal n are cut-minimal") {
  cheeger::for_each_partition_up_to_weight(12, [&](const Partition& p) {
    long long n = p.n_min();
    if (n > 32) return;
    CHECK(Graph::staircase(static_cast<int>(n), p).is_cut_minimal());
  });
  // Below n_min the same shape is not legal and indeed not cut-minimal.
  CHECK_FALSE(Graph::staircase(7, shape({3, 3, 1})).is_cut_minimal());
}

TEST_CASE("cut-minimality is preserved by edge deletion") {
  std::mt19937_64 rng(23);
  for (auto start : {Graph::staircase(8, shape({3, 3, 1})), cycle(7), two_k2()}) {
    Graph g = start;
    while (g.edge_count() > 0) {
      REQUIRE(g.is_cut_minimal());
      auto e = g.edges();
      auto [u, v] = e[rng() % e.size()];
      g = g.without_edge(u, v);
    }
    CHECK(g.is_cut_minimal());  // edgeless graphs are trivially cut-minimal
  }
}

TEST_CASE("cut-minimal graphs respect the valency bound and the h lower bound") {
  std::mt19937_64 rng(31);
  int found = 0;
  for (int iter = 0; iter < 400; ++iter) {
    int n = 3 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, rng);
    if (!g.is_cut_minimal()) continue;
    ++found;
    for (int v = 0; v < n; ++v) REQUIRE(g.degree(v) <= (n - 1) / 2);
    REQUIRE(!(g.h() < Rational(n, 3)));
  }
  CHECK(found > 10);
}

TEST_CASE("vertex certificate totals and sharpness") {
  // Total is three times the odd triple count for arbitrary graphs.
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 3 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, rng);
    auto cert = g.vertex_certificate();
    CHECK(cert.m_total == 3 * g.odd_triangle_count());
    CHECK(cert.m_v.size() == static_cast<size_t>(n));
    CHECK(std::accumulate(cert.m_v.begin(), cert.m_v.end(), 0LL) == cert.m_total);
  }

  // Frozen example: the single edge on 3 vertices.
  auto cert3 = single_edge(3).vertex_certificate();
  CHECK(cert3.m_v == std::vector<long long>{1, 1, 1});
  CHECK(cert3.m_min == 1);
  CHECK(cert3.m_total == 3);
  CHECK(cert3.sharp);

  // For cut-minimal graphs every per-vertex count is at least the edge count.
  for (auto g : {single_edge(5), two_k2(), cycle(7), Graph::staircase(8, shape({3, 3, 1}))}) {
    auto cert = g.vertex_certificate();
    CHECK(cert.m_min >= g.edge_count());
  }
  // K22 is not cut-minimal and indeed breaks the bound.
  CHECK(k22().vertex_certificate().m_min == 0);

  // Minimal staircase graphs of staircase shapes meet h = n/3 exactly, which
  // shows as a sharp certificate; the power-of-two shapes have positive
  // deficiency, so their certificates cannot be sharp.
  for (long long t = 1; t <= 5; ++t) {
    Graph g = Graph::staircase(static_cast<int>(2 * t + 1), Partition::staircase(t));
    CHECK(g.vertex_certificate().sharp);
    CHECK(g.h() == Rational(2 * t + 1, 3));
  }
  for (long long t = 2; t <= 3; ++t) {
    Graph g = Graph::staircase(static_cast<int>(4 * t), Partition::power_of_two_family(t));
    CHECK_FALSE(g.vertex_certificate().sharp);
  }
}

TEST_CASE("triangle_free and bipartite") {
  CHECK_FALSE(cycle(3).triangle_free());
  CHECK_FALSE(cycle(3).bipartite());
  CHECK(cycle(5).triangle_free());
  CHECK_FALSE(cycle(5).bipartite());
  CHECK(cycle(6).triangle_free());
  CHECK(cycle(6).bipartite());
  CHECK(two_k2().triangle_free());
  CHECK(two_k2().bipartite());
  CHECK(Graph(5).triangle_free());
  CHECK(Graph(5).bipartite());
}

TEST_CASE("staircase recognition") {
  // Round trip; the lexicographically larger of shape and conjugate is reported.
  auto f = Graph::staircase(13, shape({6, 5, 2})).staircase_form();
  REQUIRE(f.has_value());
  CHECK(*f == shape({6, 5, 2}));
  auto g = Graph::staircase(13, shape({3, 3, 2, 2, 2, 1})).staircase_form();
  REQUIRE(g.has_value());
  CHECK(*g == shape({6, 5, 2}));
  auto h = Graph::staircase(8, shape({3, 2, 2})).staircase_form();
  REQUIRE(h.has_value());
  CHECK(*h == shape({3, 3, 1}));

  // Relabeling does not affect recognition.
  Graph s = Graph::staircase(8, shape({3, 3, 1})).permuted({5, 3, 1, 7, 0, 2, 4, 6});
  auto fs = s.staircase_form();
  REQUIRE(fs.has_value());
  CHECK(*fs == shape({3, 3, 1}));

  CHECK(single_edge(4).staircase_form().value() == shape({1}));
  CHECK_FALSE(two_k2().staircase_form().has_value());
  CHECK_FALSE(cycle(5).staircase_form().has_value());
  CHECK_FALSE(cycle(6).staircase_form().has_value());
  // Complete bipartite graphs are staircases of rectangles, with or without
  // padding by isolated vertices.
  CHECK(k22().staircase_form().value() == shape({2, 2}));
  Graph k22iso = Graph::from_edges(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(k22iso.staircase_form().value() == shape({2, 2}));
}

TEST_CASE("canonical forms agree with brute force over all relabelings") {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 3 + static_cast<int>(rng() % 4);  // up to 6: factorial oracle
    Graph g = random_graph(n, rng);
    CHECK(g.canonical_bits() == brute_force_canonical(g));
  }
}

TEST_CASE("canonical forms are invariant under relabeling") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 4 + static_cast<int>(rng() % 6);  // up to 9
    Graph g = random_graph(n, rng);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(g.canonical_bits() == g.permuted(perm).canonical_bits());
    CHECK(g.is_isomorphic_to(g.permuted(perm)));
  }
  CHECK_FALSE(k22().is_isomorphic_to(two_k2()));
  CHECK_FALSE(cycle(4).is_isomorphic_to(two_k2()));
  CHECK(Graph::staircase(10, shape({3, 2, 2})).is_isomorphic_to(Graph::staircase(10, shape({3, 3, 1}))));
  CHECK_THROWS_AS(Graph(11).canonical_bits(), cheeger::InfeasibleError);
}

TEST_CASE("canonical hex and packed bits round trip") {
  Graph g = two_k2();
  std::uint64_t bits = g.canonical_bits();
  CHECK(Graph::from_packed_bits(4, packed_bits(g)) == g);
  CHECK(Graph::from_packed_bits(4, bits).is_isomorphic_to(g));
  CHECK(g.canonical_hex() == g.permuted({3, 2, 1, 0}).canonical_hex());
  // 6 pair bits pack into two hex digits.
  CHECK(g.canonical_hex().size() == 2);
}

TEST_CASE("blowup replaces vertices by independent sets") {
  Graph b = single_edge(3).blowup(2);
  CHECK(b.vertex_count() == 6);
  CHECK(b.edge_count() == 4);
  // Clones 0,1 of vertex 0 and clones 2,3 of vertex 1 form a K22.
  CHECK(b.has_edge(0, 2));
  CHECK(b.has_edge(1, 3));
  CHECK_FALSE(b.has_edge(0, 1));
  CHECK_FALSE(b.has_edge(2, 3));
  CHECK(b.degree(4) == 0);

  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 3 + static_cast<int>(rng() % 8);
    int c = 2 + static_cast<int>(rng() % 3);
    while (c * n > 64) --c;
    Graph g = random_graph(n, rng);
    Graph cg = g.blowup(c);
    CHECK(cg.vertex_count() == c * n);
    CHECK(cg.edge_count() == static_cast<long long>(c) * c * g.edge_count());
    CHECK(cg.odd_triangle_count() == static_cast<long long>(c) * c * c * g.odd_triangle_count());
    CHECK(cg.h() == Rational(c) * g.h());
  }

  CHECK(cycle(5).blowup(2).h() == Rational(2));
  CHECK_THROWS_AS(Graph(33).blowup(2), cheeger::InfeasibleError);
}

TEST_CASE("blowups of staircase graphs are staircase graphs of blown-up shapes") {
  for (auto parts : {std::vector<long long>{1}, {2, 1}, {3, 3, 1}}) {
    Partition p{parts};
    int n = static_cast<int>(p.n_min());
    for (int c = 2; c * n <= 64 && c <= 4; ++c) {
      Graph left = Graph::staircase(n, p).blowup(c);
      Graph right = Graph::staircase(c * n, p.blowup(c));
      auto fl = left.staircase_form();
      auto fr = right.staircase_form();
      REQUIRE(fl.has_value());
      REQUIRE(fr.has_value());
      CHECK(*fl == *fr);
    }
  }
}

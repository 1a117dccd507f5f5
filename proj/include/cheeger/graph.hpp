#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cheeger/partition.hpp"
#include "cheeger/rational.hpp"

namespace cheeger {

// One proper cut, with the smaller side reported (smaller bitmask on ties).
struct CutReport {
  std::uint64_t cut_set = 0;  // bit v set <=> vertex v on the reported side
  long long edges_across = 0;
  long long non_edges_across = 0;
  bool perfect = false;  // edges_across == non_edges_across
};

struct VertexCertificate {
  long long m_total = 0;
  long long m_min = 0;          // min over vertices
  std::vector<long long> m_v;   // per vertex
  bool sharp = false;           // every non-isolated vertex's neighborhood cut is perfect
};

// Simple undirected graph on n <= 64 labeled vertices, one 64-bit adjacency
// row per vertex.  Immutable; the with/without-edge calls return copies.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Graph(int n);  // edgeless
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);  // 0-based

  // The graph G_n(lambda): lambda_1 column vertices v_i, then rows() row
  // vertices w_j with v_i ~ w_j iff lambda_j >= i, then isolated vertices.
  static Graph staircase(int n, const Partition& lambda);

  // Text format: first line n, then one "u v" line per edge with
  // 1 <= u < v <= n; a blank line or end of input terminates.
  static Graph parse(std::string_view text);
  std::string format() const;

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  std::uint64_t neighbors(int v) const;
  int degree(int v) const;
  std::uint64_t vertex_mask() const;  // low n bits set
  std::vector<std::pair<int, int>> edges() const;  // sorted, 0-based

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  Graph permuted(const std::vector<int>& perm) const;  // perm[old] = new label

  // c pairwise nonadjacent clones per vertex; clones of u and v are adjacent
  // iff u ~ v.  Vertex (v, i) becomes index v*c + i.  Requires c*n <= 64.
  Graph blowup(int c) const;

  long long edges_across(std::uint64_t side) const;
  long long non_edges_across(std::uint64_t side) const;
  CutReport cut_report(std::uint64_t side) const;

  // Number of vertex triples spanning an odd number of edges (1 or 3).
  long long odd_triangle_count() const;

  // h(G) = odd triples / edges, computed by two routes that are checked
  // against each other on every call.  Undefined (throws) for edgeless G.
  Rational h() const;

  // Exhaustive sweep over all 2^(n-1) proper cuts (n <= 32).  Empty result
  // means cut-minimal; otherwise the violated cut with the smallest side,
  // then smallest bitmask, is returned.
  std::optional<CutReport> cut_minimality_witness() const;
  bool is_cut_minimal() const;  // same sweep, early exit

  VertexCertificate vertex_certificate() const;

  bool triangle_free() const;
  bool bipartite() const;

  // Recognize G as G_n(lambda) up to isomorphism.  Returns the
  // lexicographically larger of lambda and its conjugate, or nothing if G is
  // not a staircase graph.  The result is verified by explicit reconstruction.
  std::optional<Partition> staircase_form() const;

  // Lexicographically minimal upper-triangular adjacency bit string over all
  // vertex relabelings, packed row-major with bit (0,1) most significant.
  // Exhaustive (pruned) search; n <= 10.
  std::uint64_t canonical_bits() const;
  std::string canonical_hex() const;  // the same bits as lowercase hex, padded to nibbles
  static Graph from_packed_bits(int n, std::uint64_t bits);  // inverse of canonical packing
  bool is_isomorphic_to(const Graph& other) const;  // via canonical_bits; n <= 10

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  void check_vertex(int v) const;
  void add_edge_unchecked(int u, int v);

  int n_ = 0;
  std::uint64_t adj_[kMaxVertices] = {};
};

}  // namespace cheeger

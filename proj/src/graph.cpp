#include "cheeger/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

using std::uint64_t;

inline int popcount(uint64_t x) { return std::popcount(x); }
inline uint64_t bit(int v) { return uint64_t{1} << v; }

// Row-major index of the upper-triangular pair (i, j), i < j.
inline int pair_index(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 3 || n > kMaxVertices)
    throw std::invalid_argument("graph vertex count must be in [3, 64], got " + std::to_string(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

void Graph::add_edge_unchecked(int u, int v) {
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edges are not supported");
    if (g.has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    g.add_edge_unchecked(u, v);
  }
  return g;
}

Graph Graph::staircase(int n, const Partition& lambda) {
  long long l1 = lambda.part(1);
  long long t = lambda.rows();
  if (l1 + t > n)
    throw std::invalid_argument("staircase graph needs n >= box(lambda) = " +
                                std::to_string(l1 + t));
  Graph g(n);
  for (long long j = 1; j <= t; ++j)
    for (long long i = 1; i <= lambda.part(j); ++i)
      g.add_edge_unchecked(static_cast<int>(i - 1), static_cast<int>(l1 + j - 1));
  return g;
}

Graph Graph::parse(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  auto is_blank = [](std::string_view l) {
    return l.find_first_not_of(" \t") == std::string_view::npos;
  };
  auto parse_int = [](std::string_view s, size_t& i, const char* what) -> long long {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size() || s[i] < '0' || s[i] > '9')
      throw ParseError(std::string("expected ") + what + " in graph input");
    long long v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      v = v * 10 + (s[i] - '0');
      if (v > 1'000'000) throw ParseError("number too large in graph input");
      ++i;
    }
    return v;
  };
  size_t li = 0;
  while (li < lines.size() && is_blank(lines[li])) ++li;
  if (li == lines.size()) throw ParseError("empty graph input");
  size_t pos = 0;
  long long n = parse_int(lines[li], pos, "vertex count");
  while (pos < lines[li].size() && (lines[li][pos] == ' ' || lines[li][pos] == '\t')) ++pos;
  if (pos != lines[li].size()) throw ParseError("trailing text after vertex count");
  if (n < 3 || n > Graph::kMaxVertices)
    throw ParseError("graph vertex count must be in [3, 64], got " + std::to_string(n));
  Graph g(static_cast<int>(n));
  for (++li; li < lines.size(); ++li) {
    if (is_blank(lines[li])) break;
    pos = 0;
    long long u = parse_int(lines[li], pos, "edge endpoint");
    long long v = parse_int(lines[li], pos, "edge endpoint");
    while (pos < lines[li].size() && (lines[li][pos] == ' ' || lines[li][pos] == '\t')) ++pos;
    if (pos != lines[li].size()) throw ParseError("trailing text after edge");
    if (u < 1 || v < 1 || u > n || v > n || u >= v)
      throw ParseError("edge must satisfy 1 <= u < v <= n, got " + std::to_string(u) + " " +
                       std::to_string(v));
    if (g.has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)))
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge_unchecked(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  return g;
}

std::string Graph::format() const {
  std::string out = std::to_string(n_);
  out += '\n';
  for (auto [u, v] : edges()) {
    out += std::to_string(u + 1);
    out += ' ';
    out += std::to_string(v + 1);
    out += '\n';
  }
  out += '\n';
  return out;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += popcount(adj_[v]);
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const { return popcount(neighbors(v)); }

uint64_t Graph::vertex_mask() const {
  return n_ == 64 ? ~uint64_t{0} : (bit(n_) - 1);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    uint64_t rest = adj_[u] >> (u + 1) << (u + 1);
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop edges are not supported");
  Graph g = *this;
  g.add_edge_unchecked(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.adj_[u] &= ~bit(v);
  g.adj_[v] &= ~bit(u);
  return g;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation size must match vertex count");
  uint64_t seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= n_ || (seen & bit(v))) throw std::invalid_argument("not a permutation");
    seen |= bit(v);
  }
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge_unchecked(perm[u], perm[v]);
  return g;
}

Graph Graph::blowup(int c) const {
  if (c < 1) throw std::invalid_argument("blowup factor must be >= 1");
  if (static_cast<long long>(c) * n_ > kMaxVertices)
    throw InfeasibleError("graph blowup exceeds 64 vertices");
  Graph g(c * n_);
  for (auto [u, v] : edges())
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) g.add_edge_unchecked(u * c + i, v * c + j);
  return g;
}

long long Graph::edges_across(uint64_t side) const {
  if (side & ~vertex_mask()) throw std::invalid_argument("cut mask has bits beyond n");
  long long total = 0;
  uint64_t rest = side;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    total += popcount(adj_[v] & ~side);
  }
  return total;
}

long long Graph::non_edges_across(uint64_t side) const {
  long long s = popcount(side & vertex_mask());
  return s * (n_ - s) - edges_across(side);
}

CutReport Graph::cut_report(uint64_t side) const {
  if (side & ~vertex_mask()) throw std::invalid_argument("cut mask has bits beyond n");
  if (side == 0 || side == vertex_mask()) throw std::invalid_argument("cut must be proper");
  long long e = edges_across(side);
  long long s = popcount(side);
  long long cap = s * (n_ - s);
  uint64_t smaller = side;
  if (2 * s > n_ || (2 * s == n_ && (vertex_mask() & ~side) < side)) smaller = vertex_mask() & ~side;
  return CutReport{smaller, e, cap - e, e == cap - e};
}

long long Graph::odd_triangle_count() const {
  long long acc = 0;
  for (int v = 0; v < n_; ++v)
    for (int w = v + 1; w < n_; ++w) {
      int cnt = popcount((adj_[v] ^ adj_[w]) & ~(bit(v) | bit(w)));
      acc += has_edge(v, w) ? (n_ - 2) - cnt : cnt;
    }
  if (acc % 3 != 0) throw std::logic_error("odd-triple incidence count not divisible by 3");
  return acc / 3;
}

Rational Graph::h() const {
  long long m = edge_count();
  if (m == 0) throw std::domain_error("h(G) is undefined for edgeless graphs");
  // Route one: per-edge contributions, a third per fully present triangle.
  long long acc3 = 0;
  for (auto [v, w] : edges()) {
    long long neither = n_ - popcount(adj_[v] | adj_[w]);
    long long both = popcount(adj_[v] & adj_[w]);
    acc3 += 3 * neither + both;
  }
  // Route two: direct odd-triple count over vertex pairs.
  long long triples = odd_triangle_count();
  if (acc3 != 3 * triples)
    throw std::logic_error("edge-contribution and odd-triple routes for h disagree");
  return Rational(acc3, 3 * m);
}

std::optional<CutReport> Graph::cut_minimality_witness() const {
  if (n_ > 32) throw InfeasibleError("exhaustive cut check supports n <= 32");
  // Sweep all proper cuts whose side contains vertex 0, in Gray-code order,
  // maintaining the across-edge count under single vertex moves.
  const uint64_t full = vertex_mask();
  uint64_t side = bit(0);
  long long e = degree(0);
  long long size = 1;
  bool found = false;
  long long best_size = 0;
  uint64_t best_mask = 0;
  long long best_e = 0;
  auto consider = [&](uint64_t s, long long sz, long long across) {
    long long small_sz = std::min(sz, n_ - sz);
    uint64_t small_mask = s;
    if (2 * sz > n_ || (2 * sz == n_ && (full & ~s) < s)) small_mask = full & ~s;
    if (!found || small_sz < best_size || (small_sz == best_size && small_mask < best_mask)) {
      found = true;
      best_size = small_sz;
      best_mask = small_mask;
      best_e = across;
    }
  };
  if (2 * e > size * (n_ - size)) consider(side, size, e);
  const uint64_t steps = uint64_t{1} << (n_ - 1);
  for (uint64_t g = 1; g < steps; ++g) {
    int v = 1 + std::countr_zero(g);
    if (side & bit(v)) {
      side &= ~bit(v);
      e += -degree(v) + 2 * popcount(adj_[v] & side);
      --size;
    } else {
      e += degree(v) - 2 * popcount(adj_[v] & side);
      side |= bit(v);
      ++size;
    }
    if (side == full) continue;
    if (2 * e > size * (n_ - size)) consider(side, size, e);
  }
  if (!found) return std::nullopt;
  long long cap = best_size * (n_ - best_size);
  return CutReport{best_mask, best_e, cap - best_e, false};
}

bool Graph::is_cut_minimal() const {
  if (n_ > 32) throw InfeasibleError("exhaustive cut check supports n <= 32");
  const uint64_t full = vertex_mask();
  uint64_t side = bit(0);
  long long e = degree(0);
  long long size = 1;
  if (2 * e > size * (n_ - size)) return false;
  const uint64_t steps = uint64_t{1} << (n_ - 1);
  for (uint64_t g = 1; g < steps; ++g) {
    int v = 1 + std::countr_zero(g);
    if (side & bit(v)) {
      side &= ~bit(v);
      e += -degree(v) + 2 * popcount(adj_[v] & side);
      --size;
    } else {
      e += degree(v) - 2 * popcount(adj_[v] & side);
      side |= bit(v);
      ++size;
    }
    if (side == full) continue;
    if (2 * e > size * (n_ - size)) return false;
  }
  return true;
}

VertexCertificate Graph::vertex_certificate() const {
  VertexCertificate cert;
  cert.m_v.resize(static_cast<size_t>(n_));
  cert.sharp = true;
  auto edges_inside = [&](uint64_t set) {
    long long total = 0;
    uint64_t rest = set;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      total += popcount(adj_[v] & set);
    }
    return total / 2;
  };
  for (int v = 0; v < n_; ++v) {
    uint64_t a = adj_[v];
    uint64_t b = vertex_mask() & ~a & ~bit(v);
    long long cross = 0;
    uint64_t rest = a;
    while (rest) {
      int x = std::countr_zero(rest);
      rest &= rest - 1;
      cross += popcount(adj_[x] & b);
    }
    long long ne = static_cast<long long>(popcount(a)) * popcount(b) - cross;
    cert.m_v[static_cast<size_t>(v)] = edges_inside(a) + edges_inside(b) + ne;
    if (a != 0 && !cut_report(a).perfect) cert.sharp = false;
  }
  cert.m_total = 0;
  cert.m_min = cert.m_v[0];
  for (long long m : cert.m_v) {
    cert.m_total += m;
    cert.m_min = std::min(cert.m_min, m);
  }
  if (cert.m_total != 3 * odd_triangle_count())
    throw std::logic_error("vertex certificate total is not three times the odd-triple count");
  return cert;
}

bool Graph::triangle_free() const {
  for (auto [u, v] : edges())
    if (adj_[u] & adj_[v]) return false;
  return true;
}

bool Graph::bipartite() const {
  std::vector<int> color(static_cast<size_t>(n_), -1);
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    color[static_cast<size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      uint64_t rest = adj_[v];
      while (rest) {
        int w = std::countr_zero(rest);
        rest &= rest - 1;
        if (color[static_cast<size_t>(w)] == -1) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
          stack.push_back(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<Partition> Graph::staircase_form() const {
  uint64_t active = 0;
  for (int v = 0; v < n_; ++v)
    if (adj_[v]) active |= bit(v);
  if (!active) return std::nullopt;
  // The non-isolated part must be connected and two-colorable.
  int start = std::countr_zero(active);
  std::vector<int> color(static_cast<size_t>(n_), -1);
  std::vector<int> stack{start};
  color[static_cast<size_t>(start)] = 0;
  uint64_t reached = bit(start);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    uint64_t rest = adj_[v];
    while (rest) {
      int w = std::countr_zero(rest);
      rest &= rest - 1;
      if (color[static_cast<size_t>(w)] == -1) {
        color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
        reached |= bit(w);
        stack.push_back(w);
      } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
        return std::nullopt;
      }
    }
  }
  if (reached != active) return std::nullopt;
  std::vector<int> side_a, side_b;
  for (int v = 0; v < n_; ++v) {
    if (!(active & bit(v))) continue;
    (color[static_cast<size_t>(v)] == 0 ? side_a : side_b).push_back(v);
  }
  auto by_degree_desc = [&](std::vector<int>& side) {
    std::stable_sort(side.begin(), side.end(),
                     [&](int x, int y) { return degree(x) > degree(y); });
  };
  by_degree_desc(side_a);
  by_degree_desc(side_b);
  auto nested = [&](const std::vector<int>& side) {
    for (size_t i = 1; i < side.size(); ++i) {
      uint64_t big = adj_[side[i - 1]], small = adj_[side[i]];
      if ((big | small) != big) return false;
    }
    return true;
  };
  if (!nested(side_a) || !nested(side_b)) return std::nullopt;
  auto degrees_of = [&](const std::vector<int>& side) {
    std::vector<long long> d;
    d.reserve(side.size());
    for (int v : side) d.push_back(degree(v));
    return Partition(d);
  };
  Partition lambda_b = degrees_of(side_b);  // rows indexed by side_b
  Partition lambda_a = degrees_of(side_a);
  long long l1 = lambda_b.part(1);
  if (static_cast<long long>(side_a.size()) != l1) return std::nullopt;
  // Reconstruct with side_a as the column vertices and verify edge for edge.
  Graph model = Graph::staircase(n_, lambda_b);
  std::vector<int> to_g(static_cast<size_t>(n_), -1);
  for (size_t i = 0; i < side_a.size(); ++i) to_g[i] = side_a[i];
  for (size_t j = 0; j < side_b.size(); ++j) to_g[static_cast<size_t>(l1) + j] = side_b[j];
  {
    size_t slot = static_cast<size_t>(l1 + lambda_b.rows());
    for (int v = 0; v < n_; ++v)
      if (!(active & bit(v))) to_g[slot++] = v;
  }
  if (model.edge_count() != edge_count()) return std::nullopt;
  for (auto [u, v] : model.edges())
    if (!has_edge(to_g[static_cast<size_t>(u)], to_g[static_cast<size_t>(v)])) return std::nullopt;
  return std::max(lambda_a, lambda_b);
}

namespace {

struct CanonContext {
  const Graph* g;
  int n;
};

uint64_t canon_rec(const CanonContext& ctx, const std::vector<std::vector<int>>& blocks, int p) {
  int n = ctx.n;
  if (p >= n - 1) return 0;  // rows n-1 and beyond carry no bits
  const std::vector<int>& first = blocks.front();
  uint64_t best_row = ~uint64_t{0};
  std::vector<int> keep;
  for (int v : first) {
    uint64_t row = 0;
    for (const auto& b : blocks) {
      int zeros = 0, ones = 0;
      for (int w : b) {
        if (w == v) continue;
        if ((ctx.g->neighbors(v) >> w) & 1)
          ++ones;
        else
          ++zeros;
      }
      row = (row << (zeros + ones)) | ((uint64_t{1} << ones) - 1);
    }
    if (row < best_row) {
      best_row = row;
      keep.assign(1, v);
    } else if (row == best_row) {
      keep.push_back(v);
    }
  }
  // Interchangeable candidates (identical adjacency apart from each other)
  // lead to identical subtrees; explore one per class.
  std::vector<int> reps;
  for (int v : keep) {
    bool twin = false;
    for (int u : reps) {
      uint64_t mu = ctx.g->neighbors(u) & ~bit(v);
      uint64_t mv = ctx.g->neighbors(v) & ~bit(u);
      if (mu == mv) {
        twin = true;
        break;
      }
    }
    if (!twin) reps.push_back(v);
  }
  int suffix_bits = (n - p - 2) * (n - p - 1) / 2;
  uint64_t best = ~uint64_t{0};
  for (int v : reps) {
    std::vector<std::vector<int>> child;
    child.reserve(blocks.size() * 2);
    for (const auto& b : blocks) {
      std::vector<int> zeros, ones;
      for (int w : b) {
        if (w == v) continue;
        if ((ctx.g->neighbors(v) >> w) & 1)
          ones.push_back(w);
        else
          zeros.push_back(w);
      }
      if (!zeros.empty()) child.push_back(std::move(zeros));
      if (!ones.empty()) child.push_back(std::move(ones));
    }
    uint64_t sub = canon_rec(ctx, child, p + 1);
    best = std::min(best, sub);
  }
  return (best_row << suffix_bits) | best;
}

}  // namespace

uint64_t Graph::canonical_bits() const {
  if (n_ > 10) throw InfeasibleError("canonical form supports n <= 10");
  std::vector<int> all(static_cast<size_t>(n_));
  for (int v = 0; v < n_; ++v) all[static_cast<size_t>(v)] = v;
  CanonContext ctx{this, n_};
  return canon_rec(ctx, {all}, 0);
}

std::string Graph::canonical_hex() const {
  uint64_t bits = canonical_bits();
  int m = n_ * (n_ - 1) / 2;
  int nibbles = (m + 3) / 4;
  std::string out;
  out.reserve(static_cast<size_t>(nibbles));
  for (int k = 0; k < nibbles; ++k) {
    int val = 0;
    for (int b = 0; b < 4; ++b) {
      int idx = 4 * k + b;
      int v = idx < m ? static_cast<int>((bits >> (m - 1 - idx)) & 1) : 0;
      val = (val << 1) | v;
    }
    out += "0123456789abcdef"[val];
  }
  return out;
}

Graph Graph::from_packed_bits(int n, uint64_t bits) {
  Graph g(n);
  int m = n * (n - 1) / 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((bits >> (m - 1 - pair_index(n, i, j))) & 1) g.add_edge_unchecked(i, j);
  return g;
}

bool Graph::is_isomorphic_to(const Graph& other) const {
  if (n_ != other.n_) return false;
  return canonical_bits() == other.canonical_bits();
}

}  // namespace cheeger

#include "cheeger/cm_complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

using std::uint32_t;
using std::uint64_t;

// Proper cuts are encoded as masks over vertices 1..n-1; vertex 0 is always
// on the inside, and the all-ones mask (inside = everything) is excluded.
struct FaceWalker {
  int n;
  int num_cuts;                    // 2^(n-1), last mask skipped
  std::vector<int> cut_edges;      // edges across each cut, maintained incrementally
  std::vector<int> cut_bound;      // |S| * (n - |S|)
  std::vector<std::pair<int, int>> edge_of;  // rank -> (u, v), u < v
  std::vector<uint32_t> faces;

  explicit FaceWalker(int n_) : n(n_) {
    num_cuts = 1 << (n - 1);
    cut_edges.assign(static_cast<size_t>(num_cuts), 0);
    cut_bound.resize(static_cast<size_t>(num_cuts));
    for (int m = 0; m < num_cuts; ++m) {
      int inside = 1 + std::popcount(static_cast<unsigned>(m));
      cut_bound[static_cast<size_t>(m)] = inside * (n - inside);
    }
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) edge_of.emplace_back(u, v);
  }

  bool in_cut(int vertex, int mask) const {
    return vertex == 0 || ((mask >> (vertex - 1)) & 1);
  }

  // Adds the edge to every cut it crosses; returns false (and rolls back)
  // if some cut ends up with more edges than non-edges across it.
  bool try_add(int rank) {
    auto [u, v] = edge_of[static_cast<size_t>(rank)];
    for (int m = 0; m < num_cuts - 1; ++m) {
      if (in_cut(u, m) == in_cut(v, m)) continue;
      int c = ++cut_edges[static_cast<size_t>(m)];
      if (2 * c > cut_bound[static_cast<size_t>(m)]) {
        // roll back this mask and all earlier ones
        --cut_edges[static_cast<size_t>(m)];
        for (int r = 0; r < m; ++r)
          if (in_cut(u, r) != in_cut(v, r)) --cut_edges[static_cast<size_t>(r)];
        return false;
      }
    }
    return true;
  }

  void remove(int rank) {
    auto [u, v] = edge_of[static_cast<size_t>(rank)];
    for (int m = 0; m < num_cuts - 1; ++m)
      if (in_cut(u, m) != in_cut(v, m)) --cut_edges[static_cast<size_t>(m)];
  }

  void walk(uint32_t face, int last_rank) {
    if (face) faces.push_back(face);
    for (int r = last_rank + 1; r < static_cast<int>(edge_of.size()); ++r) {
      if (!try_add(r)) continue;
      walk(face | (uint32_t{1} << r), r);
      remove(r);
    }
  }
};

// Rank of a GF(2) matrix given as columns of packed row bits.
long long gf2_rank(std::vector<std::vector<uint64_t>> cols) {
  std::vector<std::vector<uint64_t>> pivots;
  std::vector<long long> pivot_bits;
  auto low_bit = [](const std::vector<uint64_t>& v) -> long long {
    for (size_t w = 0; w < v.size(); ++w)
      if (v[w]) return static_cast<long long>(w) * 64 + std::countr_zero(v[w]);
    return -1;
  };
  for (auto& col : cols) {
    for (size_t i = 0; i < pivots.size(); ++i) {
      long long p = pivot_bits[i];
      if ((col[static_cast<size_t>(p / 64)] >> (p % 64)) & 1)
        for (size_t w = 0; w < col.size(); ++w) col[w] ^= pivots[i][w];
    }
    long long p = low_bit(col);
    if (p >= 0) {
      pivots.push_back(std::move(col));
      pivot_bits.push_back(p);
    }
  }
  return static_cast<long long>(pivots.size());
}

}  // namespace

std::vector<uint32_t> cut_minimal_faces(int n) {
  if (n < 3) throw std::invalid_argument("the complex needs n >= 3");
  if (n > 7)
    throw InfeasibleError("face enumeration supports n <= 7 (2^C(n,2) subsets beyond that)");
  FaceWalker walker(n);
  walker.walk(0, -1);
  std::sort(walker.faces.begin(), walker.faces.end());
  return walker.faces;
}

ComplexSummary cut_minimal_complex(int n, bool with_betti, bool with_maximal) {
  if (with_betti && n > 6)
    throw InfeasibleError("GF(2) Betti numbers are supported for n <= 6");
  std::vector<uint32_t> faces = cut_minimal_faces(n);
  ComplexSummary out;
  out.n = n;
  int max_card = 0;
  for (uint32_t f : faces) max_card = std::max(max_card, std::popcount(f));
  out.dim = max_card - 1;
  out.f_vector.assign(static_cast<size_t>(max_card), 0);
  for (uint32_t f : faces) ++out.f_vector[static_cast<size_t>(std::popcount(f) - 1)];

  int num_edges = n * (n - 1) / 2;
  if (with_maximal) {
    std::unordered_set<uint32_t> face_set(faces.begin(), faces.end());
    out.maximal_by_dim.assign(static_cast<size_t>(max_card), 0);
    for (uint32_t f : faces) {
      bool maximal = true;
      for (int e = 0; e < num_edges && maximal; ++e)
        if (!((f >> e) & 1) && face_set.count(f | (uint32_t{1} << e))) maximal = false;
      if (maximal) ++out.maximal_by_dim[static_cast<size_t>(std::popcount(f) - 1)];
    }
  }

  if (with_betti) {
    // faces grouped by dimension, each group sorted (faces is sorted already)
    std::vector<std::vector<uint32_t>> by_dim(static_cast<size_t>(max_card));
    for (uint32_t f : faces)
      by_dim[static_cast<size_t>(std::popcount(f) - 1)].push_back(f);
    // rank of the boundary map from dimension d to d-1, for d = 1..dim
    std::vector<long long> ranks(static_cast<size_t>(max_card) + 1, 0);
    for (int d = 1; d < max_card; ++d) {
      const auto& rows = by_dim[static_cast<size_t>(d - 1)];
      const auto& cells = by_dim[static_cast<size_t>(d)];
      size_t words = (rows.size() + 63) / 64;
      std::vector<std::vector<uint64_t>> cols;
      cols.reserve(cells.size());
      for (uint32_t f : cells) {
        std::vector<uint64_t> col(words, 0);
        uint32_t bits = f;
        while (bits) {
          uint32_t sub = f & ~(bits & (~bits + 1));
          bits &= bits - 1;
          auto it = std::lower_bound(rows.begin(), rows.end(), sub);
          if (it == rows.end() || *it != sub)
            throw std::logic_error("face lattice is not downward closed");
          size_t idx = static_cast<size_t>(it - rows.begin());
          col[idx / 64] ^= uint64_t{1} << (idx % 64);
        }
        cols.push_back(std::move(col));
      }
      ranks[static_cast<size_t>(d)] = gf2_rank(std::move(cols));
    }
    out.betti_gf2.resize(static_cast<size_t>(max_card));
    for (int d = 0; d < max_card; ++d)
      out.betti_gf2[static_cast<size_t>(d)] = out.f_vector[static_cast<size_t>(d)] -
                                              ranks[static_cast<size_t>(d)] -
                                              ranks[static_cast<size_t>(d) + 1];
  }
  return out;
}

}  // namespace cheeger

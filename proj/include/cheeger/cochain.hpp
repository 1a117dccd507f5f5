#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cheeger/graph.hpp"
#include "cheeger/rational.hpp"

namespace cheeger {

// GF(2) cochain of dimension k on the full simplex with n vertices: one bit
// per (k+1)-subset of the vertex set, in colexicographic order.  k = -1 is
// the augmentation dimension (a single generator, the empty face).
class Cochain {
 public:
  Cochain(int n, int k);  // zero

  int n() const { return n_; }
  int k() const { return k_; }
  long long generator_count() const { return count_; }

  bool test(long long rank) const;
  void set(long long rank, bool value);
  long long norm() const;
  bool is_zero() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  Cochain& operator^=(const Cochain& o);
  friend Cochain operator^(Cochain a, const Cochain& b) { return a ^= b; }

  // Ranks and the simplices they name.
  static long long rank_of(int n, const std::vector<int>& simplex);  // sorted 0-based vertices
  std::vector<std::vector<int>> support() const;
  static Cochain from_support(int n, int k, const std::vector<std::vector<int>>& simplices);

  Cochain coboundary() const;  // dimension k+1; requires k <= n-2

  static Cochain from_graph(const Graph& g);  // dimension 1, edges as pairs
  Graph to_graph() const;                     // requires k == 1

  std::string support_hex() const;  // bits in rank order, nibble-packed

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

 private:
  int n_;
  int k_;
  long long count_;
  std::vector<std::uint64_t> words_;
};

struct CosystoleResult {
  long long norm = 0;
  Cochain minimizer;  // a lower cochain d with |c + coboundary(d)| = norm,
                      // smallest bitmask among minimizers
};

// Minimum norm in the coset c + coboundaries, by literal enumeration of all
// lower cochains in increasing bitmask order.  Feasible when C(n,k) <= 24.
// The augmented flag only matters for k = 0 (is the all-ones 0-cochain a
// coboundary or not).
CosystoleResult cosystolic_norm(const Cochain& c, bool augmented = true);

bool is_coboundary(const Cochain& c, bool augmented = true);

// |coboundary(c)| / cosystolic_norm(c); requires c not a coboundary.
Rational expansion(const Cochain& c, bool augmented = true);

struct CheegerKResult {
  int n = 0;
  int k = 0;
  bool augmented = true;
  Rational h;                        // min expansion over non-coboundaries
  Rational max_cosystole_expansion;  // max over nonzero cosystoles
  long long cosystole_count = 0;     // nonzero cosystoles enumerated
  long long minimizer_count = 0;     // labeled minimizing cosystoles
  std::vector<Cochain> minimizers;   // k = 1: one per isomorphism class;
                                     // otherwise all, in rank order (capped)
  bool truncated = false;
};

// Exhaustive minimum of the expansion over all non-coboundary k-cochains.
// Feasible when C(n,k+1) <= 24; an image-span enumeration replaces the
// per-cochain brute force for the cosystolic norms (cross-checked in tests
// against cosystolic_norm).
CheegerKResult cheeger_constant(int n, int k, bool augmented = true, int jobs = 1);

}  // namespace cheeger

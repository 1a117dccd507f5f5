#pragma once

#include <cstdint>
#include <vector>

namespace cheeger {

// The simplicial complex whose vertices are the edges of the complete graph
// on n labeled points and whose faces are the edge sets of cut-minimal
// graphs.  Cut-minimality is closed under edge deletion, so this is a
// well-defined downward-closed complex.
struct ComplexSummary {
  int n = 0;
  std::vector<long long> f_vector;       // f_vector[d] = number of d-faces
  int dim = -1;                          // -1 for the empty complex
  std::vector<long long> maximal_by_dim; // empty unless requested
  std::vector<long long> betti_gf2;      // empty unless requested
};

// All faces as bitmasks over edge ranks (colex pair order), sorted
// ascending.  The empty face is not included.  Requires 3 <= n <= 7.
std::vector<std::uint32_t> cut_minimal_faces(int n);

// Summary with optional GF(2) Betti numbers (requires n <= 6) and optional
// maximal-face counts per dimension.
ComplexSummary cut_minimal_complex(int n, bool with_betti = false,
                                   bool with_maximal = false);

}  // namespace cheeger

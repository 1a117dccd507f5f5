#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cheeger/rational.hpp"

namespace cheeger {

// Integer partition in the canonical in-memory form: weakly decreasing
// positive parts, at least one part.  The empty partition is rejected
// everywhere; callers that need "no partition" say so explicitly.
//
// Throughout, lambda_1 is the longest row of the Ferrers diagram, t the
// number of rows, and mu = conjugate(lambda) the column lengths.
class Partition {
 public:
  explicit Partition(std::vector<long long> parts);

  // Accepts "3,3,1" and the power shorthand "3^2,1" (both mean (3,3,1)).
  static Partition parse(std::string_view text);

  // The staircase partition (t, t-1, ..., 1).
  static Partition staircase(long long t);

  // ((2t-1)^2, (2t-3)^2, ..., 3^2, 1) for t >= 2; the family behind the
  // upper bounds at vertex counts that are powers of two.
  static Partition power_of_two_family(long long t);

  const std::vector<long long>& parts() const { return parts_; }
  long long rows() const { return static_cast<long long>(parts_.size()); }
  // 1-based row length; rows beyond the last have length 0.
  long long part(long long q) const {
    return (q >= 1 && q <= rows()) ? parts_[static_cast<size_t>(q - 1)] : 0;
  }

  Partition conjugate() const;
  long long box() const { return parts_[0] + rows(); }
  long long weight() const;    // |lambda|, number of boxes
  long long sq_weight() const; // |lambda^2| = (sum lambda_i^2 + sum mu_j^2)/2
  long long depth() const;     // min_k (k + lambda_{k+1}), the largest embedded staircase
  Partition blowup(long long c) const;  // part q of c*lambda is c*lambda_ceil(q/c)

  // Number of Ferrers boxes lying in exactly one of the selected rows I and
  // columns J (1-based indices); this is the edge count across the cut those
  // rows and columns pick out in the associated graph.
  long long cut_boxes(const std::vector<long long>& rows_sel,
                      const std::vector<long long>& cols_sel) const;

  // Row, column and weight conditions for the partition to sit inside n
  // vertices with every cut balanced.  n >= box() is a precondition;
  // violating it throws instead of returning false.
  bool legal_for(long long n) const;

  // Stronger row inequality (|lambda| - k*lambda_{k+1} vs the k-cut budget);
  // diagnostic only, not part of legality.
  bool strengthened_rows_ok(long long n) const;

  long long n_r() const;    // max_k (k + ceil(2(lambda_1+...+lambda_k)/k))
  long long n_d() const;    // depth + ceil(2|lambda|/depth)
  long long n_min() const;  // max of n_r(lambda), n_r(conjugate), n_d

  Rational h() const;           // n_min - 2|lambda^2|/|lambda|
  Rational deficiency() const;  // h - n_min/3

  std::string str() const;  // "3,3,1"

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<long long> parts_;
};

// All partitions of weight exactly w, first part descending, then
// lexicographically descending.  w = 0 yields nothing (no empty partition).
std::vector<Partition> partitions_of_weight(long long w);

// Visits partitions of every weight in [1, max_weight].
void for_each_partition_up_to_weight(long long max_weight,
                                     const std::function<void(const Partition&)>& fn);

}  // namespace cheeger

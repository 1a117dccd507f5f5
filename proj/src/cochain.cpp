#include "cheeger/cochain.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

using std::uint64_t;

constexpr int kMaxN = 64;

const long long* binom_row(int n) {
  static const auto table = [] {
    auto t = new long long[kMaxN + 1][kMaxN + 2]();
    for (int i = 0; i <= kMaxN; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j)
        t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  return table[n];
}

long long binom(int n, int m) {
  if (m < 0 || m > n || n < 0 || n > kMaxN) return 0;
  return binom_row(n)[m];
}

long long colex_rank(const std::vector<int>& sorted) {
  long long r = 0;
  for (size_t i = 0; i < sorted.size(); ++i) r += binom(sorted[i], static_cast<int>(i) + 1);
  return r;
}

std::vector<int> colex_unrank(int n, int m, long long rank) {
  std::vector<int> out(static_cast<size_t>(m));
  long long rem = rank;
  int a = n - 1;
  for (int pos = m; pos >= 1; --pos) {
    while (binom(a, pos) > rem) --a;
    out[static_cast<size_t>(pos - 1)] = a;
    rem -= binom(a, pos);
    --a;
  }
  if (rem != 0) throw std::logic_error("colex unrank failed");
  return out;
}

long long lowest_set_bit(const std::vector<uint64_t>& v) {
  for (size_t w = 0; w < v.size(); ++w)
    if (v[w]) return static_cast<long long>(w) * 64 + std::countr_zero(v[w]);
  return -1;
}

long long popcount_words(const std::vector<uint64_t>& v) {
  long long total = 0;
  for (uint64_t w : v) total += std::popcount(w);
  return total;
}

void xor_into(std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

// Echelonized GF(2) span with word-vector entries; pivot = lowest set bit.
struct Gf2Basis {
  std::vector<std::vector<uint64_t>> rows;
  std::vector<long long> pivots;

  void reduce(std::vector<uint64_t>& v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
      long long p = pivots[i];
      if ((v[static_cast<size_t>(p / 64)] >> (p % 64)) & 1) xor_into(v, rows[i]);
    }
  }
  bool insert(std::vector<uint64_t> v) {
    reduce(v);
    long long p = lowest_set_bit(v);
    if (p < 0) return false;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

}  // namespace

Cochain::Cochain(int n, int k) : n_(n), k_(k) {
  if (n < 3 || n > kMaxN)
    throw std::invalid_argument("cochain vertex count must be in [3, 64]");
  if (k < -1 || k > n - 1)
    throw std::invalid_argument("cochain dimension must be in [-1, n-1]");
  count_ = binom(n, k + 1);
  words_.assign(static_cast<size_t>((count_ + 63) / 64), 0);
}

bool Cochain::test(long long rank) const {
  if (rank < 0 || rank >= count_) throw std::out_of_range("cochain rank out of range");
  return (words_[static_cast<size_t>(rank / 64)] >> (rank % 64)) & 1;
}

void Cochain::set(long long rank, bool value) {
  if (rank < 0 || rank >= count_) throw std::out_of_range("cochain rank out of range");
  uint64_t mask = uint64_t{1} << (rank % 64);
  if (value)
    words_[static_cast<size_t>(rank / 64)] |= mask;
  else
    words_[static_cast<size_t>(rank / 64)] &= ~mask;
}

long long Cochain::norm() const { return popcount_words(words_); }

bool Cochain::is_zero() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

Cochain& Cochain::operator^=(const Cochain& o) {
  if (n_ != o.n_ || k_ != o.k_)
    throw std::invalid_argument("cochain dimensions do not match");
  xor_into(words_, o.words_);
  return *this;
}

long long Cochain::rank_of(int n, const std::vector<int>& simplex) {
  int prev = -1;
  for (int v : simplex) {
    if (v <= prev || v >= n) throw std::invalid_argument("simplex must be sorted distinct vertices in range");
    prev = v;
  }
  return colex_rank(simplex);
}

std::vector<std::vector<int>> Cochain::support() const {
  std::vector<std::vector<int>> out;
  for (long long r = 0; r < count_; ++r)
    if (test(r)) out.push_back(colex_unrank(n_, k_ + 1, r));
  return out;
}

Cochain Cochain::from_support(int n, int k, const std::vector<std::vector<int>>& simplices) {
  Cochain c(n, k);
  for (const auto& s : simplices) {
    if (static_cast<int>(s.size()) != k + 1)
      throw std::invalid_argument("simplex has the wrong number of vertices");
    c.set(rank_of(n, s), true);
  }
  return c;
}

Cochain Cochain::coboundary() const {
  if (k_ > n_ - 2)
    throw std::invalid_argument("coboundary would exceed the top dimension");
  Cochain out(n_, k_ + 1);
  for (long long r = 0; r < count_; ++r) {
    if (!test(r)) continue;
    std::vector<int> face = colex_unrank(n_, k_ + 1, r);
    uint64_t used = 0;
    for (int v : face) used |= uint64_t{1} << v;
    for (int x = 0; x < n_; ++x) {
      if ((used >> x) & 1) continue;
      std::vector<int> sup = face;
      sup.insert(std::upper_bound(sup.begin(), sup.end(), x), x);
      long long sr = colex_rank(sup);
      out.set(sr, !out.test(sr));
    }
  }
  return out;
}

Cochain Cochain::from_graph(const Graph& g) {
  Cochain c(g.vertex_count(), 1);
  for (auto [u, v] : g.edges()) c.set(colex_rank({u, v}), true);
  return c;
}

Graph Cochain::to_graph() const {
  if (k_ != 1) throw std::invalid_argument("only 1-cochains convert to graphs");
  std::vector<std::pair<int, int>> edges;
  for (const auto& s : support()) edges.emplace_back(s[0], s[1]);
  return Graph::from_edges(n_, edges);
}

std::string Cochain::support_hex() const {
  long long nibbles = (count_ + 3) / 4;
  std::string out;
  out.reserve(static_cast<size_t>(nibbles));
  for (long long k = 0; k < nibbles; ++k) {
    int val = 0;
    for (int b = 0; b < 4; ++b) {
      long long idx = 4 * k + b;
      int v = idx < count_ ? (test(idx) ? 1 : 0) : 0;
      val = (val << 1) | v;
    }
    out += "0123456789abcdef"[val];
  }
  return out;
}

CosystoleResult cosystolic_norm(const Cochain& c, bool augmented) {
  int n = c.n(), k = c.k();
  if (k < 0) throw std::invalid_argument("cosystolic norm needs dimension k >= 0");
  long long lower = (k == 0) ? (augmented ? 1 : 0) : binom(n, k);
  if (lower > 24)
    throw InfeasibleError("cosystolic norm brute force supports C(n,k) <= 24 lower generators");
  std::vector<Cochain> cols;
  cols.reserve(static_cast<size_t>(lower));
  for (long long i = 0; i < lower; ++i) {
    Cochain gen(n, k - 1);
    gen.set(i, true);
    cols.push_back(gen.coboundary());
  }
  Cochain acc = c;
  long long best_norm = acc.norm();
  uint64_t best_d = 0;
  const uint64_t limit = uint64_t{1} << lower;
  for (uint64_t d = 1; d < limit; ++d) {
    uint64_t changed = d ^ (d - 1);
    while (changed) {
      acc ^= cols[static_cast<size_t>(std::countr_zero(changed))];
      changed &= changed - 1;
    }
    long long nm = acc.norm();
    if (nm < best_norm) {
      best_norm = nm;
      best_d = d;
    }
  }
  Cochain minimizer(n, k - 1);
  for (long long i = 0; i < lower; ++i)
    if ((best_d >> i) & 1) minimizer.set(i, true);
  return CosystoleResult{best_norm, std::move(minimizer)};
}

bool is_coboundary(const Cochain& c, bool augmented) {
  int n = c.n(), k = c.k();
  if (k == -1) return c.is_zero();
  if (k == 0) {
    if (c.is_zero()) return true;
    return augmented && c.norm() == n;
  }
  if (binom(n, k) > 4096 || binom(n, k + 1) > 4096)
    throw InfeasibleError("coboundary test supports generator counts up to 4096");
  Gf2Basis basis;
  for (long long i = 0; i < binom(n, k); ++i) {
    Cochain gen(n, k - 1);
    gen.set(i, true);
    basis.insert(gen.coboundary().words());
  }
  std::vector<uint64_t> v = c.words();
  basis.reduce(v);
  return lowest_set_bit(v) < 0;
}

Rational expansion(const Cochain& c, bool augmented) {
  CosystoleResult csy = cosystolic_norm(c, augmented);
  if (csy.norm == 0) throw std::domain_error("expansion is undefined for coboundaries");
  return Rational(c.coboundary().norm(), csy.norm);
}

namespace {

struct SweepShard {
  bool any = false;
  long long best_up = 0, best_wt = 1;  // running min of up/wt
  long long max_up = 0, max_wt = 1;    // running max
  long long cosystoles = 0;
  long long minimizer_count = 0;
  std::vector<uint64_t> minimizers;
  bool truncated = false;
};

constexpr size_t kMinimizerCap = 4096;

// a/b < c/d with all values in [0, 2^24]
bool frac_less(long long a, long long b, long long c, long long d) { return a * d < c * b; }

void run_shard(int n, int k, uint64_t lo, uint64_t hi,
               const std::vector<std::vector<uint64_t>>& up_cols,
               const std::vector<uint64_t>& basis, SweepShard& out) {
  const size_t up_words = up_cols.empty() ? 1 : up_cols[0].size();
  std::vector<uint64_t> acc(up_words, 0);
  for (uint64_t b = lo; b;) {
    int i = std::countr_zero(b);
    b &= b - 1;
    xor_into(acc, up_cols[static_cast<size_t>(i)]);
  }
  const int r = static_cast<int>(basis.size());
  for (uint64_t c = lo; c < hi; ++c) {
    if (c != lo) {
      uint64_t changed = c ^ (c - 1);
      while (changed) {
        xor_into(acc, up_cols[static_cast<size_t>(std::countr_zero(changed))]);
        changed &= changed - 1;
      }
    }
    if (c == 0) continue;
    long long wt = std::popcount(c);
    long long csy = wt;
    uint64_t span = 0;
    for (uint64_t g = 1; g < (uint64_t{1} << r); ++g) {
      span ^= basis[static_cast<size_t>(std::countr_zero(g))];
      long long d = std::popcount(c ^ span);
      if (d < csy) csy = d;
    }
    if (csy == 0) continue;   // coboundary class representative
    if (csy < wt) continue;   // not a cosystole; its class is covered elsewhere
    ++out.cosystoles;
    long long up = popcount_words(acc);
    if (!out.any || frac_less(up, wt, out.best_up, out.best_wt)) {
      out.any = true;
      out.best_up = up;
      out.best_wt = wt;
      out.minimizers.clear();
      out.minimizer_count = 0;
      out.truncated = false;
    }
    if (up * out.best_wt == out.best_up * wt) {
      ++out.minimizer_count;
      if (out.minimizers.size() < kMinimizerCap)
        out.minimizers.push_back(c);
      else
        out.truncated = true;
    }
    if (frac_less(out.max_up, out.max_wt, up, wt)) {
      out.max_up = up;
      out.max_wt = wt;
    }
  }
}

}  // namespace

CheegerKResult cheeger_constant(int n, int k, bool augmented, int jobs) {
  if (n < 3 || n > kMaxN) throw std::invalid_argument("vertex count must be in [3, 64]");
  if (k < 0 || k > n - 2) throw std::invalid_argument("cheeger_constant needs 0 <= k <= n-2");
  long long L = binom(n, k + 1);
  if (L > 24)
    throw InfeasibleError("cheeger_constant enumerates 2^C(n,k+1) cochains and needs C(n,k+1) <= 24");
  // Coboundary columns of the single k-generators, over the (k+1)-dimension.
  std::vector<std::vector<uint64_t>> up_cols;
  up_cols.reserve(static_cast<size_t>(L));
  for (long long i = 0; i < L; ++i) {
    Cochain gen(n, k);
    gen.set(i, true);
    up_cols.push_back(gen.coboundary().words());
  }
  // Basis of the coboundary image inside dimension k (fits one word: L <= 24).
  std::vector<uint64_t> basis;
  if (k == 0) {
    if (augmented) basis.push_back((uint64_t{1} << L) - 1);
  } else {
    std::vector<uint64_t> echelon;
    for (long long i = 0; i < binom(n, k); ++i) {
      Cochain gen(n, k - 1);
      gen.set(i, true);
      uint64_t v = gen.coboundary().words()[0];
      for (uint64_t row : echelon)
        if ((v >> std::countr_zero(row)) & 1) v ^= row;
      if (v) {
        // keep pivot = lowest set bit convention: reduce new row position
        echelon.push_back(v);
        std::sort(echelon.begin(), echelon.end(),
                  [](uint64_t a, uint64_t b) { return std::countr_zero(a) < std::countr_zero(b); });
      }
    }
    basis = std::move(echelon);
  }
  if (basis.size() > 24) throw std::logic_error("coboundary image rank exceeded the enumeration cap");

  const uint64_t total = uint64_t{1} << L;
  int shards = std::max(1, jobs);
  shards = static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(shards), total));
  std::vector<SweepShard> results(static_cast<size_t>(shards));
  if (shards == 1) {
    run_shard(n, k, 0, total, up_cols, basis, results[0]);
  } else {
    std::vector<std::thread> workers;
    uint64_t chunk = total / static_cast<uint64_t>(shards);
    for (int s = 0; s < shards; ++s) {
      uint64_t lo = chunk * static_cast<uint64_t>(s);
      uint64_t hi = (s == shards - 1) ? total : lo + chunk;
      workers.emplace_back(run_shard, n, k, lo, hi, std::cref(up_cols), std::cref(basis),
                           std::ref(results[static_cast<size_t>(s)]));
    }
    for (auto& w : workers) w.join();
  }

  CheegerKResult res;
  res.n = n;
  res.k = k;
  res.augmented = augmented;
  bool any = false;
  long long bu = 0, bw = 1, mu = 0, mw = 1;
  for (const auto& sh : results) {
    if (!sh.any) continue;
    if (!any || frac_less(sh.best_up, sh.best_wt, bu, bw)) {
      any = true;
      bu = sh.best_up;
      bw = sh.best_wt;
    }
    res.cosystole_count += sh.cosystoles;
    if (frac_less(mu, mw, sh.max_up, sh.max_wt)) {
      mu = sh.max_up;
      mw = sh.max_wt;
    }
  }
  if (!any) throw std::logic_error("no non-coboundary cochain found");
  res.h = Rational(bu, bw);
  res.max_cosystole_expansion = Rational(mu, mw);
  std::vector<uint64_t> mins;
  bool trunc = false;
  for (const auto& sh : results) {
    if (!sh.any || sh.best_up * bw != bu * sh.best_wt) continue;
    res.minimizer_count += sh.minimizer_count;
    trunc = trunc || sh.truncated;
    mins.insert(mins.end(), sh.minimizers.begin(), sh.minimizers.end());
  }
  std::sort(mins.begin(), mins.end());
  if (mins.size() > kMinimizerCap) {
    mins.resize(kMinimizerCap);
    trunc = true;
  }
  if (k == 1) {
    // one labeled representative per isomorphism class, smallest mask first
    std::vector<uint64_t> reps;
    std::vector<uint64_t> seen_canon;
    for (uint64_t m : mins) {
      Cochain c(n, k);
      for (long long i = 0; i < L; ++i)
        if ((m >> i) & 1) c.set(i, true);
      uint64_t canon = c.to_graph().canonical_bits();
      if (std::find(seen_canon.begin(), seen_canon.end(), canon) == seen_canon.end()) {
        seen_canon.push_back(canon);
        reps.push_back(m);
      }
    }
    mins = std::move(reps);
  }
  for (uint64_t m : mins) {
    Cochain c(n, k);
    for (long long i = 0; i < L; ++i)
      if ((m >> i) & 1) c.set(i, true);
    res.minimizers.push_back(std::move(c));
  }
  res.truncated = trunc;
  return res;
}

}  // namespace cheeger

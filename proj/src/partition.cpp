#include "cheeger/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

constexpr long long kMaxPart = 1'000'000;
constexpr long long kMaxRows = 1'000'000;

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("empty partition is not supported");
  if (static_cast<long long>(parts_.size()) > kMaxRows)
    throw std::invalid_argument("partition has too many rows");
  long long prev = kMaxPart;
  for (long long p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
    if (p > prev) throw std::invalid_argument("partition parts must be weakly decreasing");
    prev = p;
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<long long> parts;
  size_t i = 0;
  auto bad = [&] { throw ParseError("bad partition '" + std::string(text) + "'"); };
  auto read_number = [&]() -> long long {
    if (i >= text.size() || text[i] < '0' || text[i] > '9') bad();
    long long v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > kMaxPart) bad();
      ++i;
    }
    return v;
  };
  while (true) {
    while (i < text.size() && text[i] == ' ') ++i;
    long long part = read_number();
    long long repeat = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      repeat = read_number();
      if (repeat < 1) bad();
    }
    for (long long r = 0; r < repeat; ++r) parts.push_back(part);
    while (i < text.size() && text[i] == ' ') ++i;
    if (i == text.size()) break;
    if (text[i] != ',') bad();
    ++i;
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

Partition Partition::staircase(long long t) {
  if (t < 1) throw std::invalid_argument("staircase partition needs t >= 1");
  std::vector<long long> parts;
  for (long long p = t; p >= 1; --p) parts.push_back(p);
  return Partition(std::move(parts));
}

Partition Partition::power_of_two_family(long long t) {
  if (t < 2) throw std::invalid_argument("power-of-two family needs t >= 2");
  std::vector<long long> parts;
  for (long long p = 2 * t - 1; p >= 3; p -= 2) {
    parts.push_back(p);
    parts.push_back(p);
  }
  parts.push_back(1);
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<long long> mu(static_cast<size_t>(parts_[0]), 0);
  for (long long p : parts_)
    for (long long j = 0; j < p; ++j) ++mu[static_cast<size_t>(j)];
  return Partition(std::move(mu));
}

long long Partition::weight() const {
  long long w = 0;
  for (long long p : parts_) w += p;
  return w;
}

long long Partition::sq_weight() const {
  long long s = 0;
  for (long long p : parts_) s += p * p;
  for (long long m : conjugate().parts_) s += m * m;
  if (s % 2 != 0) throw std::logic_error("sum of squared row and column lengths must be even");
  return s / 2;
}

long long Partition::depth() const {
  long long best = parts_[0];  // k = 0
  for (long long k = 1; k <= rows(); ++k) best = std::min(best, k + part(k + 1));
  return best;
}

Partition Partition::blowup(long long c) const {
  if (c < 1) throw std::invalid_argument("blowup factor must be >= 1");
  std::vector<long long> parts;
  parts.reserve(static_cast<size_t>(rows() * c));
  for (long long p : parts_)
    for (long long r = 0; r < c; ++r) parts.push_back(c * p);
  return Partition(std::move(parts));
}

long long Partition::cut_boxes(const std::vector<long long>& rows_sel,
                               const std::vector<long long>& cols_sel) const {
  const Partition mu = conjugate();
  std::vector<bool> row_in(static_cast<size_t>(rows()) + 1, false);
  std::vector<bool> col_in(static_cast<size_t>(parts_[0]) + 1, false);
  long long total = 0;
  for (long long i : rows_sel) {
    if (i < 1 || i > rows()) throw std::out_of_range("row index out of range in cut_boxes");
    if (row_in[static_cast<size_t>(i)]) throw std::invalid_argument("repeated row index in cut_boxes");
    row_in[static_cast<size_t>(i)] = true;
    total += part(i);
  }
  for (long long j : cols_sel) {
    if (j < 1 || j > parts_[0]) throw std::out_of_range("column index out of range in cut_boxes");
    if (col_in[static_cast<size_t>(j)]) throw std::invalid_argument("repeated column index in cut_boxes");
    col_in[static_cast<size_t>(j)] = true;
    total += mu.part(j);
  }
  // Boxes in a selected row and a selected column were counted twice and
  // belong to neither side of the cut.
  long long both = 0;
  for (long long i : rows_sel)
    for (long long j : cols_sel)
      if (part(i) >= j) ++both;
  return total - 2 * both;
}

bool Partition::legal_for(long long n) const {
  if (n < box())
    throw std::domain_error("legality asks for n >= box(lambda) = " + std::to_string(box()) +
                            ", got n = " + std::to_string(n));
  auto rows_ok = [n](const Partition& p) {
    long long prefix = 0;
    for (long long k = 1; k <= p.rows(); ++k) {
      prefix += p.part(k);
      if (2 * prefix > k * (n - k)) return false;
    }
    return true;
  };
  if (!rows_ok(*this)) return false;
  if (!rows_ok(conjugate())) return false;
  long long d = depth();
  return 2 * weight() <= d * (n - d);
}

bool Partition::strengthened_rows_ok(long long n) const {
  if (n < box())
    throw std::domain_error("strengthened check asks for n >= box(lambda)");
  for (long long k = 0; k <= rows(); ++k) {
    long long lk1 = part(k + 1);
    if (2 * (weight() - k * lk1) > (k + lk1) * (n - k - lk1)) return false;
  }
  return true;
}

long long Partition::n_r() const {
  long long best = 0;
  long long prefix = 0;
  for (long long k = 1; k <= rows(); ++k) {
    prefix += part(k);
    best = std::max(best, k + ceil_div(2 * prefix, k));
  }
  return best;
}

long long Partition::n_d() const {
  long long d = depth();
  return d + ceil_div(2 * weight(), d);
}

long long Partition::n_min() const {
  long long n = std::max({n_r(), conjugate().n_r(), n_d()});
  if (n < box()) throw std::logic_error("n_min fell below box(lambda)");
  return n;
}

Rational Partition::h() const {
  return Rational(n_min()) - Rational(2 * sq_weight(), weight());
}

Rational Partition::deficiency() const { return h() - Rational(n_min(), 3); }

std::string Partition::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void emit_partitions(long long remaining, long long cap, std::vector<long long>& prefix,
                     const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(prefix));
    return;
  }
  for (long long p = std::min(cap, remaining); p >= 1; --p) {
    prefix.push_back(p);
    emit_partitions(remaining - p, p, prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of_weight(long long w) {
  std::vector<Partition> out;
  if (w < 1) return out;
  std::vector<long long> prefix;
  emit_partitions(w, w, prefix, [&out](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_partition_up_to_weight(long long max_weight,
                                     const std::function<void(const Partition&)>& fn) {
  for (long long w = 1; w <= max_weight; ++w) {
    std::vector<long long> prefix;
    emit_partitions(w, w, prefix, fn);
  }
}

}  // namespace cheeger

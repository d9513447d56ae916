#include "gapcube/counting.hpp"

#include "gapcube/fault.hpp"
#include "memo.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace gapcube {
namespace {

void require_nonneg(long v, const char* what, const char* fn) {
  if (v < 0) {
    throw std::invalid_argument(std::string(fn) + ": " + what + " must be nonnegative, got " +
                                std::to_string(v));
  }
}

// Sums term(k) for k = first..bound and checks that term(bound + 1) vanishes.
// A nonzero term past the structural bound means the binomial convention or a
// base case is wrong, so it is reported rather than silently dropped.
template <class Term>
Nat sum_to_bound(int first, int bound, Term&& term, const char* fn, int n, int h) {
  Nat total;
  for (int k = first; k <= bound; ++k) total += term(k);
  if (const Nat tail = term(bound + 1); !tail.is_zero()) {
    throw ConventionError(std::string(fn) + "(" + std::to_string(n) + ", " + std::to_string(h) +
                          "): term k = " + std::to_string(bound + 1) + " past the size bound is " +
                          tail.str() + ", expected 0");
  }
  return total;
}

// Memoized prefixes of a two-term delayed recurrence, one vector per h.
class RecurrenceCache {
 public:
  template <class Seed>
  Nat get(int n, int h, Seed&& seed_end) {
    std::lock_guard lock(mutex_);
    auto& values = by_h_[h];
    const int last_seed = seed_end(h);
    while (static_cast<int>(values.size()) <= n) {
      const int m = static_cast<int>(values.size());
      if (m <= last_seed) {
        values.emplace_back(m + 1);
      } else {
        values.push_back(values[m - 1] + values[m - h - 1]);
      }
    }
    return values[n];
  }

  void clear() {
    std::lock_guard lock(mutex_);
    by_h_.clear();
  }

 private:
  std::mutex mutex_;
  std::map<int, std::vector<Nat>> by_h_;
};

RecurrenceCache& path_cache() {
  static RecurrenceCache cache;
  return cache;
}

RecurrenceCache& cycle_cache() {
  static RecurrenceCache cache;
  return cache;
}

struct SequenceRegistry {
  std::mutex mutex;
  std::map<std::pair<HSequence::Kind, int>, std::shared_ptr<const HSequence>> entries;
};

SequenceRegistry& registry() {
  static SequenceRegistry r;
  return r;
}

}  // namespace

namespace detail {

void clear_memo_caches() {
  path_cache().clear();
  cycle_cache().clear();
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  r.entries.clear();
}

}  // namespace detail

Nat binom(long m, long k) {
  if (k < 0) return Nat{};
  if (k == 0) return Nat{1};
  if (m < 0) {
    if (fault::active() == fault::Fault::binomial_negative_top) {
      // |C(m, k)| under the signed convention: C(k - m - 1, k).
      return binom(k - m - 1, k);
    }
    return Nat{};
  }
  if (k > m) return Nat{};
  const long r = std::min(k, m - k);
  Int acc = 1;
  for (long i = 1; i <= r; ++i) {
    acc *= m - r + i;
    acc /= i;  // exact: acc is C(m - r + i, i) here
  }
  return Nat(std::move(acc));
}

int size_bound(int n, int h) {
  require_nonneg(n, "n", "size_bound");
  require_nonneg(h, "h", "size_bound");
  return (n + h) / (h + 1);
}

Nat path_count_k(int n, int h, int k) {
  require_nonneg(n, "n", "path_count_k");
  require_nonneg(h, "h", "path_count_k");
  if (k < 0) return Nat{};
  return binom(static_cast<long>(n) - static_cast<long>(h) * k + h, k);
}

Nat path_count(int n, int h) {
  return sum_to_bound(
      0, size_bound(n, h), [&](int k) { return path_count_k(n, h, k); }, "path_count", n, h);
}

Nat path_count_rec(int n, int h) {
  require_nonneg(n, "n", "path_count_rec");
  require_nonneg(h, "h", "path_count_rec");
  return path_cache().get(n, h, [](int hh) { return hh + 1; });
}

Nat path_count_k_clamped(long n, int h, int k) {
  return path_count_k(n < 0 ? 0 : static_cast<int>(n), h, k);
}

Nat path_count_clamped(long n, int h) { return path_count(n < 0 ? 0 : static_cast<int>(n), h); }

Nat cycle_count_k(int n, int h, int k) {
  require_nonneg(n, "n", "cycle_count_k");
  require_nonneg(h, "h", "cycle_count_k");
  if (k < 0) return Nat{};
  if (k == 0) return Nat{1};
  if (k == 1) return Nat{n};
  const Nat numerator = Nat{n} * binom(static_cast<long>(n) - static_cast<long>(h) * k - 1, k - 1);
  return numerator.divide_exact(Nat{k});
}

Nat cycle_count(int n, int h) {
  return sum_to_bound(
      0, size_bound(n, h), [&](int k) { return cycle_count_k(n, h, k); }, "cycle_count", n, h);
}

Nat cycle_count_rec(int n, int h) {
  require_nonneg(n, "n", "cycle_count_rec");
  require_nonneg(h, "h", "cycle_count_rec");
  return cycle_cache().get(n, h, [](int hh) { return 2 * hh + 1; });
}

// --- HSequence ---------------------------------------------------------------

HSequence::HSequence(Kind kind, int h) : kind_(kind), h_(h) {
  require_nonneg(h, "h", "HSequence");
  if ((kind == Kind::extended_fibonacci || kind == Kind::extended_lucas) && h < 2) {
    throw std::invalid_argument("HSequence: extended sequences require h >= 2, got " +
                                std::to_string(h));
  }
}

long HSequence::first_index() const {
  return (kind_ == Kind::fibonacci || kind_ == Kind::lucas) ? 1 : -static_cast<long>(h_);
}

long HSequence::seed_end() const {
  return (kind_ == Kind::fibonacci || kind_ == Kind::lucas) ? h_ + 1 : 0;
}

Int HSequence::seed(long n) const {
  switch (kind_) {
    case Kind::fibonacci:
      if (n == h_ + 1 && fault::active() == fault::Fault::fibonacci_seed) return 2;
      return 1;
    case Kind::lucas:
      if (n == 1) return fault::active() == fault::Fault::lucas_seed ? h_ : h_ + 1;
      return 1;
    case Kind::extended_fibonacci:
      return n == -h_ ? 1 : 0;
    case Kind::extended_lucas:
      if (n == -h_) return h_ + 1;
      if (n == -h_ + 1) return -h_;
      return 0;
  }
  return 0;
}

Int HSequence::term(long n) const {
  const long first = first_index();
  if (n < first) {
    throw std::out_of_range("HSequence::term: index " + std::to_string(n) + " below first index " +
                            std::to_string(first));
  }
  std::lock_guard lock(mutex_);
  while (static_cast<long>(terms_.size()) <= n - first) {
    const long m = first + static_cast<long>(terms_.size());
    if (m <= seed_end()) {
      terms_.push_back(seed(m));
    } else {
      terms_.push_back(terms_[m - 1 - first] + terms_[m - h_ - 1 - first]);
    }
  }
  return terms_[n - first];
}

std::shared_ptr<const HSequence> shared_sequence(HSequence::Kind kind, int h) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  auto& slot = r.entries[{kind, h}];
  if (!slot) slot = std::make_shared<const HSequence>(kind, h);
  return slot;
}

Nat h_fibonacci(int h, long n) {
  return Nat(shared_sequence(HSequence::Kind::fibonacci, h)->term(n));
}

Nat h_lucas(int h, long n) { return Nat(shared_sequence(HSequence::Kind::lucas, h)->term(n)); }

Nat extended_fib(int h, long n) {
  return Nat(shared_sequence(HSequence::Kind::extended_fibonacci, h)->term(n));
}

Int extended_lucas(int h, long n) {
  return shared_sequence(HSequence::Kind::extended_lucas, h)->term(n);
}

Nat convolve(const HSequence& a, const HSequence& b, long n) {
  if (a.h() != b.h()) {
    throw std::invalid_argument("convolve: sequences have different h (" + std::to_string(a.h()) +
                                " vs " + std::to_string(b.h()) + ")");
  }
  if (n < 1) throw std::invalid_argument("convolve: n must be positive, got " + std::to_string(n));
  Int total = 0;
  for (long i = 1; i <= n; ++i) total += a.term(i) * b.term(n - i + 1);
  return Nat(std::move(total));
}

// --- edge counts -------------------------------------------------------------

Nat path_edges(int n, int h) {
  return sum_to_bound(
      1, size_bound(n, h), [&](int k) { return Nat{k} * path_count_k(n, h, k); }, "path_edges", n,
      h);
}

Nat path_edges_conv(int n, int h) {
  require_nonneg(n, "n", "path_edges_conv");
  if (n == 0) return Nat{};
  const auto f = shared_sequence(HSequence::Kind::fibonacci, h);
  return convolve(*f, *f, n);
}

Nat cycle_edges(int n, int h) {
  return sum_to_bound(
      1, size_bound(n, h), [&](int k) { return Nat{k} * cycle_count_k(n, h, k); }, "cycle_edges",
      n, h);
}

namespace {

void require_above_h(int n, int h, const char* fn) {
  require_nonneg(h, "h", fn);
  if (n <= h) {
    throw std::invalid_argument(std::string(fn) + ": requires n > h, got n = " +
                                std::to_string(n) + ", h = " + std::to_string(h));
  }
}

}  // namespace

Nat cycle_edges_closed(int n, int h) {
  require_above_h(n, h, "cycle_edges_closed");
  return Nat{n} * h_fibonacci(h, n - h);
}

Nat cycle_edges_conv(int n, int h) {
  require_above_h(n, h, "cycle_edges_conv");
  const auto f = shared_sequence(HSequence::Kind::fibonacci, h);
  const auto l = shared_sequence(HSequence::Kind::lucas, h);
  return convolve(*f, *l, n - h);
}

Nat t_count(int n, int h, int k, int i) {
  require_nonneg(n, "n", "t_count");
  require_nonneg(h, "h", "t_count");
  if (k < 1) throw std::invalid_argument("t_count: k must be positive, got " + std::to_string(k));
  if (i < 1 || i > n) {
    throw std::out_of_range("t_count: vertex index " + std::to_string(i) + " outside 1.." +
                            std::to_string(n));
  }
  const long left = static_cast<long>(i) - h - 1;
  const long right = static_cast<long>(n) - i - h;
  Nat total;
  for (int r = 0; r < k; ++r) {
    total += path_count_k_clamped(left, h, r) * path_count_k_clamped(right, h, k - 1 - r);
  }
  return total;
}

// --- CountTable ----------------------------------------------------------------

CountTable::CountTable(GraphKind kind, int h, int n_max) : kind_(kind), h_(h) {
  require_nonneg(n_max, "n_max", "CountTable");
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const int bound = size_bound(n, h);
    auto& row = rows_[n];
    row.reserve(static_cast<std::size_t>(bound) + 1);
    for (int k = 0; k <= bound; ++k) {
      row.push_back(kind == GraphKind::path ? path_count_k(n, h, k) : cycle_count_k(n, h, k));
    }
  }
}

Nat CountTable::at(int n, int k) const {
  if (n < 0 || n > n_max()) {
    throw std::out_of_range("CountTable::at: n = " + std::to_string(n) + " outside table");
  }
  const auto& row = rows_[n];
  if (k < 0 || k >= static_cast<int>(row.size())) return Nat{};
  return row[k];
}

Nat CountTable::row_sum(int n) const {
  Nat total;
  for (int k = 0; k <= size_bound(n, h_); ++k) total += at(n, k);
  return total;
}

}  // namespace gapcube

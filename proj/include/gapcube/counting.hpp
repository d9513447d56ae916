#pragma once

// Exact counts of independent sets of path and cycle powers, the h-Fibonacci
// and h-Lucas sequences, and the edge counts of the generalized Fibonacci
// and Lucas cubes.
//
// Notation used in comments: P(n,h) and C(n,h) are the h-th powers of the
// path and cycle on n vertices; p(n,k) and c(n,k) count their independent
// k-subsets; p(n), c(n) count all independent sets; H(n) and M(n) are the
// edge counts of the corresponding Hasse diagrams.

#include "gapcube/graphs.hpp"
#include "gapcube/nat.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace gapcube {

/// Number of k-subsets of an m-set. Never negative: binom(m, 0) = 1 for every
/// m, and the result is 0 when k < 0, m < 0 < k, or k > m.
Nat binom(long m, long k);

/// Largest subset size that can be independent in P(n,h) or C(n,h):
/// ceil(n / (h+1)). Every count summed over k stops here.
int size_bound(int n, int h);

// --- paths ---------------------------------------------------------------

/// p(n,k) = binom(n - hk + h, k). Returns 0 for k < 0.
Nat path_count_k(int n, int h, int k);
/// p(n) as a sum of p(n,k).
Nat path_count(int n, int h);
/// p(n) via p(n) = p(n-1) + p(n-h-1), with p(n) = n+1 for n <= h+1. Memoized.
Nat path_count_rec(int n, int h);

/// p(n,k) with negative n clamped to the n = 0 row.
Nat path_count_k_clamped(long n, int h, int k);
/// p(n) with negative n clamped to p(0) = 1.
Nat path_count_clamped(long n, int h);

// --- cycles --------------------------------------------------------------

/// c(n,0) = 1, c(n,1) = n, otherwise n/k * binom(n - hk - 1, k - 1).
/// The division is checked; a remainder raises ConventionError.
Nat cycle_count_k(int n, int h, int k);
Nat cycle_count(int n, int h);
/// c(n) via c(n) = c(n-1) + c(n-h-1), with c(n) = n+1 for n <= 2h+1. Memoized.
Nat cycle_count_rec(int n, int h);

// --- sequences -----------------------------------------------------------

/// A delayed-recurrence sequence a(n) = a(n-1) + a(n-h-1) with one of four
/// seedings:
///
///   fibonacci           a(n) = 1 for 1 <= n <= h+1
///   lucas               a(1) = h+1, a(n) = 1 for 2 <= n <= h+1
///   extended_fibonacci  a(-h) = 1, a(n) = 0 for -h < n <= 0        (h >= 2)
///   extended_lucas      a(-h) = h+1, a(-h+1) = -h, 0 up to n = 0   (h >= 2)
///
/// The extended kinds agree with the plain ones for n >= 1. Terms are cached
/// in an append-only prefix; term() is safe to call from several threads.
class HSequence {
 public:
  enum class Kind { fibonacci, lucas, extended_fibonacci, extended_lucas };

  HSequence(Kind kind, int h);
  HSequence(const HSequence&) = delete;
  HSequence& operator=(const HSequence&) = delete;

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int h() const { return h_; }
  /// 1 for the plain kinds, -h for the extended ones.
  [[nodiscard]] long first_index() const;

  /// Throws std::out_of_range when n < first_index().
  [[nodiscard]] Int term(long n) const;

 private:
  [[nodiscard]] Int seed(long n) const;
  [[nodiscard]] long seed_end() const;

  Kind kind_;
  int h_;
  mutable std::mutex mutex_;
  mutable std::vector<Int> terms_;  // terms_[n - first_index()]
};

/// Process-wide memoized sequence; cleared when a fault is injected.
std::shared_ptr<const HSequence> shared_sequence(HSequence::Kind kind, int h);

Nat h_fibonacci(int h, long n);
Nat h_lucas(int h, long n);
Nat extended_fib(int h, long n);
/// May be negative (at n = -h+1).
Int extended_lucas(int h, long n);

/// (A * B)(n) = sum_{i=1..n} A(i) B(n-i+1). Both sequences must share h.
Nat convolve(const HSequence& a, const HSequence& b, long n);

// --- Hasse diagram edge counts ---------------------------------------------

/// H(n) = sum_k k p(n,k): each independent k-set covers exactly k sets.
Nat path_edges(int n, int h);
/// H(n) as the self-convolution of the h-Fibonacci sequence at n.
Nat path_edges_conv(int n, int h);

/// M(n) = sum_k k c(n,k). Defined for every n; for 0 < n <= h it is n.
Nat cycle_edges(int n, int h);
/// M(n) = n F(n-h). Requires n > h.
Nat cycle_edges_closed(int n, int h);
/// M(n) = (F * L)(n-h). Requires n > h.
Nat cycle_edges_conv(int n, int h);

/// Number of independent k-subsets of P(n,h) containing v_i, as
/// sum_{r=0}^{k-1} p(i-h-1, r) p(n-i-h, k-1-r) with clamped rows.
/// Requires 1 <= i <= n and k >= 1.
Nat t_count(int n, int h, int k, int i);

// --- tables ----------------------------------------------------------------

/// p(n,k) or c(n,k) for 0 <= n <= n_max and 0 <= k <= size_bound(n, h).
class CountTable {
 public:
  CountTable(GraphKind kind, int h, int n_max);

  [[nodiscard]] GraphKind kind() const { return kind_; }
  [[nodiscard]] int h() const { return h_; }
  [[nodiscard]] int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  /// Zero outside the stored range of k.
  [[nodiscard]] Nat at(int n, int k) const;
  [[nodiscard]] Nat row_sum(int n) const;

 private:
  GraphKind kind_;
  int h_;
  std::vector<std::vector<Nat>> rows_;
};

}  // namespace gapcube

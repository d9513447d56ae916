#include "gapcube/verify.hpp"

#include "gapcube/counting.hpp"
#include "gapcube/cube.hpp"
#include "gapcube/enumeration.hpp"
#include "gapcube/graphs.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace gapcube::verify {
namespace {

Witness at(int n, int h, std::optional<int> k = std::nullopt, std::optional<int> i = std::nullopt) {
  return Witness{n, h, k, i, {}, {}};
}

template <class T>
std::string to_text(const T& v) {
  if constexpr (std::is_same_v<T, bool>) {
    return v ? "true" : "false";
  } else if constexpr (std::is_integral_v<T>) {
    return std::to_string(v);
  } else if constexpr (std::is_convertible_v<T, std::string>) {
    return std::string(v);
  } else {
    return v.str();
  }
}

class Check {
 public:
  explicit Check(IdentityReport& report) : report_(report) {}

  template <class A, class B>
  void equal(const A& expected, const B& actual, Witness where) {
    ++report_.cases;
    if (expected == actual) return;
    where.expected = to_text(expected);
    where.actual = to_text(actual);
    fail(std::move(where));
  }

  // Runs one case; an exception is recorded as a failure at `where`.
  template <class Body>
  void guarded(const Witness& where, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++report_.cases;
      Witness w = where;
      w.expected = "no error";
      w.actual = std::string("error: ") + e.what();
      fail(std::move(w));
    }
  }

 private:
  void fail(Witness w) {
    ++report_.failure_count;
    if (report_.failures.size() < kMaxWitnesses) report_.failures.push_back(std::move(w));
  }

  IdentityReport& report_;
};

// Classical Fibonacci (F_1 = F_2 = 1) and Lucas (L_1 = 1, L_2 = 3) numbers,
// computed here from scratch so they share nothing with HSequence.
Nat classical_fibonacci(int n) {
  Int a = 0;
  Int b = 1;  // F_0, F_1
  for (int i = 0; i < n; ++i) {
    Int next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return Nat(std::move(a));
}

Nat classical_lucas(int n) {
  if (n == 1) return Nat{1};
  Int a = 1;
  Int b = 3;  // L_1, L_2
  for (int i = 2; i < n; ++i) {
    Int next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return Nat(std::move(b));
}

Nat power_of_two(int e) { return Nat(Int(1) << e); }

std::vector<GraphKind> both_kinds() { return {GraphKind::path, GraphKind::cycle}; }

Nat count_of(GraphKind kind, int n, int h) {
  return kind == GraphKind::path ? path_count(n, h) : cycle_count(n, h);
}

Nat count_k_of(GraphKind kind, int n, int h, int k) {
  return kind == GraphKind::path ? path_count_k(n, h, k) : cycle_count_k(n, h, k);
}

// --- counting identities ----------------------------------------------------------

void path_k_vanishing(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 0; n <= b.n_max; ++n)
      for (int k = 0; k <= n + 2; ++k) {
        if (static_cast<long>(n) - static_cast<long>(h) * k + h >= 0) continue;
        c.guarded(at(n, h, k), [&] { c.equal(Nat{}, path_count_k(n, h, k), at(n, h, k)); });
      }
}

void path_recurrence(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 0; n <= b.n_max; ++n)
      c.guarded(at(n, h), [&] { c.equal(path_count(n, h), path_count_rec(n, h), at(n, h)); });
}

void cycle_k_exact_division(Check& c, const SweepBounds& b) {
  // cycle_count_k raises on an inexact division; every k up to one past the
  // bound must divide cleanly.
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 0; n <= b.n_max; ++n)
      for (int k = 0; k <= size_bound(n, h) + 1; ++k)
        c.guarded(at(n, h, k), [&] {
          const Nat v = cycle_count_k(n, h, k);
          c.equal(true, k <= size_bound(n, h) || v.is_zero(), at(n, h, k));
        });
}

void cycle_recurrence(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 0; n <= b.n_max; ++n)
      c.guarded(at(n, h), [&] { c.equal(cycle_count(n, h), cycle_count_rec(n, h), at(n, h)); });
}

void cycle_path_bridge(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 3 * h + 3; n <= b.n_max; ++n)
      for (int k = 1; k <= size_bound(n - h - 1, h) + 1; ++k)
        c.guarded(at(n, h, k), [&] {
          const Nat lhs = path_count_k(n - 2 * h - 1, h, k - 1) +
                          Nat{h} * path_count_k(n - 3 * h - 2, h, k - 2);
          c.equal(cycle_count_k(n - h - 1, h, k - 1), lhs, at(n, h, k));
        });
}

void coefficient_shift(Check& c, const SweepBounds& b) {
  for (int h = 1; h <= b.h_max; ++h)
    for (int n = 0; n <= b.n_max; ++n)
      for (int k = 0; k <= n + 1; ++k) {
        if (n - k + 1 < 0) continue;
        c.guarded(at(n, h, k), [&] {
          c.equal(path_count_k(n, h, k), path_count_k(n - k + 1, h - 1, k), at(n, h, k));
        });
      }
}

void fibonacci_path_bridge(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int i = 1; i <= b.n_max; ++i)
      c.guarded(at(i, h), [&] {
        c.equal(path_count_clamped(static_cast<long>(i) - h - 1, h), h_fibonacci(h, i), at(i, h));
      });
}

void lucas_cycle_bridge(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int i = h + 2; i <= b.n_max; ++i)
      c.guarded(at(i, h), [&] { c.equal(cycle_count(i - 1, h), h_lucas(h, i), at(i, h)); });
}

void vertex_count_sums(Check& c, const SweepBounds& b) {
  const int n_max = std::min(b.n_max, 25);
  const int h_max = std::min(b.h_max, 5);
  for (int h = 0; h <= h_max; ++h)
    for (int n = 1; n <= n_max; ++n)
      c.guarded(at(n, h), [&] {
        Nat total;
        for (int k = 1; k <= size_bound(n, h); ++k) {
          Nat row;
          for (int i = 1; i <= n; ++i) row += t_count(n, h, k, i);
          c.equal(Nat{k} * path_count_k(n, h, k), row, at(n, h, k));
          total += row;
        }
        c.equal(path_edges(n, h), total, at(n, h));
      });
}

void vertex_count_product(Check& c, const SweepBounds& b) {
  const int n_max = std::min(b.n_max, 25);
  const int h_max = std::min(b.h_max, 5);
  for (int h = 0; h <= h_max; ++h)
    for (int n = 1; n <= n_max; ++n)
      for (int i = 1; i <= n; ++i)
        c.guarded(at(n, h, std::nullopt, i), [&] {
          Nat sum;
          for (int k = 1; k <= size_bound(n, h); ++k) sum += t_count(n, h, k, i);
          const Nat product = path_count_clamped(static_cast<long>(i) - h - 1, h) *
                              path_count_clamped(static_cast<long>(n) - h - i, h);
          c.equal(product, sum, at(n, h, std::nullopt, i));
        });
}

void path_edges_convolution(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 0; n <= b.n_max; ++n)
      c.guarded(at(n, h), [&] { c.equal(path_edges(n, h), path_edges_conv(n, h), at(n, h)); });
}

void cycle_edges_closed_form(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = h + 1; n <= b.n_max; ++n)
      c.guarded(at(n, h), [&] { c.equal(cycle_edges(n, h), cycle_edges_closed(n, h), at(n, h)); });
}

void cycle_edges_convolution(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = h + 1; n <= b.n_max; ++n)
      c.guarded(at(n, h), [&] {
        const Nat conv = cycle_edges_conv(n, h);
        c.equal(cycle_edges(n, h), conv, at(n, h));
        c.equal(cycle_edges_closed(n, h), conv, at(n, h));
      });
}

void lucas_fibonacci_relation(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = h + 1; n <= b.n_max; ++n)
      c.guarded(at(n, h), [&] {
        const Nat rhs = h_fibonacci(h, n) + Nat{h + 1} * h_fibonacci(h, n - h);
        c.equal(rhs, h_lucas(h, n + 1), at(n, h));
      });
}

void extended_agreement(Check& c, const SweepBounds& b) {
  for (int h = 2; h <= b.h_max; ++h)
    for (int n = 1; n <= b.n_max; ++n)
      c.guarded(at(n, h), [&] {
        c.equal(h_fibonacci(h, n), extended_fib(h, n), at(n, h));
        c.equal(h_lucas(h, n).value(), extended_lucas(h, n), at(n, h));
      });
}

void classical_path_fibonacci(Check& c, const SweepBounds& b) {
  if (b.h_max < 1) return;
  for (int n = 0; n <= b.n_max; ++n)
    c.guarded(at(n, 1), [&] { c.equal(classical_fibonacci(n + 2), path_count(n, 1), at(n, 1)); });
}

void classical_cycle_lucas(Check& c, const SweepBounds& b) {
  if (b.h_max < 1) return;
  for (int n = 2; n <= b.n_max; ++n)
    c.guarded(at(n, 1), [&] { c.equal(classical_lucas(n), cycle_count(n, 1), at(n, 1)); });
}

void classical_path_edges(Check& c, const SweepBounds& b) {
  if (b.h_max < 1) return;
  for (int n = 1; n <= b.n_max; ++n)
    c.guarded(at(n, 1), [&] {
      Nat sum;
      for (int i = 1; i <= n; ++i) sum += classical_fibonacci(i) * classical_fibonacci(n - i + 1);
      c.equal(sum, path_edges(n, 1), at(n, 1));
      c.equal(sum, path_edges_conv(n, 1), at(n, 1));
    });
}

void classical_cycle_edges(Check& c, const SweepBounds& b) {
  if (b.h_max < 1) return;
  for (int n = 2; n <= b.n_max; ++n)
    c.guarded(at(n, 1), [&] {
      const Nat expected = Nat{n} * classical_fibonacci(n - 1);
      c.equal(expected, cycle_edges(n, 1), at(n, 1));
      c.equal(expected, cycle_edges_conv(n, 1), at(n, 1));
    });
}

void boolean_lattice(Check& c, const SweepBounds& b) {
  for (int n = 0; n <= b.n_max; ++n)
    c.guarded(at(n, 0), [&] {
      const Nat vertices = power_of_two(n);
      const Nat edges = n == 0 ? Nat{} : Nat{n} * power_of_two(n - 1);
      c.equal(vertices, path_count(n, 0), at(n, 0));
      c.equal(vertices, cycle_count(n, 0), at(n, 0));
      c.equal(edges, path_edges(n, 0), at(n, 0));
      c.equal(edges, cycle_edges(n, 0), at(n, 0));
    });
}

// --- graph identities ---------------------------------------------------------------

void graph_symmetric(Check& c, const SweepBounds& b) {
  for (auto kind : both_kinds())
    for (int h = 0; h <= b.h_max; ++h)
      for (int n = 0; n <= b.n_max; ++n) {
        const GapGraph g(kind, n, h);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            c.equal(g.is_edge(i, j), g.is_edge(j, i), at(n, h, std::nullopt, i));
            if (i == j) c.equal(false, g.is_edge(i, i), at(n, h, std::nullopt, i));
          }
      }
}

void graph_path_edge_count(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 0; n <= b.n_max; ++n) {
      const GapGraph g(GraphKind::path, n, h);
      long direct = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) direct += g.is_edge(i, j) ? 1 : 0;
      c.equal(direct, static_cast<long>(g.edges().size()), at(n, h));
      const long closed = n >= h ? static_cast<long>(n) * h - static_cast<long>(h) * (h + 1) / 2
                                 : static_cast<long>(n) * (n - 1) / 2;
      c.equal(closed, direct, at(n, h));
    }
}

void graph_cycle_complete(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 0; n <= std::min(b.n_max, 2 * h + 1); ++n) {
      const GapGraph g(GraphKind::cycle, n, h);
      c.equal(static_cast<long>(n) * (n - 1) / 2, static_cast<long>(g.edges().size()), at(n, h));
    }
}

void graph_cycle_circular(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 1; n <= b.n_max; ++n) {
      const GapGraph g(GraphKind::cycle, n, h);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          const int d = std::abs(j - i);
          c.equal(std::min(d, n - d) <= h, g.is_edge(i, j), at(n, h, std::nullopt, i));
        }
    }
}

void graph_path_in_cycle(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 0; n <= b.n_max; ++n) {
      const GapGraph path(GraphKind::path, n, h);
      const GapGraph cycle(GraphKind::cycle, n, h);
      for (const auto& [i, j] : path.edges()) c.equal(true, cycle.is_edge(i, j), at(n, h, std::nullopt, i));
    }
}

// --- enumeration identities -----------------------------------------------------------

void oracle_counts(Check& c, const SweepBounds& b, GraphKind kind) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 0; n <= b.oracle_n_max; ++n)
      c.guarded(at(n, h), [&] {
        const auto histogram = count_by_size(GapGraph(kind, n, h), b.oracle_n_max);
        Nat total;
        for (int k = 0; k <= n + 1; ++k) {
          const auto it = histogram.find(k);
          const Nat observed = it == histogram.end() ? Nat{} : it->second;
          c.equal(observed, count_k_of(kind, n, h, k), at(n, h, k));
          total += observed;
        }
        c.equal(total, count_of(kind, n, h), at(n, h));
      });
}

void path_k_oracle(Check& c, const SweepBounds& b) { oracle_counts(c, b, GraphKind::path); }
void cycle_k_oracle(Check& c, const SweepBounds& b) { oracle_counts(c, b, GraphKind::cycle); }

// Visits every k-subset of {1..m} in lexicographic order.
void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) s[static_cast<std::size_t>(j)] = j + 1;
  if (k > m) return;
  while (true) {
    visit(s);
    int j = k - 1;
    while (j >= 0 && s[static_cast<std::size_t>(j)] == m - k + j + 1) --j;
    if (j < 0) return;
    ++s[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t) s[static_cast<std::size_t>(t)] = s[static_cast<std::size_t>(t - 1)] + 1;
  }
}

void path_k_bijection(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 0; n <= b.oracle_n_max; ++n)
      for (int k = 0; static_cast<long>(n) - static_cast<long>(h) * k + h >= 0 && k <= n + 1; ++k) {
        const int ground = n - h * k + h;
        c.guarded(at(n, h, k), [&] {
          std::vector<std::uint64_t> images;
          bool all_independent = true;
          bool round_trip = true;
          for_each_subset(ground, k, [&](const std::vector<int>& subset) {
            const VertexMask image = bijection_f(subset, n, h);
            images.push_back(image.bits());
            all_independent = all_independent && image.size() == k && gap_check(image, h, Wrap::linear);
            round_trip = round_trip && bijection_f_inv(image, h) == subset;
          });
          std::sort(images.begin(), images.end());
          const auto distinct = static_cast<std::uint64_t>(
              std::unique(images.begin(), images.end()) - images.begin());
          c.equal(static_cast<std::uint64_t>(images.size()), distinct, at(n, h, k));
          c.equal(binom(ground, k), Nat{distinct}, at(n, h, k));
          c.equal(path_count_k(n, h, k), Nat{distinct}, at(n, h, k));
          c.equal(true, all_independent, at(n, h, k));
          c.equal(true, round_trip, at(n, h, k));
        });
      }
}

void vertex_count_oracle(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 1; n <= b.oracle_n_max; ++n)
      c.guarded(at(n, h), [&] {
        // tally[k][i]: independent k-sets containing v_i
        std::vector<std::vector<std::uint64_t>> tally(
            static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
        for_each_independent(
            GapGraph(GraphKind::path, n, h),
            [&](const VertexMask& s) {
              for (int i : s.indices()) ++tally[static_cast<std::size_t>(s.size())][static_cast<std::size_t>(i)];
            },
            b.oracle_n_max);
        for (int k = 1; k <= n; ++k)
          for (int i = 1; i <= n; ++i)
            c.equal(Nat{tally[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]}, t_count(n, h, k, i),
                    at(n, h, k, i));
      });
}

void characterizations_agree(Check& c, const SweepBounds& b) {
  for (int h = 1; h <= b.h_max; ++h)
    for (int n = 0; n <= b.oracle_n_max; ++n) {
      const GapGraph path(GraphKind::path, n, h);
      const GapGraph cycle(GraphKind::cycle, n, h);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const VertexMask s(n, bits);
        const bool linear = gap_check(s, h, Wrap::linear);
        const bool circular = gap_check(s, h, Wrap::circular);
        c.equal(is_independent(path, s), linear, at(n, h));
        c.equal(avoids_substrings(s, h, Wrap::linear), linear, at(n, h));
        c.equal(is_independent(cycle, s), circular, at(n, h));
        c.equal(avoids_substrings(s, h, Wrap::circular), circular, at(n, h));
      }
    }
}

void enumeration_order(Check& c, const SweepBounds& b) {
  for (auto kind : both_kinds())
    for (int h = 0; h <= b.h_max; ++h)
      for (int n = 0; n <= b.oracle_n_max; ++n)
        c.guarded(at(n, h), [&] {
          const GapGraph g(kind, n, h);
          bool ascending = true;
          bool independent = true;
          std::optional<std::uint64_t> previous;
          for_each_independent(
              g,
              [&](const VertexMask& s) {
                if (previous && *previous >= s.bits()) ascending = false;
                previous = s.bits();
                if (!gap_check(s, h, kind == GraphKind::path ? Wrap::linear : Wrap::circular)) independent = false;
              },
              b.oracle_n_max);
          c.equal(true, ascending, at(n, h));
          c.equal(true, independent, at(n, h));
        });
}

// --- cube identities ---------------------------------------------------------------------

template <class Body>
void for_each_cube(Check& c, const SweepBounds& b, Body&& body) {
  for (auto kind : both_kinds())
    for (int h = 0; h <= b.h_max; ++h)
      for (int n = 0; n <= b.oracle_n_max; ++n)
        c.guarded(at(n, h), [&] { body(build_cube(GapGraph(kind, n, h), b.oracle_n_max), kind, n, h); });
}

Nat weighted_rank_sum(const CubeGraph& cube) {
  Nat total;
  for (const auto& [k, count] : rank_profile(cube)) total += Nat{k} * count;
  return total;
}

void cube_counts(Check& c, const SweepBounds& b) {
  for_each_cube(c, b, [&](const CubeGraph& cube, GraphKind kind, int n, int h) {
    const Nat vertices{cube.vertices().size()};
    const Nat covers{cube.covers().size()};
    c.equal(count_of(kind, n, h), vertices, at(n, h));
    if (kind == GraphKind::path) {
      c.equal(path_edges(n, h), covers, at(n, h));
    } else if (n > h) {
      c.equal(cycle_edges(n, h), covers, at(n, h));
    } else {
      c.equal(weighted_rank_sum(cube), covers, at(n, h));
    }
  });
}

void cube_rank_profile(Check& c, const SweepBounds& b) {
  for_each_cube(c, b, [&](const CubeGraph& cube, GraphKind kind, int n, int h) {
    const auto profile = rank_profile(cube);
    for (int k = 0; k <= n + 1; ++k) {
      const auto it = profile.find(k);
      c.equal(count_k_of(kind, n, h, k), it == profile.end() ? Nat{} : it->second, at(n, h, k));
    }
  });
}

void cube_hamming(Check& c, const SweepBounds& b) {
  for_each_cube(c, b, [&](const CubeGraph& cube, GraphKind, int n, int h) {
    c.equal(static_cast<std::uint64_t>(cube.covers().size()), hamming_pairs(cube), at(n, h));
  });
}

void cube_covers(Check& c, const SweepBounds& b) {
  for_each_cube(c, b, [&](const CubeGraph& cube, GraphKind, int n, int h) {
    bool ok = true;
    for (const auto& e : cube.covers()) {
      const VertexMask& lower = cube.vertices()[e.lower];
      const VertexMask& upper = cube.vertices()[e.upper];
      const bool subset = (lower.bits() & ~upper.bits()) == 0;
      const bool one_more = upper.size() == lower.size() + 1;
      ok = ok && subset && one_more && is_independent(cube.source(), lower) &&
           is_independent(cube.source(), upper);
    }
    c.equal(true, ok, at(n, h));
  });
}

void cube_star(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 0; n <= std::min(b.oracle_n_max, 2 * h + 1); ++n)
      c.guarded(at(n, h), [&] {
        const CubeGraph cube = build_cube(GapGraph(GraphKind::cycle, n, h), b.oracle_n_max);
        c.equal(static_cast<std::uint64_t>(n) + 1, static_cast<std::uint64_t>(cube.vertices().size()), at(n, h));
        c.equal(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(cube.covers().size()), at(n, h));
      });
}

void cube_classical(Check& c, const SweepBounds& b) {
  if (b.h_max < 1) return;
  for (int n = 0; n <= b.oracle_n_max; ++n)
    c.guarded(at(n, 1), [&] {
      const CubeGraph fib = build_cube(GapGraph(GraphKind::path, n, 1), b.oracle_n_max);
      Nat fib_edges;
      for (int i = 1; i <= n; ++i) fib_edges += classical_fibonacci(i) * classical_fibonacci(n - i + 1);
      c.equal(classical_fibonacci(n + 2), Nat{fib.vertices().size()}, at(n, 1));
      c.equal(fib_edges, Nat{fib.covers().size()}, at(n, 1));
      if (n > 1) {
        const CubeGraph lucas = build_cube(GapGraph(GraphKind::cycle, n, 1), b.oracle_n_max);
        c.equal(classical_lucas(n), Nat{lucas.vertices().size()}, at(n, 1));
        c.equal(Nat{n} * classical_fibonacci(n - 1), Nat{lucas.covers().size()}, at(n, 1));
      }
    });
}

void cube_vertex_filter(Check& c, const SweepBounds& b) {
  for (int h = 0; h <= b.h_max; ++h)
    for (int n = 1; n <= b.oracle_n_max; ++n)
      c.guarded(at(n, h), [&] {
        const CubeGraph cube = build_cube(GapGraph(GraphKind::path, n, h), b.oracle_n_max);
        for (int k = 1; k <= size_bound(n, h); ++k)
          for (int i = 1; i <= n; ++i)
            c.equal(t_count(n, h, k, i), vertex_filter_count(cube, k, i), at(n, h, k, i));
      });
}

// --- registry ------------------------------------------------------------------------------

struct Identity {
  std::string_view id;
  std::string_view description;
  void (*run)(Check&, const SweepBounds&);
};

constexpr std::array kRegistry{
    Identity{"path-k-vanishing", "p(n,k) = 0 whenever n - hk + h < 0", path_k_vanishing},
    Identity{"path-k-oracle", "enumerated path sets by size equal binom(n-hk+h, k)", path_k_oracle},
    Identity{"path-k-bijection", "f is injective onto independent k-sets and inverted by f^-1", path_k_bijection},
    Identity{"path-recurrence", "p(n) by binomial sum equals the delayed recurrence", path_recurrence},
    Identity{"coeff-shift", "p(n,k; h) = p(n-k+1, k; h-1)", coefficient_shift},
    Identity{"characterizations-agree", "gap check, graph independence and forbidden substrings agree", characterizations_agree},
    Identity{"enumeration-order", "enumeration is ascending and yields only independent sets", enumeration_order},
    Identity{"vertex-count-oracle", "T(k,i) equals the enumerated count of k-sets containing v_i", vertex_count_oracle},
    Identity{"vertex-count-sums", "sum over i of T(k,i) is k p(n,k); double sum is H(n)", vertex_count_sums},
    Identity{"vertex-count-product", "sum over k of T(k,i) = p(i-h-1) p(n-h-i), clamped", vertex_count_product},
    Identity{"fibonacci-path-bridge", "F(i) = p(i-h-1), clamped", fibonacci_path_bridge},
    Identity{"path-edges-convolution", "H(n) = (F * F)(n)", path_edges_convolution},
    Identity{"cycle-k-exact-division", "n binom(n-hk-1, k-1) is divisible by k", cycle_k_exact_division},
    Identity{"cycle-k-oracle", "enumerated cycle sets by size equal c(n,k)", cycle_k_oracle},
    Identity{"cycle-recurrence", "c(n) by sum equals the delayed recurrence", cycle_recurrence},
    Identity{"cycle-path-bridge", "p(n-2h-1,k-1) + h p(n-3h-2,k-2) = c(n-h-1,k-1)", cycle_path_bridge},
    Identity{"lucas-cycle-bridge", "L(i) = c(i-1) for i > h+1", lucas_cycle_bridge},
    Identity{"cycle-edges-closed", "M(n) = n F(n-h) for n > h", cycle_edges_closed_form},
    Identity{"lucas-fibonacci-relation", "L(n+1) = F(n) + (h+1) F(n-h) for n > h", lucas_fibonacci_relation},
    Identity{"cycle-edges-convolution", "M(n) = (F * L)(n-h) for n > h", cycle_edges_convolution},
    Identity{"extended-sequences", "extended sequences agree with F and L for n >= 1", extended_agreement},
    Identity{"classical-path-fibonacci", "p(n) for h = 1 is the Fibonacci number F(n+2)", classical_path_fibonacci},
    Identity{"classical-path-edges", "H(n) for h = 1 is sum F(i) F(n-i+1)", classical_path_edges},
    Identity{"classical-cycle-lucas", "c(n) for h = 1 is the Lucas number L(n), n > 1", classical_cycle_lucas},
    Identity{"classical-cycle-edges", "M(n) for h = 1 is n F(n-1), n > 1", classical_cycle_edges},
    Identity{"boolean-lattice", "h = 0: 2^n vertices and n 2^(n-1) edges", boolean_lattice},
    Identity{"graph-symmetric", "adjacency is symmetric and irreflexive", graph_symmetric},
    Identity{"graph-path-edge-count", "path power edge count matches nh - h(h+1)/2", graph_path_edge_count},
    Identity{"graph-cycle-complete", "cycle power with n <= 2h+1 is complete", graph_cycle_complete},
    Identity{"graph-cycle-circular", "cycle adjacency is circular distance <= h", graph_cycle_circular},
    Identity{"graph-path-in-cycle", "path power edges are cycle power edges", graph_path_in_cycle},
    Identity{"cube-counts", "Hasse diagram has p(n)/c(n) vertices and H(n)/M(n) edges", cube_counts},
    Identity{"cube-rank-profile", "rank sizes equal p(n,k)/c(n,k)", cube_rank_profile},
    Identity{"cube-hamming", "Hamming-distance-1 pairs are exactly the covers", cube_hamming},
    Identity{"cube-covers", "every cover adds one element to an independent set", cube_covers},
    Identity{"cube-star", "cycle with n <= 2h+1 gives n+1 vertices and n covers", cube_star},
    Identity{"cube-classical", "h = 1 diagrams have Fibonacci/Lucas cube sizes", cube_classical},
    Identity{"cube-vertex-filter", "rank-k vertices containing v_i number T(k,i)", cube_vertex_filter},
};

void validate(const SweepBounds& b) {
  if (b.n_max < 0 || b.h_max < 0 || b.oracle_n_max < 0) {
    throw std::invalid_argument("verify: sweep bounds must be nonnegative");
  }
  if (b.oracle_n_max > kDefaultEnumerationCap) {
    throw CapacityError("verify: oracle_n_max " + std::to_string(b.oracle_n_max) +
                        " exceeds the enumeration cap of " + std::to_string(kDefaultEnumerationCap));
  }
}

IdentityReport run_one(const Identity& identity, const SweepBounds& bounds) {
  IdentityReport report;
  report.id = identity.id;
  report.description = identity.description;
  report.bounds = bounds;
  Check check(report);
  check.guarded(Witness{}, [&] { identity.run(check, bounds); });
  return report;
}

nlohmann::json witness_json(const Witness& w) {
  nlohmann::json j = nlohmann::json::object();
  if (w.n) j["n"] = *w.n;
  if (w.h) j["h"] = *w.h;
  if (w.k) j["k"] = *w.k;
  if (w.i) j["i"] = *w.i;
  j["expected"] = w.expected;
  j["actual"] = w.actual;
  return j;
}

std::string witness_text(const Witness& w) {
  std::string s;
  const auto field = [&](const char* name, const std::optional<int>& v) {
    if (!v) return;
    if (!s.empty()) s += ' ';
    s += name;
    s += '=';
    s += std::to_string(*v);
  };
  field("n", w.n);
  field("h", w.h);
  field("k", w.k);
  field("i", w.i);
  if (!s.empty()) s += ' ';
  return s + "expected=" + w.expected + " actual=" + w.actual;
}

}  // namespace

std::vector<std::string_view> identity_ids() {
  std::vector<std::string_view> ids;
  ids.reserve(kRegistry.size());
  for (const auto& identity : kRegistry) ids.push_back(identity.id);
  return ids;
}

std::vector<IdentityReport> run_suite(const SweepBounds& bounds) {
  validate(bounds);
  std::vector<IdentityReport> reports;
  reports.reserve(kRegistry.size());
  for (const auto& identity : kRegistry) reports.push_back(run_one(identity, bounds));
  return reports;
}

IdentityReport run_identity(std::string_view id, const SweepBounds& bounds) {
  validate(bounds);
  for (const auto& identity : kRegistry) {
    if (identity.id == id) return run_one(identity, bounds);
  }
  throw std::invalid_argument("verify: unknown identity '" + std::string(id) + "'");
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return r.status() == Status::pass; });
}

void write_json(std::ostream& os, const std::vector<IdentityReport>& reports) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& w : r.failures) failures.push_back(witness_json(w));
    list.push_back({
        {"id", r.id},
        {"description", r.description},
        {"bounds", {{"n_max", r.bounds.n_max}, {"h_max", r.bounds.h_max}, {"oracle_n_max", r.bounds.oracle_n_max}}},
        {"status", r.status() == Status::pass ? "pass" : "fail"},
        {"cases", r.cases},
        {"failure_count", r.failure_count},
        {"failures", std::move(failures)},
    });
  }
  const nlohmann::json doc = {{"all_pass", all_pass(reports)}, {"identities", std::move(list)}};
  os << doc.dump(2) << '\n';
}

void write_summary(std::ostream& os, const std::vector<IdentityReport>& reports, char sep) {
  os << "id" << sep << "status" << sep << "cases" << sep << "failures" << sep << "first_witness\n";
  for (const auto& r : reports) {
    os << r.id << sep << (r.status() == Status::pass ? "pass" : "FAIL") << sep << r.cases << sep
       << r.failure_count << sep << (r.failures.empty() ? "-" : witness_text(r.failures.front())) << '\n';
  }
}

}  // namespace gapcube::verify

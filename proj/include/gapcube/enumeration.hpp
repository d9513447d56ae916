#pragma once

// Brute-force side of the library: independent sets as bit strings, the
// gap and forbidden-substring characterizations, and the bijection between
// k-subsets of an (n - hk + h)-set and independent k-subsets of P(n,h).

#include "gapcube/graphs.hpp"
#include "gapcube/nat.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gapcube {

/// Thrown when an enumeration would exceed the configured vertex cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEnumerationCap = 24;
inline constexpr int kMaxMaskLength = 63;

/// A subset of {v_1..v_n} stored as an n-bit word; bit (i-1) is v_i.
/// The text form is b_1 b_2 ... b_n, so "1001" is {v_1, v_4}.
class VertexMask {
 public:
  VertexMask() = default;
  /// Throws std::invalid_argument if n is out of range or bits has a bit at
  /// position >= n.
  VertexMask(int n, std::uint64_t bits);

  static VertexMask from_string(std::string_view text);
  /// Throws std::invalid_argument for indices outside 1..n or repeats.
  static VertexMask from_indices(int n, std::span<const int> indices);

  [[nodiscard]] int length() const { return n_; }
  [[nodiscard]] std::uint64_t bits() const { return bits_; }
  [[nodiscard]] bool contains(int i) const { return i >= 1 && i <= n_ && ((bits_ >> (i - 1)) & 1U); }
  [[nodiscard]] int size() const;
  /// Sorted 1-based vertex indices.
  [[nodiscard]] std::vector<int> indices() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const VertexMask&, const VertexMask&) = default;
  friend auto operator<=>(const VertexMask&, const VertexMask&) = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

enum class Wrap { linear, circular };

/// No two members of `s` are adjacent in `g`. Throws std::invalid_argument
/// if the lengths differ.
bool is_independent(const GapGraph& g, const VertexMask& s);

/// Every pair of 1s at positions i < j has j - i > h; in circular mode also
/// n - (j - i) > h.
bool gap_check(const VertexMask& s, int h, Wrap wrap);

/// `s` contains none of 11, 101, ..., 1 0^{h-1} 1 as a substring (or as a
/// circular substring). Requires h >= 1.
bool avoids_substrings(const VertexMask& s, int h, Wrap wrap);

/// Calls `visit` for every independent set of `g` in ascending numeric order
/// of the bit word. Backtracking only ever extends independent prefixes.
/// Throws CapacityError when g.n() > cap.
void for_each_independent(const GapGraph& g, const std::function<void(const VertexMask&)>& visit,
                          int cap = kDefaultEnumerationCap);

std::vector<VertexMask> enumerate(const GapGraph& g, int cap = kDefaultEnumerationCap);

/// Histogram of independent sets by size; sizes with no sets are absent.
std::map<int, Nat> count_by_size(const GapGraph& g, int cap = kDefaultEnumerationCap);

/// {i_1 < ... < i_k} subset of {1..n-hk+h}  ->  {v_{i_j + (j-1)h}}.
VertexMask bijection_f(std::span<const int> subset, int n, int h);
/// Inverse of bijection_f: subtracts (j-1)h from the j-th member. Throws
/// std::invalid_argument if `s` fails the linear gap check.
std::vector<int> bijection_f_inv(const VertexMask& s, int h);

}  // namespace gapcube

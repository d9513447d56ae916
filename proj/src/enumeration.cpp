#include "gapcube/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gapcube {
namespace {

std::string describe(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "}";
}

class Backtracker {
 public:
  Backtracker(const GapGraph& g, const std::function<void(const VertexMask&)>& visit)
      : n_(g.n()), h_(g.h()), circular_(g.kind() == GraphKind::cycle), visit_(visit) {}

  void run() { descend(n_, 0, 0, 0); }

 private:
  // Positions are decided from v_n down to v_1, absent before present, which
  // yields ascending numeric order with v_1 as the least significant bit.
  // `lowest` is the smallest chosen index so far, `highest` the largest.
  void descend(int i, std::uint64_t bits, int lowest, int highest) {
    if (i == 0) {
      visit_(VertexMask(n_, bits));
      return;
    }
    descend(i - 1, bits, lowest, highest);
    if (can_take(i, lowest, highest)) {
      descend(i - 1, bits | (std::uint64_t{1} << (i - 1)), i, highest == 0 ? i : highest);
    }
  }

  [[nodiscard]] bool can_take(int i, int lowest, int highest) const {
    if (lowest != 0 && lowest - i <= h_) return false;
    if (circular_ && highest != 0 && n_ - (highest - i) <= h_) return false;
    return true;
  }

  int n_;
  int h_;
  bool circular_;
  const std::function<void(const VertexMask&)>& visit_;
};

}  // namespace

// --- VertexMask -----------------------------------------------------------------

VertexMask::VertexMask(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > kMaxMaskLength) {
    throw std::invalid_argument("VertexMask: length " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxMaskLength));
  }
  if (n < 64 && (bits >> n) != 0) {
    throw std::invalid_argument("VertexMask: bits set beyond length " + std::to_string(n));
  }
}

VertexMask VertexMask::from_string(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxMaskLength)) {
    throw std::invalid_argument("VertexMask::from_string: string too long");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("VertexMask::from_string: expected 0/1 string, got '" +
                                  std::string(text) + "'");
    }
  }
  return VertexMask(static_cast<int>(text.size()), bits);
}

VertexMask VertexMask::from_indices(int n, std::span<const int> indices) {
  std::uint64_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("VertexMask::from_indices: index " + std::to_string(i) +
                                  " outside 1.." + std::to_string(n));
    }
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (bits & bit) {
      throw std::invalid_argument("VertexMask::from_indices: repeated index " + std::to_string(i));
    }
    bits |= bit;
  }
  return VertexMask(n, bits);
}

int VertexMask::size() const { return std::popcount(bits_); }

std::vector<int> VertexMask::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string VertexMask::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

// --- predicates -------------------------------------------------------------------

bool is_independent(const GapGraph& g, const VertexMask& s) {
  if (s.length() != g.n()) {
    throw std::invalid_argument("is_independent: mask length " + std::to_string(s.length()) +
                                " does not match graph order " + std::to_string(g.n()));
  }
  const auto members = s.indices();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (g.is_edge(members[a], members[b])) return false;
    }
  }
  return true;
}

bool gap_check(const VertexMask& s, int h, Wrap wrap) {
  if (h < 0) throw std::invalid_argument("gap_check: h must be nonnegative");
  const auto members = s.indices();
  // The closest pair is always a consecutive one; the widest span decides
  // the wrap-around distance.
  for (std::size_t j = 1; j < members.size(); ++j) {
    if (members[j] - members[j - 1] <= h) return false;
  }
  if (wrap == Wrap::circular && members.size() >= 2) {
    if (s.length() - (members.back() - members.front()) <= h) return false;
  }
  return true;
}

bool avoids_substrings(const VertexMask& s, int h, Wrap wrap) {
  if (h < 1) throw std::invalid_argument("avoids_substrings: no forbidden patterns for h = 0");
  const std::string text = s.str();
  const std::size_t n = text.size();
  for (int zeros = 0; zeros < h; ++zeros) {
    const std::string pattern = "1" + std::string(static_cast<std::size_t>(zeros), '0') + "1";
    if (wrap == Wrap::linear) {
      if (text.find(pattern) != std::string::npos) return false;
      continue;
    }
    // A circular occurrence uses pattern.size() distinct positions, so
    // patterns longer than the string cannot occur.
    if (pattern.size() > n) continue;
    const std::string doubled = text + text.substr(0, pattern.size() - 1);
    if (doubled.find(pattern) != std::string::npos) return false;
  }
  return true;
}

// --- enumeration --------------------------------------------------------------------

void for_each_independent(const GapGraph& g, const std::function<void(const VertexMask&)>& visit,
                          int cap) {
  const int limit = std::min(cap, kMaxMaskLength);
  if (g.n() > limit) {
    throw CapacityError("enumeration of " + g.name() + " exceeds the cap of " +
                        std::to_string(limit) + " vertices");
  }
  Backtracker(g, visit).run();
}

std::vector<VertexMask> enumerate(const GapGraph& g, int cap) {
  std::vector<VertexMask> out;
  for_each_independent(g, [&](const VertexMask& s) { out.push_back(s); }, cap);
  return out;
}

std::map<int, Nat> count_by_size(const GapGraph& g, int cap) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.n()) + 1, 0);
  for_each_independent(g, [&](const VertexMask& s) { ++counts[static_cast<std::size_t>(s.size())]; },
                       cap);
  std::map<int, Nat> out;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) out.emplace(static_cast<int>(k), Nat{counts[k]});
  }
  return out;
}

// --- bijection ------------------------------------------------------------------------

VertexMask bijection_f(std::span<const int> subset, int n, int h) {
  if (n < 0 || h < 0) throw std::invalid_argument("bijection_f: n and h must be nonnegative");
  const long k = static_cast<long>(subset.size());
  const long ground = n - h * k + h;
  if (ground < 0) {
    throw std::invalid_argument("bijection_f: n - hk + h = " + std::to_string(ground) +
                                " is negative");
  }
  std::vector<int> image;
  image.reserve(subset.size());
  for (std::size_t j = 0; j < subset.size(); ++j) {
    const int i = subset[j];
    if (i < 1 || i > ground || (j > 0 && i <= subset[j - 1])) {
      throw std::invalid_argument(
          "bijection_f: expected a strictly increasing subset of 1.." + std::to_string(ground) +
          ", got " + describe(std::vector<int>(subset.begin(), subset.end())));
    }
    image.push_back(i + static_cast<int>(j) * h);
  }
  return VertexMask::from_indices(n, image);
}

std::vector<int> bijection_f_inv(const VertexMask& s, int h) {
  if (!gap_check(s, h, Wrap::linear)) {
    throw std::invalid_argument("bijection_f_inv: " + s.str() + " violates the gap condition for h = " +
                                std::to_string(h));
  }
  auto members = s.indices();
  for (std::size_t j = 0; j < members.size(); ++j) members[j] -= static_cast<int>(j) * h;
  return members;
}

}  // namespace gapcube

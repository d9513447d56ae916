#pragma once

// Hasse diagrams of independent sets ordered by inclusion: the Fibonacci
// cube (paths, h = 1), the Lucas cube (cycles, h = 1) and their
// generalizations for h > 1.

#include "gapcube/enumeration.hpp"
#include "gapcube/graphs.hpp"
#include "gapcube/nat.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gapcube {

/// A cover relation S < T with |T \ S| = 1, as vertex ids.
struct Cover {
  std::uint32_t lower;
  std::uint32_t upper;
  friend bool operator==(const Cover&, const Cover&) = default;
};

class CubeGraph {
 public:
  [[nodiscard]] const GapGraph& source() const { return source_; }

  /// Vertex ids run rank by rank (rank = subset size), ascending numeric
  /// order inside a rank.
  [[nodiscard]] const std::vector<VertexMask>& vertices() const { return vertices_; }
  /// Grouped by upper vertex, lower vertices in order of the removed bit.
  [[nodiscard]] const std::vector<Cover>& covers() const { return covers_; }

  [[nodiscard]] int max_rank() const { return static_cast<int>(rank_offsets_.size()) - 2; }
  /// Vertices of the given rank; empty for ranks out of range.
  [[nodiscard]] std::span<const VertexMask> rank(int r) const;

  [[nodiscard]] std::optional<std::uint32_t> find(const VertexMask& s) const;

 private:
  friend CubeGraph build_cube(const GapGraph& g, int cap);
  explicit CubeGraph(GapGraph source) : source_(source) {}

  GapGraph source_;
  std::vector<VertexMask> vertices_;
  std::vector<std::size_t> rank_offsets_;  // rank r occupies [offsets[r], offsets[r+1])
  std::vector<Cover> covers_;
  std::vector<std::uint64_t> numeric_bits_;  // all vertices, ascending
  std::vector<std::uint32_t> numeric_ids_;   // id of numeric_bits_[i]
};

/// Builds the diagram. Covers come from deleting each member of every
/// vertex; the result is again a vertex because independent sets are closed
/// under taking subsets. Throws CapacityError past `cap` vertices.
CubeGraph build_cube(const GapGraph& g, int cap = kDefaultEnumerationCap);

/// Vertex count per rank.
std::map<int, Nat> rank_profile(const CubeGraph& c);

/// Unordered vertex pairs at Hamming distance exactly 1, found by probing
/// single-bit additions rather than reading the cover list.
std::uint64_t hamming_pairs(const CubeGraph& c);

/// Vertices of rank k that contain v_i. Throws std::out_of_range for i
/// outside 1..n and std::invalid_argument for k < 0.
Nat vertex_filter_count(const CubeGraph& c, int k, int i);

/// Undirected DOT; nodes are vertex ids labelled with their bit strings.
void write_dot(std::ostream& os, const CubeGraph& c);
/// {"kind", "n", "h", "vertex_count", "cover_count", "ranks": [[mask, ...], ...],
///  "covers": [[lower, upper], ...]}; ids index the flattened ranks.
void write_json(std::ostream& os, const CubeGraph& c);
/// "lower upper" per line.
void write_edge_list(std::ostream& os, const CubeGraph& c);

}  // namespace gapcube

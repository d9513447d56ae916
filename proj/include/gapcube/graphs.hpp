#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gapcube {

enum class GraphKind { path, cycle };

std::string_view to_string(GraphKind kind);
/// Accepts "path" or "cycle"; throws std::invalid_argument otherwise.
GraphKind parse_graph_kind(std::string_view text);

/// Sorted list of unordered vertex pairs (i, j), i < j, 1-indexed.
using EdgeList = std::vector<std::pair<int, int>>;

/// The h-th power of a path or cycle on vertices v_1..v_n.
///
/// Path: v_i ~ v_j iff 0 < |j - i| <= h.
/// Cycle: additionally v_i ~ v_j when |j - i| >= n - h, i.e. the circular
/// distance min(d, n - d) is at most h.
///
/// Adjacency is evaluated from (kind, n, h) on every query; nothing is stored.
class GapGraph {
 public:
  GapGraph(GraphKind kind, int n, int h);

  [[nodiscard]] GraphKind kind() const { return kind_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int h() const { return h_; }

  /// Throws std::out_of_range unless 1 <= i, j <= n.
  [[nodiscard]] bool is_edge(int i, int j) const;

  [[nodiscard]] EdgeList edges() const;

  /// Short identifier such as "P_5^2" or "C_7^1".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const GapGraph&, const GapGraph&) = default;

 private:
  GraphKind kind_;
  int n_;
  int h_;
};

inline GapGraph build(GraphKind kind, int n, int h) { return GapGraph(kind, n, h); }

/// "i j" per line.
void write_edge_list(std::ostream& os, const GapGraph& g);
/// Undirected DOT with vertices labelled v1..vn.
void write_dot(std::ostream& os, const GapGraph& g);

}  // namespace gapcube

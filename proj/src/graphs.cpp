#include "gapcube/graphs.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace gapcube {

std::string_view to_string(GraphKind kind) { return kind == GraphKind::path ? "path" : "cycle"; }

GraphKind parse_graph_kind(std::string_view text) {
  if (text == "path") return GraphKind::path;
  if (text == "cycle") return GraphKind::cycle;
  throw std::invalid_argument("unknown graph kind '" + std::string(text) +
                              "' (expected path or cycle)");
}

GapGraph::GapGraph(GraphKind kind, int n, int h) : kind_(kind), n_(n), h_(h) {
  if (n < 0 || h < 0) {
    throw std::invalid_argument("GapGraph: n and h must be nonnegative, got n = " +
                                std::to_string(n) + ", h = " + std::to_string(h));
  }
}

bool GapGraph::is_edge(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::out_of_range("GapGraph::is_edge: (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside 1.." + std::to_string(n_));
  }
  if (i == j) return false;
  const int d = std::abs(j - i);
  if (d <= h_) return true;
  return kind_ == GraphKind::cycle && d >= n_ - h_;
}

EdgeList GapGraph::edges() const {
  EdgeList out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (is_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string GapGraph::name() const {
  return std::string(kind_ == GraphKind::path ? "P_" : "C_") + std::to_string(n_) + "^" +
         std::to_string(h_);
}

void write_edge_list(std::ostream& os, const GapGraph& g) {
  for (const auto& [i, j] : g.edges()) os << i << ' ' << j << '\n';
}

void write_dot(std::ostream& os, const GapGraph& g) {
  os << "graph \"" << g.name() << "\" {\n";
  for (int i = 1; i <= g.n(); ++i) os << "  " << i << " [label=\"v" << i << "\"];\n";
  for (const auto& [i, j] : g.edges()) os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
}

}  // namespace gapcube

#include "gapcube/cube.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gapcube {

std::span<const VertexMask> CubeGraph::rank(int r) const {
  if (r < 0 || r > max_rank()) return {};
  const auto first = vertices_.begin() + static_cast<std::ptrdiff_t>(rank_offsets_[r]);
  const auto last = vertices_.begin() + static_cast<std::ptrdiff_t>(rank_offsets_[r + 1]);
  return {first, last};
}

std::optional<std::uint32_t> CubeGraph::find(const VertexMask& s) const {
  if (s.length() != source_.n()) return std::nullopt;
  const auto it = std::lower_bound(numeric_bits_.begin(), numeric_bits_.end(), s.bits());
  if (it == numeric_bits_.end() || *it != s.bits()) return std::nullopt;
  return numeric_ids_[static_cast<std::size_t>(it - numeric_bits_.begin())];
}

CubeGraph build_cube(const GapGraph& g, int cap) {
  CubeGraph c(g);
  const int n = g.n();

  std::vector<std::size_t> per_rank(static_cast<std::size_t>(n) + 1, 0);
  for_each_independent(
      g,
      [&](const VertexMask& s) {
        c.numeric_bits_.push_back(s.bits());
        ++per_rank[static_cast<std::size_t>(s.size())];
      },
      cap);

  int top = 0;
  for (int r = 0; r <= n; ++r) {
    if (per_rank[static_cast<std::size_t>(r)] != 0) top = r;
  }
  c.rank_offsets_.assign(static_cast<std::size_t>(top) + 2, 0);
  for (int r = 0; r <= top; ++r) {
    c.rank_offsets_[r + 1] = c.rank_offsets_[r] + per_rank[static_cast<std::size_t>(r)];
  }

  // Numeric order is preserved inside each rank by this counting sort.
  c.vertices_.resize(c.numeric_bits_.size());
  c.numeric_ids_.resize(c.numeric_bits_.size());
  std::vector<std::size_t> cursor(c.rank_offsets_.begin(), c.rank_offsets_.end() - 1);
  for (std::size_t pos = 0; pos < c.numeric_bits_.size(); ++pos) {
    const VertexMask s(n, c.numeric_bits_[pos]);
    const std::size_t id = cursor[static_cast<std::size_t>(s.size())]++;
    c.vertices_[id] = s;
    c.numeric_ids_[pos] = static_cast<std::uint32_t>(id);
  }

  std::size_t cover_count = 0;
  for (const auto& v : c.vertices_) cover_count += static_cast<std::size_t>(v.size());
  c.covers_.reserve(cover_count);
  for (std::size_t id = 0; id < c.vertices_.size(); ++id) {
    const VertexMask& upper = c.vertices_[id];
    for (std::uint64_t rest = upper.bits(); rest != 0; rest &= rest - 1) {
      const std::uint64_t lowest_bit = rest & (~rest + 1);
      const auto lower = c.find(VertexMask(n, upper.bits() & ~lowest_bit));
      if (!lower) {
        throw std::logic_error("build_cube: family of " + g.name() +
                               " is not closed under removal at " + upper.str());
      }
      c.covers_.push_back(Cover{*lower, static_cast<std::uint32_t>(id)});
    }
  }
  return c;
}

std::map<int, Nat> rank_profile(const CubeGraph& c) {
  std::map<int, Nat> out;
  for (int r = 0; r <= c.max_rank(); ++r) {
    const auto count = c.rank(r).size();
    if (count != 0) out.emplace(r, Nat{count});
  }
  return out;
}

std::uint64_t hamming_pairs(const CubeGraph& c) {
  const int n = c.source().n();
  std::uint64_t pairs = 0;
  for (const auto& v : c.vertices()) {
    for (int b = 0; b < n; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      if (v.bits() & bit) continue;
      if (c.find(VertexMask(n, v.bits() | bit))) ++pairs;
    }
  }
  return pairs;
}

Nat vertex_filter_count(const CubeGraph& c, int k, int i) {
  if (i < 1 || i > c.source().n()) {
    throw std::out_of_range("vertex_filter_count: vertex index " + std::to_string(i) +
                            " outside 1.." + std::to_string(c.source().n()));
  }
  if (k < 0) throw std::invalid_argument("vertex_filter_count: rank must be nonnegative");
  std::uint64_t count = 0;
  for (const auto& s : c.rank(k)) {
    if (s.contains(i)) ++count;
  }
  return Nat{count};
}

void write_dot(std::ostream& os, const CubeGraph& c) {
  os << "graph \"" << (c.source().kind() == GraphKind::path ? "Gamma" : "Lambda") << "_"
     << c.source().n() << "^" << c.source().h() << "\" {\n";
  for (std::size_t id = 0; id < c.vertices().size(); ++id) {
    os << "  " << id << " [label=\"" << c.vertices()[id].str() << "\"];\n";
  }
  for (const auto& e : c.covers()) os << "  " << e.lower << " -- " << e.upper << ";\n";
  os << "}\n";
}

void write_json(std::ostream& os, const CubeGraph& c) {
  nlohmann::json ranks = nlohmann::json::array();
  for (int r = 0; r <= c.max_rank(); ++r) {
    nlohmann::json layer = nlohmann::json::array();
    for (const auto& s : c.rank(r)) layer.push_back(s.str());
    ranks.push_back(std::move(layer));
  }
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& e : c.covers()) covers.push_back({e.lower, e.upper});
  const nlohmann::json doc = {
      {"kind", std::string(to_string(c.source().kind()))},
      {"n", c.source().n()},
      {"h", c.source().h()},
      {"vertex_count", c.vertices().size()},
      {"cover_count", c.covers().size()},
      {"ranks", std::move(ranks)},
      {"covers", std::move(covers)},
  };
  os << doc.dump(2) << '\n';
}

void write_edge_list(std::ostream& os, const CubeGraph& c) {
  for (const auto& e : c.covers()) os << e.lower << ' ' << e.upper << '\n';
}

}  // namespace gapcube

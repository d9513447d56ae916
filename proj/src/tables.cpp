#include "gapcube/tables.hpp"

#include "gapcube/counting.hpp"

#include <json.hpp>

#include <array>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace gapcube::tables {
namespace {

constexpr std::array<std::pair<TableKind, std::string_view>, 8> kNames{{
    {TableKind::pk, "pk"},
    {TableKind::ck, "ck"},
    {TableKind::p, "p"},
    {TableKind::c, "c"},
    {TableKind::F, "F"},
    {TableKind::L, "L"},
    {TableKind::H, "H"},
    {TableKind::M, "M"},
}};

// Extents of the published tables.
struct PublishedExtent {
  TableKind kind;
  int h;  // coefficient tables only; -1 otherwise
  int number;
  int n_min;
  int n_max;
  int k_max;
};

constexpr std::array<PublishedExtent, 12> kPublished{{
    {TableKind::pk, 1, 1, 0, 15, 8},
    {TableKind::pk, 2, 2, 0, 16, 6},
    {TableKind::pk, 3, 3, 0, 17, 5},
    {TableKind::p, -1, 4, 0, 13, 0},
    {TableKind::F, -1, 5, 1, 15, 0},
    {TableKind::H, -1, 6, 0, 13, 0},
    {TableKind::ck, 1, 7, 0, 16, 8},
    {TableKind::ck, 2, 8, 0, 17, 5},
    {TableKind::ck, 3, 9, 0, 18, 4},
    {TableKind::c, -1, 10, 0, 16, 0},
    {TableKind::L, -1, 11, 1, 15, 0},
    {TableKind::M, -1, 12, 0, 15, 0},
}};

const PublishedExtent& published_extent(TableKind kind, int h) {
  const int key = is_coefficient_table(kind) ? h : -1;
  for (const auto& e : kPublished) {
    if (e.kind == kind && e.h == key) return e;
  }
  throw std::invalid_argument("no published " + std::string(name(kind)) + " table for h = " +
                              std::to_string(h) + " (coefficient tables exist for h = 1, 2, 3)");
}

int largest_nonzero_k(TableKind kind, int n_max, int h) {
  if (n_max <= 0) return 0;
  // c(n,k) for k >= 2 needs n >= k(h+1); p(n,k) needs k <= ceil(n/(h+1)).
  return kind == TableKind::ck ? std::max(1, n_max / (h + 1)) : size_bound(n_max, h);
}

Nat cell(const TableSpec& spec, int row, int n) {
  switch (spec.kind) {
    case TableKind::pk:
      return path_count_k(n, spec.h_min, row);
    case TableKind::ck:
      return cycle_count_k(n, spec.h_min, row);
    case TableKind::p:
      return path_count(n, row);
    case TableKind::c:
      return cycle_count(n, row);
    case TableKind::F:
      return h_fibonacci(row, n);
    case TableKind::L:
      return h_lucas(row, n);
    case TableKind::H:
      return path_edges(n, row);
    case TableKind::M:
      if (spec.filler_below_h && n <= row) return Nat{};
      return cycle_edges(n, row);
  }
  return Nat{};
}

}  // namespace

std::optional<TableKind> parse_table_kind(std::string_view text) {
  for (const auto& [kind, label] : kNames) {
    if (label == text) return kind;
  }
  return std::nullopt;
}

std::string_view name(TableKind kind) {
  for (const auto& [k, label] : kNames) {
    if (k == kind) return label;
  }
  return "?";
}

bool is_coefficient_table(TableKind kind) { return kind == TableKind::pk || kind == TableKind::ck; }

TableSpec default_spec(TableKind kind, int h, int n_max) {
  TableSpec spec;
  spec.kind = kind;
  spec.n_min = (kind == TableKind::F || kind == TableKind::L) ? 1 : 0;
  spec.n_max = n_max;
  if (is_coefficient_table(kind)) {
    spec.h_min = spec.h_max = h;
    spec.k_max = largest_nonzero_k(kind, spec.n_max, h);
  }
  return spec;
}

TableSpec published_spec(TableKind kind, int h) {
  const PublishedExtent& e = published_extent(kind, h);
  TableSpec spec;
  spec.kind = kind;
  spec.n_min = e.n_min;
  spec.n_max = e.n_max;
  if (is_coefficient_table(kind)) {
    spec.h_min = spec.h_max = h;
    spec.k_max = e.k_max;
  } else {
    spec.h_min = 0;
    spec.h_max = 10;
  }
  spec.filler_below_h = kind == TableKind::M;
  return spec;
}

int published_table_number(TableKind kind, int h) { return published_extent(kind, h).number; }

Table make_table(const TableSpec& spec) {
  if (spec.n_max < spec.n_min || spec.h_min < 0 || spec.h_max < spec.h_min) {
    throw std::invalid_argument("make_table: empty or negative range");
  }
  if ((spec.kind == TableKind::F || spec.kind == TableKind::L) && spec.n_min < 1) {
    throw std::invalid_argument("make_table: sequences are indexed from n = 1");
  }
  if (spec.n_min < 0 || spec.k_max < 0) throw std::invalid_argument("make_table: negative bound");

  Table t;
  t.header.emplace_back();
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    t.header.push_back(n == spec.n_min ? "n=" + std::to_string(n) : std::to_string(n));
  }
  const bool by_k = is_coefficient_table(spec.kind);
  const int first = by_k ? 0 : spec.h_min;
  const int last = by_k ? spec.k_max : spec.h_max;
  for (int r = first; r <= last; ++r) {
    std::vector<std::string> row;
    row.push_back(r == first ? std::string(by_k ? "k=" : "h=") + std::to_string(r) : std::to_string(r));
    for (int n = spec.n_min; n <= spec.n_max; ++n) row.push_back(cell(spec, r, n).str());
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_delimited(std::ostream& os, const Table& table, char sep) {
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << sep;
      os << cells[i];
    }
    os << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

void write_json(std::ostream& os, const TableSpec& spec, const Table& table) {
  const bool by_k = is_coefficient_table(spec.kind);
  nlohmann::json columns = nlohmann::json::array();
  for (int n = spec.n_min; n <= spec.n_max; ++n) columns.push_back(n);
  nlohmann::json rows = nlohmann::json::array();
  const int first = by_k ? 0 : spec.h_min;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    // Values are decimal strings so counts beyond 64 bits survive intact.
    std::vector<std::string> values(table.rows[r].begin() + 1, table.rows[r].end());
    rows.push_back({{by_k ? "k" : "h", first + static_cast<int>(r)}, {"values", values}});
  }
  nlohmann::json doc = {
      {"table", std::string(name(spec.kind))},
      {"row_index", by_k ? "k" : "h"},
      {"n", columns},
      {"rows", rows},
  };
  if (by_k) doc["h"] = spec.h_min;
  os << doc.dump(2) << '\n';
}

}  // namespace gapcube::tables

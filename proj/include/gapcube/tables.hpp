#pragma once

// Rendering of count tables: coefficient tables (rows k, columns n, fixed h)
// and sequence tables (rows h, columns n).

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gapcube::tables {

enum class TableKind { pk, ck, p, c, F, L, H, M };

std::optional<TableKind> parse_table_kind(std::string_view text);
std::string_view name(TableKind kind);

/// pk and ck have one h and rows indexed by k; the rest have rows indexed by h.
bool is_coefficient_table(TableKind kind);

struct TableSpec {
  TableKind kind = TableKind::p;
  int h_min = 0;
  int h_max = 10;
  int n_min = 0;  // 1 for the F and L sequences
  int n_max = 15;
  int k_max = 0;  // coefficient tables only
  /// Prints 0 in the M table for n <= h, where the edge formula is not claimed.
  bool filler_below_h = false;
};

/// Spec with the default extents for `kind`: h in 0..10 (or the single `h`
/// for coefficient tables), n up to `n_max`, k up to the largest possibly
/// nonzero size.
TableSpec default_spec(TableKind kind, int h = 1, int n_max = 15);

/// Exact extents of the published tables. Coefficient tables exist for
/// h = 1, 2, 3 only; other values throw std::invalid_argument.
TableSpec published_spec(TableKind kind, int h = 1);

/// Reference number (1..12) of the published table that published_spec reproduces.
int published_table_number(TableKind kind, int h = 1);

/// A rendered table: header[0] is empty, header[1] is "n=<first>", later
/// headers are bare n values; the first row label is "k=0" or "h=<first>",
/// later labels are bare.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // each row starts with its label
};

Table make_table(const TableSpec& spec);

void write_delimited(std::ostream& os, const Table& table, char sep = '\t');
void write_json(std::ostream& os, const TableSpec& spec, const Table& table);

}  // namespace gapcube::tables

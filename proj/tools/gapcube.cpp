// gapcube: tables, counts, sequences, graph and cube exports, and the identity
// verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity error.

#include "gapcube/counting.hpp"
#include "gapcube/cube.hpp"
#include "gapcube/enumeration.hpp"
#include "gapcube/fault.hpp"
#include "gapcube/graphs.hpp"
#include "gapcube/tables.hpp"
#include "gapcube/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

using namespace gapcube;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapacity = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Opens --out (or stdout) for the lifetime of a command.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot open output file '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void require_format(const std::string& format, std::initializer_list<std::string_view> allowed,
                    std::string_view command) {
  for (auto a : allowed) {
    if (format == a) return;
  }
  std::string list;
  for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError(std::string(command) + ": format '" + format + "' not supported (use " + list + ")");
}

// "3" or "0..10".
std::pair<int, int> parse_h_range(const std::string& text) {
  const auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0) {
      throw UsageError("--h: expected a nonnegative integer or range A..B, got '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int h = parse_int(text);
    return {h, h};
  }
  const int lo = parse_int(std::string_view(text).substr(0, dots));
  const int hi = parse_int(std::string_view(text).substr(dots + 2));
  if (hi < lo) throw UsageError("--h: empty range '" + text + "'");
  return {lo, hi};
}

// --- table ------------------------------------------------------------------------

struct TableArgs {
  std::string which;
  std::string h;
  std::optional<int> n_max;
  std::optional<int> k_max;
  bool published_layout = false;
  std::string format = "tsv";
  std::string out;
};

int run_table(const TableArgs& a) {
  const auto kind = tables::parse_table_kind(a.which);
  if (!kind) throw UsageError("table: unknown table kind '" + a.which + "' (use pk, ck, p, c, F, L, H, M)");
  require_format(a.format, {"tsv", "csv", "json"}, "table");
  const bool by_k = tables::is_coefficient_table(*kind);

  tables::TableSpec spec;
  if (a.published_layout) {
    if (a.n_max || a.k_max) throw UsageError("table: --paper-layout fixes the extents; drop --n-max/--k-max");
    int h = 1;
    if (!a.h.empty()) {
      const auto [lo, hi] = parse_h_range(a.h);
      if (lo != hi || !by_k) throw UsageError("table: with --paper-layout, --h selects pk/ck tables only (1, 2 or 3)");
      h = lo;
    }
    spec = tables::published_spec(*kind, h);
  } else {
    const auto [lo, hi] = a.h.empty() ? std::pair{by_k ? 1 : 0, by_k ? 1 : 10} : parse_h_range(a.h);
    if (by_k && lo != hi) throw UsageError("table: pk/ck take a single --h");
    spec = tables::default_spec(*kind, lo, a.n_max.value_or(15));
    if (!by_k) {
      spec.h_min = lo;
      spec.h_max = hi;
    }
    if (a.k_max) {
      if (!by_k) throw UsageError("table: --k-max applies to pk/ck only");
      spec.k_max = *a.k_max;
    }
  }

  const auto table = tables::make_table(spec);
  Output out(a.out);
  if (a.format == "json") {
    tables::write_json(out.stream(), spec, table);
  } else {
    tables::write_delimited(out.stream(), table, a.format == "csv" ? ',' : '\t');
  }
  return kOk;
}

// --- cube / graph ---------------------------------------------------------------------

struct StructureArgs {
  std::string kind;
  int n = 0;
  int h = 0;
  std::string format;
  int cap = kDefaultEnumerationCap;
  std::string out;
};

int run_cube(const StructureArgs& a) {
  require_format(a.format, {"dot", "json", "edgelist"}, "cube");
  const GapGraph g(parse_graph_kind(a.kind), a.n, a.h);
  const CubeGraph cube = build_cube(g, a.cap);
  Output out(a.out);
  if (a.format == "dot") {
    write_dot(out.stream(), cube);
  } else if (a.format == "json") {
    write_json(out.stream(), cube);
  } else {
    write_edge_list(out.stream(), cube);
  }
  std::cerr << "vertices: " << cube.vertices().size() << "\nedges: " << cube.covers().size() << '\n';
  return kOk;
}

int run_graph(const StructureArgs& a) {
  require_format(a.format, {"dot", "edgelist"}, "graph");
  const GapGraph g(parse_graph_kind(a.kind), a.n, a.h);
  Output out(a.out);
  if (a.format == "dot") {
    write_dot(out.stream(), g);
  } else {
    write_edge_list(out.stream(), g);
  }
  std::cerr << "vertices: " << g.n() << "\nedges: " << g.edges().size() << '\n';
  return kOk;
}

// --- count --------------------------------------------------------------------------------

struct CountArgs {
  std::string kind;
  int n = 0;
  int h = 0;
  std::optional<int> k;
  bool edges = false;
  std::string route = "sum";
  int cap = kDefaultEnumerationCap;
};

[[noreturn]] void undefined_route(const CountArgs& a, std::string_view why) {
  throw UsageError("count: route '" + a.route + "' is not defined " + std::string(why));
}

Nat count_sets(const CountArgs& a, GraphKind kind) {
  const bool path = kind == GraphKind::path;
  if (a.route == "sum" || a.route == "closed") {
    if (a.k) return path ? path_count_k(a.n, a.h, *a.k) : cycle_count_k(a.n, a.h, *a.k);
    return path ? path_count(a.n, a.h) : cycle_count(a.n, a.h);
  }
  if (a.route == "recurrence") {
    if (a.k) undefined_route(a, "for a single subset size");
    return path ? path_count_rec(a.n, a.h) : cycle_count_rec(a.n, a.h);
  }
  if (a.route == "oracle") {
    const auto histogram = count_by_size(GapGraph(kind, a.n, a.h), a.cap);
    if (a.k) {
      const auto it = histogram.find(*a.k);
      return it == histogram.end() ? Nat{} : it->second;
    }
    Nat total;
    for (const auto& [size, count] : histogram) total += count;
    return total;
  }
  undefined_route(a, "for independent-set counts");
}

Nat count_edges(const CountArgs& a, GraphKind kind) {
  if (a.k) throw UsageError("count: --edges does not take a subset size k");
  const bool path = kind == GraphKind::path;
  if (a.route == "sum") return path ? path_edges(a.n, a.h) : cycle_edges(a.n, a.h);
  if (a.route == "closed") {
    if (path) return path_edges(a.n, a.h);
    if (a.n <= a.h) undefined_route(a, "for cycle edges with n <= h");
    return cycle_edges_closed(a.n, a.h);
  }
  if (a.route == "conv") {
    if (path) return path_edges_conv(a.n, a.h);
    if (a.n <= a.h) undefined_route(a, "for cycle edges with n <= h");
    return cycle_edges_conv(a.n, a.h);
  }
  if (a.route == "oracle") {
    return Nat{build_cube(GapGraph(kind, a.n, a.h), a.cap).covers().size()};
  }
  undefined_route(a, "for edge counts");
}

int run_count(const CountArgs& a) {
  const GraphKind kind = parse_graph_kind(a.kind);
  if (a.n < 0 || a.h < 0) throw UsageError("count: n and h must be nonnegative");
  std::cout << (a.edges ? count_edges(a, kind) : count_sets(a, kind)) << '\n';
  return kOk;
}

// --- seq ------------------------------------------------------------------------------------

struct SeqArgs {
  std::string which;
  int h = 1;
  int n_max = 20;
  std::string format = "tsv";
  std::string out;
};

int run_seq(const SeqArgs& a) {
  require_format(a.format, {"tsv", "csv", "json"}, "seq");
  HSequence::Kind kind{};
  if (a.which == "F") {
    kind = HSequence::Kind::fibonacci;
  } else if (a.which == "L") {
    kind = HSequence::Kind::lucas;
  } else if (a.which == "Fext") {
    kind = HSequence::Kind::extended_fibonacci;
  } else if (a.which == "Lext") {
    kind = HSequence::Kind::extended_lucas;
  } else {
    throw UsageError("seq: unknown sequence '" + a.which + "' (use F, L, Fext, Lext)");
  }
  const auto seq = shared_sequence(kind, a.h);
  Output out(a.out);
  if (a.format == "json") {
    nlohmann::json terms = nlohmann::json::array();
    for (long n = seq->first_index(); n <= a.n_max; ++n) terms.push_back({{"n", n}, {"value", seq->term(n).str()}});
    out.stream() << nlohmann::json{{"sequence", a.which}, {"h", a.h}, {"terms", terms}}.dump(2) << '\n';
    return kOk;
  }
  const char sep = a.format == "csv" ? ',' : '\t';
  out.stream() << "n" << sep << "value\n";
  for (long n = seq->first_index(); n <= a.n_max; ++n) out.stream() << n << sep << seq->term(n) << '\n';
  return kOk;
}

// --- verify -----------------------------------------------------------------------------------

struct VerifyArgs {
  verify::SweepBounds bounds;
  std::string format = "tsv";
  std::string out;
  std::string fault;
};

int run_verify(const VerifyArgs& a) {
  require_format(a.format, {"tsv", "csv", "json"}, "verify");
  std::optional<fault::Scoped> injected;
  if (!a.fault.empty()) {
    const auto f = fault::parse(a.fault);
    if (!f) throw UsageError("verify: unknown fault '" + a.fault + "'");
    injected.emplace(*f);
  }
  const auto reports = verify::run_suite(a.bounds);
  Output out(a.out);
  if (a.format == "json") {
    verify::write_json(out.stream(), reports);
  } else {
    verify::write_summary(out.stream(), reports, a.format == "csv" ? ',' : '\t');
  }
  return verify::all_pass(reports) ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independent sets of path and cycle powers, generalized Fibonacci and Lucas cubes"};
  app.set_help_flag("--help", "Print this help message and exit");  // -h is taken by the power h
  app.require_subcommand(1);
  std::function<int()> action;

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print a count table");
  table_cmd->add_option("which", table.which, "pk, ck, p, c, F, L, H or M")->required();
  table_cmd->add_option("--h", table.h, "h (pk/ck) or h range A..B (other tables)");
  table_cmd->add_option("--n-max", table.n_max, "Largest n");
  table_cmd->add_option("--k-max", table.k_max, "Largest subset size (pk/ck)");
  table_cmd->add_flag("--paper-layout", table.published_layout, "Reproduce the published table extents");
  table_cmd->add_option("--format", table.format, "tsv, csv or json");
  table_cmd->add_option("--out", table.out, "Output file (default stdout)");
  table_cmd->callback([&] { action = [&] { return run_table(table); }; });

  StructureArgs cube;
  cube.format = "dot";
  auto* cube_cmd = app.add_subcommand("cube", "Export the Hasse diagram of independent sets");
  cube_cmd->add_option("kind", cube.kind, "path or cycle")->required();
  cube_cmd->add_option("n", cube.n, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  cube_cmd->add_option("h", cube.h, "Power")->required()->check(CLI::NonNegativeNumber);
  cube_cmd->add_option("--format", cube.format, "dot, json or edgelist");
  cube_cmd->add_option("--cap", cube.cap, "Largest n to enumerate");
  cube_cmd->add_option("--out", cube.out, "Output file (default stdout)");
  cube_cmd->callback([&] { action = [&] { return run_cube(cube); }; });

  StructureArgs graph;
  graph.format = "edgelist";
  auto* graph_cmd = app.add_subcommand("graph", "Export a path or cycle power");
  graph_cmd->add_option("kind", graph.kind, "path or cycle")->required();
  graph_cmd->add_option("n", graph.n, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  graph_cmd->add_option("h", graph.h, "Power")->required()->check(CLI::NonNegativeNumber);
  graph_cmd->add_option("--format", graph.format, "dot or edgelist");
  graph_cmd->add_option("--out", graph.out, "Output file (default stdout)");
  graph_cmd->callback([&] { action = [&] { return run_graph(graph); }; });

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Print one count");
  count_cmd->add_option("kind", count.kind, "path or cycle")->required();
  count_cmd->add_option("n", count.n, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("h", count.h, "Power")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("k", count.k, "Subset size (independent-set counts only)");
  count_cmd->add_flag("--edges", count.edges, "Count Hasse diagram edges instead of independent sets");
  count_cmd->add_option("--route", count.route, "sum, closed, recurrence, conv or oracle");
  count_cmd->add_option("--cap", count.cap, "Largest n to enumerate (oracle route)");
  count_cmd->callback([&] { action = [&] { return run_count(count); }; });

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print an h-Fibonacci or h-Lucas sequence");
  seq_cmd->add_option("which", seq.which, "F, L, Fext or Lext")->required();
  seq_cmd->add_option("--h", seq.h, "h")->check(CLI::NonNegativeNumber);
  seq_cmd->add_option("--n-max", seq.n_max, "Last index");
  seq_cmd->add_option("--format", seq.format, "tsv, csv or json");
  seq_cmd->add_option("--out", seq.out, "Output file (default stdout)");
  seq_cmd->callback([&] { action = [&] { return run_seq(seq); }; });

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check every identity over a parameter sweep");
  verify_cmd->add_option("--n-max", ver.bounds.n_max, "Largest n for algebraic identities")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--h-max", ver.bounds.h_max, "Largest h")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--oracle-n-max", ver.bounds.oracle_n_max, "Largest n for enumeration-backed identities")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--format", ver.format, "tsv, csv or json");
  verify_cmd->add_option("--out", ver.out, "Output file (default stdout)");
  verify_cmd->add_option("--inject-fault", ver.fault, "fibonacci-seed, lucas-seed or binomial-negative-top")
      ->group("");  // testing aid, hidden from --help
  verify_cmd->callback([&] { action = [&] { return run_verify(ver); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const CapacityError& e) {
    std::cerr << "gapcube: " << e.what() << '\n';
    return kCapacity;
  } catch (const ConventionError& e) {
    std::cerr << "gapcube: internal convention violated: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gapcube: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "gapcube: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "gapcube: " << e.what() << '\n';
    return kVerifyFailed;
  }
}

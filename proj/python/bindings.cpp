#include "gapcube/counting.hpp"
#include "gapcube/cube.hpp"
#include "gapcube/enumeration.hpp"
#include "gapcube/fault.hpp"
#include "gapcube/graphs.hpp"
#include "gapcube/tables.hpp"
#include "gapcube/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

namespace py = pybind11;
using namespace gapcube;

namespace {

// Counts cross the boundary as Python ints via their decimal text.
py::int_ to_py(const Int& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}
py::int_ to_py(const Nat& v) { return to_py(v.value()); }

template <class... Args>
auto nat_fn(Nat (*f)(Args...)) {
  return [f](Args... args) { return to_py(f(args...)); };
}

GraphKind kind_of(const std::string& text) { return parse_graph_kind(text); }

Wrap wrap_of(bool circular) { return circular ? Wrap::circular : Wrap::linear; }

VertexMask mask_of(const std::string& bits) { return VertexMask::from_string(bits); }

template <class T>
std::string render(void (*writer)(std::ostream&, const T&), const T& value) {
  std::ostringstream os;
  writer(os, value);
  return os.str();
}

py::dict histogram(const std::map<int, Nat>& m) {
  py::dict out;
  for (const auto& [k, v] : m) out[py::int_(k)] = to_py(v);
  return out;
}

py::dict report_dict(const verify::IdentityReport& r) {
  py::list failures;
  for (const auto& w : r.failures) {
    py::dict d;
    d["n"] = w.n ? py::object(py::int_(*w.n)) : py::object(py::none());
    d["h"] = w.h ? py::object(py::int_(*w.h)) : py::object(py::none());
    d["k"] = w.k ? py::object(py::int_(*w.k)) : py::object(py::none());
    d["i"] = w.i ? py::object(py::int_(*w.i)) : py::object(py::none());
    d["expected"] = w.expected;
    d["actual"] = w.actual;
    failures.append(d);
  }
  py::dict d;
  d["id"] = r.id;
  d["description"] = r.description;
  d["status"] = r.status() == verify::Status::pass ? "pass" : "fail";
  d["cases"] = r.cases;
  d["failure_count"] = r.failure_count;
  d["failures"] = failures;
  return d;
}

std::string render_table(const std::string& which, std::optional<int> h_min, std::optional<int> h_max,
                         std::optional<int> n_max, std::optional<int> k_max, bool published,
                         const std::string& format) {
  const auto kind = tables::parse_table_kind(which);
  if (!kind) throw std::invalid_argument("unknown table kind '" + which + "'");
  const bool by_k = tables::is_coefficient_table(*kind);
  tables::TableSpec spec;
  if (published) {
    if (n_max || k_max || h_max) throw std::invalid_argument("published layouts fix their extents");
    if (h_min && !by_k) throw std::invalid_argument("published layouts take h only for pk and ck");
    spec = tables::published_spec(*kind, h_min.value_or(1));
  } else {
    const int lo = h_min.value_or(by_k ? 1 : 0);
    spec = tables::default_spec(*kind, lo, n_max.value_or(15));
    if (!by_k) {
      spec.h_min = lo;
      spec.h_max = h_max.value_or(h_min ? lo : 10);
      if (spec.h_max < spec.h_min) throw std::invalid_argument("h_max is below h");
    } else if (h_max) {
      throw std::invalid_argument("pk and ck tables take a single h");
    }
    if (k_max) spec.k_max = *k_max;
  }
  const auto table = tables::make_table(spec);
  std::ostringstream os;
  if (format == "json") {
    tables::write_json(os, spec, table);
  } else if (format == "tsv" || format == "csv") {
    tables::write_delimited(os, table, format == "csv" ? ',' : '\t');
  } else {
    throw std::invalid_argument("unknown table format '" + format + "'");
  }
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counts, enumeration and Hasse diagrams for independent sets of path and cycle powers";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<ConventionError>(m, "ConventionError", PyExc_ArithmeticError);

  // Counting.
  m.def("binom", [](long m_, long k) { return to_py(binom(m_, k)); }, py::arg("m"), py::arg("k"));
  m.def("size_bound", &size_bound, py::arg("n"), py::arg("h"));
  m.def("path_count_k", nat_fn(&path_count_k), py::arg("n"), py::arg("h"), py::arg("k"));
  m.def("path_count", nat_fn(&path_count), py::arg("n"), py::arg("h"));
  m.def("path_count_rec", nat_fn(&path_count_rec), py::arg("n"), py::arg("h"));
  m.def("cycle_count_k", nat_fn(&cycle_count_k), py::arg("n"), py::arg("h"), py::arg("k"));
  m.def("cycle_count", nat_fn(&cycle_count), py::arg("n"), py::arg("h"));
  m.def("cycle_count_rec", nat_fn(&cycle_count_rec), py::arg("n"), py::arg("h"));
  m.def("h_fibonacci", [](int h, long n) { return to_py(h_fibonacci(h, n)); }, py::arg("h"), py::arg("n"));
  m.def("h_lucas", [](int h, long n) { return to_py(h_lucas(h, n)); }, py::arg("h"), py::arg("n"));
  m.def("extended_fib", [](int h, long n) { return to_py(extended_fib(h, n)); }, py::arg("h"), py::arg("n"));
  m.def("extended_lucas", [](int h, long n) { return to_py(extended_lucas(h, n)); }, py::arg("h"), py::arg("n"));
  m.def("path_edges", nat_fn(&path_edges), py::arg("n"), py::arg("h"));
  m.def("path_edges_conv", nat_fn(&path_edges_conv), py::arg("n"), py::arg("h"));
  m.def("cycle_edges", nat_fn(&cycle_edges), py::arg("n"), py::arg("h"));
  m.def("cycle_edges_closed", nat_fn(&cycle_edges_closed), py::arg("n"), py::arg("h"));
  m.def("cycle_edges_conv", nat_fn(&cycle_edges_conv), py::arg("n"), py::arg("h"));
  m.def("t_count", nat_fn(&t_count), py::arg("n"), py::arg("h"), py::arg("k"), py::arg("i"));

  // Graphs.
  py::class_<GapGraph>(m, "GapGraph")
      .def(py::init([](const std::string& kind, int n, int h) { return GapGraph(kind_of(kind), n, h); }),
           py::arg("kind"), py::arg("n"), py::arg("h"))
      .def_property_readonly("kind", [](const GapGraph& g) { return std::string(to_string(g.kind())); })
      .def_property_readonly("n", &GapGraph::n)
      .def_property_readonly("h", &GapGraph::h)
      .def_property_readonly("name", &GapGraph::name)
      .def("is_edge", &GapGraph::is_edge, py::arg("i"), py::arg("j"))
      .def("edges", &GapGraph::edges)
      .def("to_dot", [](const GapGraph& g) { return render<GapGraph>(&write_dot, g); })
      .def("__repr__", [](const GapGraph& g) { return "<GapGraph " + g.name() + ">"; });

  // Enumeration. Masks are bit strings b_1 ... b_n.
  m.def(
      "enumerate",
      [](const std::string& kind, int n, int h, int cap) {
        std::vector<std::string> out;
        for_each_independent(GapGraph(kind_of(kind), n, h), [&](const VertexMask& s) { out.push_back(s.str()); }, cap);
        return out;
      },
      py::arg("kind"), py::arg("n"), py::arg("h"), py::arg("cap") = kDefaultEnumerationCap);
  m.def(
      "count_by_size",
      [](const std::string& kind, int n, int h, int cap) { return histogram(count_by_size(GapGraph(kind_of(kind), n, h), cap)); },
      py::arg("kind"), py::arg("n"), py::arg("h"), py::arg("cap") = kDefaultEnumerationCap);
  m.def(
      "is_independent", [](const GapGraph& g, const std::string& s) { return is_independent(g, mask_of(s)); },
      py::arg("graph"), py::arg("mask"));
  m.def(
      "gap_check", [](const std::string& s, int h, bool circular) { return gap_check(mask_of(s), h, wrap_of(circular)); },
      py::arg("mask"), py::arg("h"), py::arg("circular") = false);
  m.def(
      "avoids_substrings",
      [](const std::string& s, int h, bool circular) { return avoids_substrings(mask_of(s), h, wrap_of(circular)); },
      py::arg("mask"), py::arg("h"), py::arg("circular") = false);
  m.def(
      "bijection_f", [](const std::vector<int>& subset, int n, int h) { return bijection_f(subset, n, h).str(); },
      py::arg("subset"), py::arg("n"), py::arg("h"));
  m.def(
      "bijection_f_inv", [](const std::string& s, int h) { return bijection_f_inv(mask_of(s), h); }, py::arg("mask"),
      py::arg("h"));

  // Hasse diagrams.
  py::class_<CubeGraph>(m, "CubeGraph")
      .def_property_readonly("source", &CubeGraph::source)
      .def_property_readonly("vertices",
                             [](const CubeGraph& c) {
                               std::vector<std::string> out;
                               out.reserve(c.vertices().size());
                               for (const auto& v : c.vertices()) out.push_back(v.str());
                               return out;
                             })
      .def_property_readonly("covers",
                             [](const CubeGraph& c) {
                               std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
                               out.reserve(c.covers().size());
                               for (const auto& e : c.covers()) out.emplace_back(e.lower, e.upper);
                               return out;
                             })
      .def_property_readonly("max_rank", &CubeGraph::max_rank)
      .def(
          "find", [](const CubeGraph& c, const std::string& s) { return c.find(mask_of(s)); }, py::arg("mask"))
      .def("rank_profile", [](const CubeGraph& c) { return histogram(rank_profile(c)); })
      .def("hamming_pairs", &hamming_pairs)
      .def(
          "vertex_filter_count", [](const CubeGraph& c, int k, int i) { return to_py(vertex_filter_count(c, k, i)); },
          py::arg("k"), py::arg("i"))
      .def("to_dot", [](const CubeGraph& c) { return render<CubeGraph>(&write_dot, c); })
      .def("to_json", [](const CubeGraph& c) { return render<CubeGraph>(&write_json, c); })
      .def("to_edge_list", [](const CubeGraph& c) { return render<CubeGraph>(&write_edge_list, c); });
  m.def(
      "build_cube", [](const std::string& kind, int n, int h, int cap) { return build_cube(GapGraph(kind_of(kind), n, h), cap); },
      py::arg("kind"), py::arg("n"), py::arg("h"), py::arg("cap") = kDefaultEnumerationCap);

  // Tables.
  m.def("table", &render_table, py::arg("which"), py::arg("h") = py::none(), py::arg("h_max") = py::none(),
        py::arg("n_max") = py::none(), py::arg("k_max") = py::none(), py::arg("published") = false,
        py::arg("format") = "tsv",
        "Render a count table. `h` is the single h of pk/ck tables or the first row of the others.");

  // Verification.
  m.def("identity_ids", [] {
    std::vector<std::string> out;
    for (auto id : verify::identity_ids()) out.emplace_back(id);
    return out;
  });
  m.def(
      "run_suite",
      [](int n_max, int h_max, int oracle_n_max) {
        std::vector<verify::IdentityReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify::run_suite(verify::SweepBounds{n_max, h_max, oracle_n_max});
        }
        py::list out;
        for (const auto& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("n_max") = 40, py::arg("h_max") = 10, py::arg("oracle_n_max") = 16);

  m.def(
      "inject_fault",
      [](const std::string& name) {
        const auto f = fault::parse(name);
        if (!f) throw std::invalid_argument("unknown fault '" + name + "'");
        fault::inject(*f);
      },
      py::arg("name"), "Testing aid: perturb one base case process-wide; pass 'none' to restore.");
  m.def("active_fault", [] { return std::string(fault::name(fault::active())); });
}

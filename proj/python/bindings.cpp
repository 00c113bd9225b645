#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "laygraph/cli.hpp"
#include "laygraph/hilbert.hpp"
#include "laygraph/json_io.hpp"
#include "laygraph/oracle.hpp"

namespace py = pybind11;
using namespace laygraph;

namespace {

py::int_ to_py(const Int& x) {
    const std::string digits = x.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list to_py(const std::vector<Int>& xs) {
    py::list out;
    for (const Int& x : xs) out.append(to_py(x));
    return out;
}

py::list to_py(const IntPoly& p) { return to_py(p.coeffs()); }

Method method_from(const std::string& name) {
    if (auto m = parse_method(name)) return *m;
    throw py::value_error("unknown method: " + name);
}

py::tuple rational(const RationalFn& f) { return py::make_tuple(to_py(f.numerator()), to_py(f.denominator())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hilbert series of algebras attached to layered graphs.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", error.ptr());

    py::class_<LayeredGraph>(m, "Graph")
        .def_static("from_json", [](const std::string& text) { return parse_graph(text); }, py::arg("text"))
        .def("to_json", &serialize_graph)
        .def_property_readonly("name", [](const LayeredGraph& g) { return g.name(); })
        .def_property_readonly("vertex_count", &LayeredGraph::vertex_count)
        .def_property_readonly("edge_count", &LayeredGraph::edge_count)
        .def_property_readonly("top_level", &LayeredGraph::top_level)
        .def_property_readonly("vertices",
                               [](const LayeredGraph& g) {
                                   py::list out;
                                   for (const Vertex& v : g.vertices()) out.append(py::make_tuple(v.id, v.level));
                                   return out;
                               })
        .def_property_readonly("edges",
                               [](const LayeredGraph& g) {
                                   py::list out;
                                   for (auto [tail, head] : g.edges()) out.append(py::make_tuple(g.id(tail), g.id(head)));
                                   return out;
                               })
        .def("level_sizes", &LayeredGraph::level_sizes)
        .def("reachable", py::overload_cast<std::string_view, std::string_view>(&LayeredGraph::reachable, py::const_),
             py::arg("v"), py::arg("w"))
        .def("__eq__", [](const LayeredGraph& a, const LayeredGraph& b) { return a == b; })
        .def("__repr__", [](const LayeredGraph& g) {
            std::ostringstream out;
            out << "<Graph " << g.name().value_or("unnamed") << ": " << g.vertex_count() << " vertices, "
                << g.edge_count() << " edges>";
            return out.str();
        });

    m.def("gen_boolean", &gen_boolean, py::arg("n"));
    m.def("gen_subspace", &gen_subspace, py::arg("n"), py::arg("q"));
    m.def("gen_complete", [](const std::vector<std::size_t>& spec) { return gen_complete(spec); }, py::arg("spec"));

    m.def(
        "hilbert_series",
        [](const LayeredGraph& g, std::size_t degree, const std::string& method, std::uint64_t chain_cap) {
            return to_py(hilbert_series(g, degree, method_from(method), chain_cap).series.coeffs());
        },
        py::arg("graph"), py::arg("degree") = kDefaultTruncation, py::arg("method") = "mobius",
        py::arg("chain_cap") = kDefaultChainCap);
    m.def(
        "denominator",
        [](const LayeredGraph& g, const std::string& method, std::uint64_t chain_cap) {
            return to_py(method_from(method) == Method::mobius ? denominator_mobius(g) : denominator_chains(g, chain_cap));
        },
        py::arg("graph"), py::arg("method") = "mobius", py::arg("chain_cap") = kDefaultChainCap);
    m.def(
        "vertex_series",
        [](const LayeredGraph& g, std::size_t degree) {
            const auto series = vertex_series(g, degree);
            py::dict out;
            for (VertexIndex v = 0; v < g.vertex_count(); ++v) out[py::str(g.id(v))] = to_py(series[v].coeffs());
            return out;
        },
        py::arg("graph"), py::arg("degree") = kDefaultTruncation);
    m.def(
        "dual_series",
        [](const LayeredGraph& g, std::size_t degree) {
            const DualResult d = dual_series(g, degree);
            py::object poly = py::none();
            if (d.polynomial) poly = to_py(*d.polynomial);
            return py::make_tuple(to_py(d.series.coeffs()), poly);
        },
        py::arg("graph"), py::arg("degree") = kDefaultTruncation);
    m.def(
        "word_counts", [](const LayeredGraph& g, std::size_t degree) { return to_py(count_words(g, degree).counts); },
        py::arg("graph"), py::arg("degree") = kDefaultTruncation);
    m.def(
        "mobius",
        [](const LayeredGraph& g, const std::string& v, const std::string& w) {
            return to_py(MobiusTable(g)(g.index_of(v), g.index_of(w)));
        },
        py::arg("graph"), py::arg("v"), py::arg("w"));

    m.def("q_binomial", [](std::int64_t n, std::int64_t k, std::int64_t q) { return to_py(q_binomial(n, k, q)); },
          py::arg("n"), py::arg("k"), py::arg("q"));
    m.def("closed_qn", [](std::size_t n) { return rational(closed_qn(n)); }, py::arg("n"));
    m.def("closed_lnq", [](std::size_t n, std::int64_t q) { return rational(closed_lnq(n, q)); }, py::arg("n"),
          py::arg("q"));
    m.def("closed_complete", [](const std::vector<std::size_t>& spec) { return rational(closed_complete(spec)); },
          py::arg("spec"));
    m.def("closed_dual_lnq", [](std::size_t n, std::int64_t q) { return to_py(closed_dual_lnq(n, q)); }, py::arg("n"),
          py::arg("q"));
    m.def("closed_dual_complete",
          [](const std::vector<std::size_t>& spec) { return to_py(closed_dual_complete(spec)); }, py::arg("spec"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}

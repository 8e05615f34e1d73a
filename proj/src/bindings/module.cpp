#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specred/report.hpp"

namespace py = pybind11;
using namespace specred;

namespace {

py::object big_int(const Int& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object fraction(const Rat& q) {
    py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(big_int(q.get_num()), big_int(q.get_den()));
}

// Reports are built as ordered JSON on the C++ side; hand them to Python as
// plain dicts/lists.
py::object json_to_py(const Json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

py::list poly_coefficients(const IntPoly& p) {
    py::list out;
    for (const Int& c : p.coeffs()) out.append(big_int(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact complementarity spectra and spectral redundancy of graphs";
    m.attr("__version__") = version();

    py::register_exception<guard_error>(m, "GuardError");
    py::register_exception<parse_error>(m, "ParseError");

    m.def(
        "cubic",
        [](int alpha, int beta) { return poly_coefficients(pineapple_cubic(PineappleParams(alpha, beta))); },
        py::arg("alpha"), py::arg("beta"),
        "Coefficients (low to high) of the cubic factor of P(alpha, beta)");

    m.def(
        "b_count",
        [](int alpha, int beta) { return pineapple_b_count(PineappleParams(alpha, beta)); },
        py::arg("alpha"), py::arg("beta"),
        "Number of non-isomorphic connected induced subgraphs of P(alpha, beta)");

    m.def(
        "c_count",
        [](int alpha, int beta) { return pineapple_c_count(PineappleParams(alpha, beta)); },
        py::arg("alpha"), py::arg("beta"), "Number of distinct subgraph spectral radii of P(alpha, beta)");

    m.def(
        "redundancy",
        [](int alpha, int beta) { return fraction(pineapple_redundancy(PineappleParams(alpha, beta))); },
        py::arg("alpha"), py::arg("beta"), "b/c as an exact Fraction");

    m.def(
        "spectral_radius",
        [](int alpha, int beta, int digits) {
            return json_to_py(to_json(pineapple_radius(PineappleParams(alpha, beta)), digits));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("digits") = 6,
        "Exact spectral radius of P(alpha, beta): defining polynomial, isolating interval, decimal");

    m.def(
        "pineapple_report",
        [](int alpha, int beta, int digits) {
            return json_to_py(pineapple_report_json(PineappleParams(alpha, beta), digits));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("digits") = 6);

    m.def(
        "spectrum",
        [](const std::string& graph6, int digits, int max_n) {
            Graph g = Graph::parse_graph6(graph6);
            SpectrumOptions options;
            options.max_n = max_n;
            return json_to_py(spectrum_report_json(g, complementarity_spectrum(g, options), digits));
        },
        py::arg("graph6"), py::arg("digits") = 6, py::arg("max_n") = 10,
        "Brute-force complementarity spectrum of a graph6 graph");

    m.def(
        "two_common",
        [](long max_k, int digits) {
            py::list out;
            for (const auto& pair : enumerate_two_common(max_k))
                out.append(json_to_py(coincidence_pair_json(pair, digits)));
            return out;
        },
        py::arg("max_k"), py::arg("digits") = 6,
        "Catalog of pineapple pairs sharing their two largest eigenvalues");

    m.def(
        "one_common",
        [](long max_rho, int digits) {
            py::list out;
            for (const auto& pair : search_one_common(max_rho))
                out.append(json_to_py(coincidence_pair_json(pair, digits)));
            return out;
        },
        py::arg("max_rho"), py::arg("digits") = 6,
        "Catalog of pineapple pairs sharing exactly one eigenvalue");

    m.def(
        "integer_radius_pair",
        [](long rho, int digits) { return json_to_py(coincidence_pair_json(integer_radius_family(rho), digits)); },
        py::arg("rho"), py::arg("digits") = 6,
        "The pair (P(rho+1, 0), P(rho, rho(rho+1)/2)) with spectral radius exactly rho");

    m.def(
        "build_pineapple",
        [](int alpha, int beta) { return build_pineapple(PineappleParams(alpha, beta)).to_graph6(); },
        py::arg("alpha"), py::arg("beta"), "graph6 encoding of P(alpha, beta)");

    m.def(
        "graph_info",
        [](const std::string& graph6) {
            Graph g = Graph::parse_graph6(graph6);
            py::dict out;
            out["n"] = g.vertex_count();
            out["edges"] = g.edge_count();
            out["connected"] = g.is_connected();
            out["graph6"] = g.to_graph6();
            return out;
        },
        py::arg("graph6"), "Round-tripped graph6 with basic counts");
}

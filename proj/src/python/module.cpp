#include "neron/compgroup.hpp"
#include "neron/criteria.hpp"
#include "neron/errors.hpp"
#include "neron/graph_json.hpp"
#include "neron/oracle.hpp"
#include "neron/purity.hpp"
#include "neron/report_json.hpp"
#include "neron/resolution.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace neron;

namespace {

// Reports cross the boundary as JSON text; the Python wrapper decodes them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Combinatorial Neron-model criteria for labelled dual graphs";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidGraph>(m, "InvalidGraph", base.ptr());
    py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());
    py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", base.ptr());
    py::register_exception<NotDisciplined>(m, "NotDisciplined", base.ptr());
    py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

    py::class_<LabelledGraph>(m, "Graph")
        .def_static("from_json", [](const std::string& text) { return load_graph(text); }, py::arg("text"),
                    "Parse and validate a graph description.")
        .def("to_json", [](const LabelledGraph& g) { return print_graph(g); })
        .def_property_readonly("num_params", [](const LabelledGraph& g) { return g.num_params; })
        .def_property_readonly("num_vertices", [](const LabelledGraph& g) { return g.vertices.size(); })
        .def_property_readonly("num_edges", [](const LabelledGraph& g) { return g.edges.size(); })
        .def("__eq__", [](const LabelledGraph& a, const LabelledGraph& b) { return a == b; })
        .def("__repr__", [](const LabelledGraph& g) {
            return "<Graph n=" + std::to_string(g.num_params) + " |V|=" + std::to_string(g.vertices.size()) +
                   " |E|=" + std::to_string(g.edges.size()) + ">";
        });

    m.def("betti_one", &betti_one, py::arg("graph"));
    m.def("arithmetic_genus", &arithmetic_genus, py::arg("graph"));
    m.def(
        "contract",
        [](const LabelledGraph& g, const std::vector<std::size_t>& params) { return contract(g, params).graph; },
        py::arg("graph"), py::arg("params"));
    m.def(
        "purity_report_json", [](const LabelledGraph& g) { return dump(to_json(purity_report(g))); },
        py::arg("graph"));
    m.def(
        "check_json",
        [](const LabelledGraph& g, const std::string& criterion) {
            nlohmann::json out = nlohmann::json::object();
            if (criterion == "all") {
                for (const auto& v : check_all(g))
                    out[to_string(v.criterion)] = to_json(v);
                return dump(out);
            }
            auto c = parse_criterion(criterion);
            if (!c)
                throw InvalidParameter("unknown criterion '" + criterion + "'");
            const auto v = check(g, *c);
            out[to_string(v.criterion)] = to_json(v);
            return dump(out);
        },
        py::arg("graph"), py::arg("criterion") = "all");
    m.def(
        "resolve_json", [](const LabelledGraph& g) { return dump(to_json(resolve(g))); }, py::arg("graph"));
    m.def(
        "resolve", [](const LabelledGraph& g) { return resolve(g).graph; }, py::arg("graph"));
    m.def(
        "component_group_json",
        [](const LabelledGraph& g, std::size_t param) { return dump(to_json(component_group(g, param))); },
        py::arg("graph"), py::arg("param"));
    m.def(
        "random_graph",
        [](std::size_t vertices, std::size_t edges, std::size_t params, std::uint32_t max_exponent,
           std::uint64_t seed, const std::string& cls) {
            auto c = oracle::parse_class_constraint(cls);
            if (!c)
                throw InvalidParameter("unknown class constraint '" + cls + "'");
            return oracle::random_labelled_graph({vertices, edges, params, max_exponent, seed, *c});
        },
        py::arg("vertices"), py::arg("edges"), py::arg("params"), py::arg("max_exponent"), py::arg("seed"),
        py::arg("class_constraint") = "any");
}

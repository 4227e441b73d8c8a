#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "symroot/cartan.hpp"
#include "symroot/error.hpp"
#include "symroot/extend.hpp"
#include "symroot/graph.hpp"
#include "symroot/grp2.hpp"
#include "symroot/srs.hpp"
#include "symroot/symplectic.hpp"
#include "symroot/verify.hpp"

namespace py = pybind11;
using namespace symroot;

namespace {

std::vector<std::string> strings(const std::vector<BitVec>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(v.to_string());
    return out;
}

std::pair<std::size_t, std::size_t> as_pair(SpaceType t) { return {t.n, t.k}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Symplectic root systems over F2";

    auto error = py::register_exception<Error>(m, "SymrootError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
                 return Graph::from_edges(n, edges);
             }),
             py::arg("nodes"), py::arg("edges") = std::vector<std::pair<std::size_t, std::size_t>>{})
        .def_property_readonly("nodes", &Graph::node_count)
        .def_property_readonly("edges", &Graph::edges)
        .def("has_edge", &Graph::has_edge)
        .def("connected", &Graph::connected)
        .def("to_json", [](const Graph& g) { return graph_to_json(g).dump(); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph(" + graph_to_json(g).dump() + ")"; });

    m.def("parse_graph", [](const std::string& text) { return parse_graph_any(text); });
    m.def("dynkin_graph", &dynkin_graph, py::arg("family"), py::arg("rank"));
    m.def("complete_graph", &Graph::complete);
    m.def("path_graph", &Graph::path);

    py::class_<Srs>(m, "Srs")
        .def_property_readonly("graph", &Srs::graph)
        .def_property_readonly("dim", &Srs::dim)
        .def_property_readonly("type", [](const Srs& s) { return as_pair(s.type()); })
        .def_property_readonly("deco", [](const Srs& s) { return strings(s.deco()); })
        .def_property_readonly("gram", [](const Srs& s) { return s.space().gram().to_strings(); })
        .def_property_readonly("minimal", [](const Srs& s) { return is_minimal(s); })
        .def("to_json", [](const Srs& s) { return srs_to_json(s).dump(); })
        .def("__eq__", [](const Srs& a, const Srs& b) { return a == b; })
        .def("__repr__", [](const Srs& s) {
            return "Srs(type=(" + std::to_string(s.type().n) + "," + std::to_string(s.type().k) +
                   "), nodes=" + std::to_string(s.node_count()) + ")";
        });

    m.def("srs_from_json", [](const std::string& text) { return srs_from_json(nlohmann::json::parse(text)); });
    m.def("minimal_srs", &minimal_srs);
    m.def("space_type", [](const std::vector<std::string>& gram) {
        return as_pair(SympSpace(BitMat::from_strings(gram)).type());
    });
    m.def("restrict", &restrict_srs, py::arg("srs"), py::arg("nodes"));
    m.def("enumerate_quotients", [](const Graph& g) {
        std::vector<std::pair<std::vector<std::string>, Srs>> out;
        for (auto& c : enumerate_quotients(g)) out.emplace_back(strings(c.kernel), std::move(c.srs));
        return out;
    });
    m.def("isomorphic", [](const Srs& a, const Srs& b) { return srs_isomorphic(a, b).has_value(); });
    m.def("extend_minimal", [](const Srs& s, const std::string& indicator) {
        auto ext = extend_minimal(s, BitVec::from_string(indicator));
        return std::make_pair(std::move(ext.srs), witness_to_json(ext.witness).dump());
    });
    m.def("build_by_extension", &build_by_extension, py::arg("graph"), py::arg("order"));
    m.def("coclique_bound", [](const Graph& g) {
        const auto c = coclique_bound_check(g);
        py::dict d;
        d["n"] = c.n;
        d["gamma"] = c.gamma;
        d["bound"] = c.bound;
        d["holds"] = c.holds;
        d["coclique"] = c.coclique;
        return d;
    });

    m.def("ade_srs", &ade_srs, py::arg("family"), py::arg("rank"));
    m.def("ade_table", [](char family, std::size_t rank) {
        std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> out;
        for (const auto& [t, count] : ade_table(family, rank)) out.emplace_back(as_pair(t), count);
        return out;
    });
    m.def("symbolic", [](const Srs& s) {
        std::vector<std::string> out;
        for (const auto& f : s.deco()) out.push_back(symbolic(f, s.type()));
        return out;
    });
    m.def("weyl_group_order", [](char family, std::size_t rank, bool schreier_sims) {
        const WeylRep rep = weyl_rep(cartan_datum(family, rank));
        return schreier_sims ? group_order_schreier_sims(rep) : group_order(rep);
    }, py::arg("family"), py::arg("rank"), py::arg("schreier_sims") = false);
    m.def("root_count", [](char family, std::size_t rank) { return roots(cartan_datum(family, rank)).roots.size(); });

    m.def("group_summary", [](const Srs& s) {
        const CocycleGroup grp = make_group(s.space());
        const auto lifts = lift_decoration(s, grp);
        const auto b = burnside_check(grp, lifts);
        py::dict d;
        d["order"] = grp.order();
        d["sign"] = std::string(to_string(extraspecial_sign(grp)));
        d["generates"] = b.generates;
        d["minimal"] = b.minimal;
        d["basis_size"] = b.basis_size;
        return d;
    });

    m.def("verify", [](const std::string& suite, bool quick, std::uint64_t seed) {
        VerifyOptions o;
        o.quick = quick;
        o.seed = seed;
        return report_to_json(run_suite(suite, o)).dump();
    }, py::arg("suite") = "all", py::arg("quick") = true, py::arg("seed") = 20240611);
}

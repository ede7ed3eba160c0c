#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdyn/classify.hpp"
#include "pdyn/cli.hpp"
#include "pdyn/endo2.hpp"
#include "pdyn/families.hpp"
#include "pdyn/parse.hpp"

namespace py = pybind11;
using namespace pdyn;

namespace {

PlaneEndo endo_from(const std::string& text, int order) {
    Session s;
    s.cyclotomic_order = order;
    return parse_plane_map(text, s);
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["tag"] = to_string(v.tag);
    d["describe"] = v.describe();
    d["field_order"] = v.field;
    if (v.conjugation) d["conjugation"] = to_string(*v.conjugation, v.field);
    return d;
}

py::dict summary_dict(const SearchSummary& s) {
    py::dict d;
    d["top_pairs"] = s.top_pairs;
    d["commuting_tops"] = s.commuting_tops;
    d["nodes"] = s.nodes;
    d["commuting"] = s.commuting;
    d["not_disjoint"] = s.not_disjoint;
    d["Ex1"] = s.recognized[0];
    d["Ex2"] = s.recognized[1];
    d["Ex3"] = s.recognized[2];
    d["Ex4"] = s.recognized[3];
    d["unknown"] = s.unknown.size();
    d["certified_outside"] = s.unknown_outside;
    d["complete"] = s.complete;
    d["text"] = s.to_string();
    return d;
}

}  // namespace

PYBIND11_MODULE(_pdyn, m) {
    m.doc() = "exact commuting endomorphisms of the plane";

    py::register_exception<Error>(m, "PdynError");

    py::class_<PlaneEndo>(m, "PlaneEndo")
        .def(py::init(&endo_from), py::arg("text"), py::arg("order") = 1)
        .def_readonly("degree", &PlaneEndo::degree)
        .def("__str__", [](const PlaneEndo& f) { return to_string(f); })
        .def("__repr__", [](const PlaneEndo& f) { return "PlaneEndo('" + to_string(f) + "')"; })
        .def("__eq__", [](const PlaneEndo& a, const PlaneEndo& b) { return a == b; })
        .def("compose", &compose, "self after other")
        .def("commutes", &commutes)
        .def("iterate", [](const PlaneEndo& f, unsigned n, long cap) { return iterate(f, n, cap); }, py::arg("n"),
             py::arg("degree_cap") = kDefaultDegreeCap)
        .def("extends_to_p2", &extends_to_p2)
        .def("jacobian", [](const PlaneEndo& f) { return jacobian_det(f).to_string(); })
        .def("infinity", [](const PlaneEndo& f) { return to_string(restrict_infinity(f)); })
        .def("critical_divisor", [](const PlaneEndo& f, int order) {
            std::vector<std::pair<std::string, int>> out;
            for (const auto& [c, k] : critical_divisor(f, order).parts) out.push_back({c.to_string(order), k});
            return out;
        }, py::arg("order") = 1);

    m.def("chebyshev", [](int d, bool monic) { return chebyshev(d, monic ? ChebyshevKind::Monic : ChebyshevKind::Classical).to_string(); },
          py::arg("d"), py::arg("monic") = true);
    m.def("ex4_descend", [](const std::string& h) { return ex4_descend(parse_poly(h)); }, py::arg("h"));
    m.def("disjoint_iterates", &disjoint_iterates, py::arg("f1"), py::arg("f2"), py::arg("degree_cap") = kDisjointCap);
    m.def("smooth_critical_conic", &smooth_critical_conic);
    m.def("recognize", [](const PlaneEndo& f1, const PlaneEndo& f2, int order) { return verdict_dict(recognize(f1, f2, order)); },
          py::arg("f1"), py::arg("f2"), py::arg("order") = 1);
    m.def("search", [](int d1, int d2, std::vector<long> coefficients, long budget) {
              SearchOptions o;
              o.d1 = d1;
              o.d2 = d2;
              o.coefficients = std::move(coefficients);
              o.node_budget = budget;
              return summary_dict(search(o));
          },
          py::arg("d1"), py::arg("d2"), py::arg("coefficients"), py::arg("node_budget") = 0);
    m.def("run", [](const std::string& command, const std::map<std::string, std::string>& args, int cyclotomic, long degree_cap,
                    int iterate_cap) {
              RunResult r = run(command, args, make_session(cyclotomic, degree_cap, iterate_cap));
              return py::make_tuple(r.report.to_json(), r.exit_code);
          },
          py::arg("command"), py::arg("args"), py::arg("cyclotomic") = 1, py::arg("degree_cap") = kDisjointCap,
          py::arg("iterate_cap") = 6);
}

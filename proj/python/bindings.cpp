#include "sandlab/core_asm.hpp"
#include "sandlab/cycle_lemma.hpp"
#include "sandlab/error.hpp"
#include "sandlab/io.hpp"
#include "sandlab/polyomino.hpp"
#include "sandlab/qt_poly.hpp"
#include "sandlab/schroder.hpp"
#include "sandlab/svg.hpp"
#include "sandlab/toppling.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sandlab;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

QtPolynomial polynomial_by_method(int n, int d, const std::string& method) {
    if (method == "cti") return f_cti(n, d);
    if (method == "itc") return f_itc(n, d);
    if (method == "schroder") return qt_schroder(n, d);
    if (method == "egge") return egge_sum(n, d);
    if (method == "itc-sum") return itc_sum(n, d);
    throw PreconditionError("unknown method '" + method + "'");
}

py::dict polynomial_dict(const QtPolynomial& p) {
    py::dict out;
    for (const auto& [e, c] : p.terms()) out[py::make_tuple(e.first, e.second)] = to_py(c);
    return out;
}

}  // namespace

PYBIND11_MODULE(_sandlab, m) {
    m.doc() = "Sorted recurrent sandpile configurations on complete split graphs";

    auto base = py::register_exception<Error>(m, "SandlabError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<Shape>(m, "Shape")
        .def(py::init<int, int>(), py::arg("n"), py::arg("d"))
        .def_readonly("n", &Shape::n)
        .def_readonly("d", &Shape::d)
        .def("__eq__", [](const Shape& a, const Shape& b) { return a == b; })
        .def("__repr__", [](const Shape& s) { return "Shape(" + std::to_string(s.n) + ", " + std::to_string(s.d) + ")"; });

    py::class_<Configuration>(m, "Configuration")
        .def(py::init([](std::vector<Grain> k, std::vector<Grain> i) { return Configuration{std::move(k), std::move(i)}; }),
             py::arg("clique"), py::arg("independent") = std::vector<Grain>{})
        .def_static("parse", [](const std::string& text) { return parse_configuration(text); })
        .def_readonly("clique", &Configuration::clique)
        .def_readonly("independent", &Configuration::independent)
        .def("__eq__", [](const Configuration& a, const Configuration& b) { return a == b; })
        .def("__hash__", [](const Configuration& c) { return py::hash(py::str(to_text(c))); })
        .def("__str__", [](const Configuration& c) { return to_text(c); })
        .def("__repr__", [](const Configuration& c) { return "Configuration.parse('" + to_text(c) + "')"; });

    m.def("sorted_recurrent", &enumerate_sorted_recurrent, py::arg("shape"));
    m.def("sorted_recurrent_count", [](int n, int d) { return to_py(sorted_recurrent_count(n, d)); });
    m.def("is_recurrent", &is_recurrent, py::arg("shape"), py::arg("config"));
    m.def("stabilize", [](const Shape& s, const Configuration& c) { return stabilize(s, c).final; });
    m.def("height", &height);
    m.def("level", &level);

    m.def("topple_cti", [](const Shape& s, const Configuration& c) { return topple_cti(s, c).sizes(); });
    m.def("topple_itc", [](const Shape& s, const Configuration& c) { return topple_itc(s, c).sizes(); });
    m.def("wtopple", py::overload_cast<const std::vector<int>&>(&wtopple));
    m.def("itc_sequences", [](int n, int d) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto& q : enumerate_itc_sequences(n, d)) out.emplace_back(q.b, q.a);
        return out;
    });
    m.def("count_itc", [](int n, int d) { return to_py(count_itc(n, d)); });

    m.def("is_schroder", [](const std::string& w) { return is_schroder(w); });
    m.def("phi", [](const std::string& w) { return phi(SchroderWord(w)); });
    m.def("phi_inv", [](const Shape& s, const Configuration& c) { return phi_inv(s, c).str(); });
    m.def("mirror", [](const std::string& w) { return mirror(std::string_view(w)); });
    m.def("area", [](const std::string& w) { return area(SchroderWord(w)); });
    m.def("bounce", [](const std::string& w) { return schroder_bounce(SchroderWord(w)); });
    m.def("schroder_words", [](int n, int d) {
        std::vector<std::string> out;
        for (const auto& w : enumerate_schroder_words(n, d)) out.push_back(w.str());
        return out;
    });

    m.def("polynomial", [](int n, int d, const std::string& method) { return polynomial_dict(polynomial_by_method(n, d, method)); },
          py::arg("n"), py::arg("d"), py::arg("method") = "schroder",
          "Terms {(q_exp, t_exp): coeff} for method cti, itc, schroder, egge or itc-sum.");
    m.def("polynomial_latex", [](int n, int d, const std::string& method) { return to_latex(polynomial_by_method(n, d, method)); },
          py::arg("n"), py::arg("d"), py::arg("method") = "schroder");

    m.def("polyomino", [](const Shape& s, const Configuration& c) {
        auto p = from_config(s, c);
        py::dict out;
        out["upper"] = p.upper;
        out["lower"] = p.lower;
        out["area"] = area(p);
        out["cti_bounce"] = cti_bounce(p).sizes;
        out["itc_bounce"] = itc_bounce(p).normalized();
        return out;
    });
    m.def("render_polyomino_svg", [](const Shape& s, const Configuration& c, bool cti, bool itc) {
        PolyominoStyle style;
        style.cti_overlay = cti;
        style.itc_overlay = itc;
        return render_svg(from_config(s, c), style);
    }, py::arg("shape"), py::arg("config"), py::arg("cti") = false, py::arg("itc") = false);

    m.def("class_members", [](const Shape& s, const Configuration& c) {
        std::vector<std::string> out;
        for (const auto& u : class_members(s, c)) out.push_back(to_text(u));
        return out;
    });
}

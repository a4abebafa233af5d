#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sbo/errors.hpp"
#include "sbo/render.hpp"
#include "sbo/verify.hpp"

namespace py = pybind11;
using namespace sbo;

namespace {

py::dict classify_py(const std::string& lambda, const std::string& nu, long m) {
    Classification cls = classify(GQ::from_string(lambda), GQ::from_string(nu), m);
    py::dict out;
    out["dimension"] = cls.dimension;
    out["case"] = cls.dimension == 1 ? py::object(py::str(case_str(cls.case_tag))) : py::none();
    out["subcase"] = cls.dimension == 1 ? py::object(py::str(subcase_str(cls.subcase))) : py::none();
    return out;
}

py::dict triple_py(const GeneratorTriple& t) {
    auto poly = [](const ParityPoly& g) {
        py::list terms;
        for (const auto& [e, c] : g.body().terms()) terms.append(py::make_tuple(e, c.str()));
        py::dict d;
        d["bound"] = g.bound();
        d["terms"] = terms;
        return d;
    };
    py::dict out;
    out["m"] = t.m;
    out["a"] = t.a;
    out["g_lo"] = poly(t.g_lo);
    out["g_mid"] = poly(t.g_mid);
    out["g_hi"] = poly(t.g_hi);
    return out;
}

py::dict solve_py(const std::string& lambda, long a, long m) {
    GQ lam = GQ::from_string(lambda);
    XiBasis xi = brute_force_xi(lam, a, m);
    py::dict out;
    out["dimension"] = xi.basis.size();
    py::list basis;
    for (const auto& t : xi.basis) basis.append(triple_py(t));
    out["basis"] = basis;
    if (xi.basis.size() == 1) {
        GeneratorTriple closed = closed_form_solution(lam, a, m);
        out["closed_form"] = triple_py(closed);
        auto prop = proportionality(xi.basis[0], closed);
        out["proportionality"] = prop ? py::object(py::str(prop->str())) : py::none();
    } else {
        out["closed_form"] = py::none();
        out["proportionality"] = py::none();
    }
    return out;
}

std::string emit_py(const std::string& lambda, const std::string& nu, long m,
                    const std::string& format) {
    DiffOp op = emit_operator(GQ::from_string(lambda), GQ::from_string(nu), m);
    if (format == "latex") return to_latex(op);
    if (format == "text") return to_text(op);
    return to_json(op).dump();
}

py::dict compare_kkp_py(const std::string& lambda, const std::string& nu, long max_degree) {
    KkpComparison cmp = compare_kkp(GQ::from_string(lambda), GQ::from_string(nu), max_degree);
    py::dict out;
    out["ok"] = cmp.ok;
    out["K"] = cmp.K.str();
    out["witness"] = cmp.ok ? py::object(py::none()) : py::object(py::str(cmp.witness));
    return out;
}

bool verify_point_py(const std::string& lambda, long a, long m) {
    return verify::verify_point(GQ::from_string(lambda), a, m).ok();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact engine for the intertwining differential operators";
    mod.def("classify", &classify_py, py::arg("lambda_"), py::arg("nu"), py::arg("m"));
    mod.def("solve", &solve_py, py::arg("lambda_"), py::arg("a"), py::arg("m"));
    mod.def("emit", &emit_py, py::arg("lambda_"), py::arg("nu"), py::arg("m"),
            py::arg("format") = "json");
    mod.def("compare_kkp", &compare_kkp_py, py::arg("lambda_"), py::arg("nu"),
            py::arg("max_degree") = 6);
    mod.def("verify_point", &verify_point_py, py::arg("lambda_"), py::arg("a"), py::arg("m"));

    py::register_exception<ZeroMError>(mod, "ZeroMError");
    py::register_exception<NotAdmissibleError>(mod, "NotAdmissibleError");
    py::register_exception<ParseError>(mod, "ParseError");
}

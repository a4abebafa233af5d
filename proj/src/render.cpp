#include "sbo/render.hpp"

#include <sstream>

namespace sbo {

using nlohmann::json;

namespace {

json poly_terms_json(const ParityPoly& g) {
    json terms = json::array();
    for (const auto& [e, c] : g.body().terms()) terms.push_back({e, c.str()});
    return json{{"bound", g.bound()}, {"terms", terms}};
}

json component_json(const TriPoly& symbol) {
    json arr = json::array();
    for (const auto& [e, c] : symbol.terms())
        arr.push_back({{"dz", e[0]}, {"dzbar", e[1]}, {"dx3", e[2]}, {"coeff", c.str()}});
    return arr;
}

std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.str();
    Rational num = r < Rational(0) ? -r : r;
    std::string num_str = num.raw().get_num().get_str();
    std::string den_str = num.raw().get_den().get_str();
    std::string out = "\\frac{" + num_str + "}{" + den_str + "}";
    return r < Rational(0) ? "-" + out : out;
}

}  // namespace

json to_json(const GeneratorTriple& t) {
    return json{{"m", t.m},
                {"a", t.a},
                {"g_lo", poly_terms_json(t.g_lo)},
                {"g_mid", poly_terms_json(t.g_mid)},
                {"g_hi", poly_terms_json(t.g_hi)}};
}

json to_json(const DiffOp& D) {
    return json{{"components",
                 {{"u1", component_json(D.comp[0])},
                  {"u2", component_json(D.comp[1])},
                  {"u3", component_json(D.comp[2])}}}};
}

std::string to_latex(const GQ& c) {
    if (c.is_real()) return latex_rational(c.re());
    std::string im;
    if (c.im() == Rational(1))
        im = "i";
    else if (c.im() == Rational(-1))
        im = "-i";
    else
        im = latex_rational(c.im()) + "i";
    if (c.re().is_zero()) return im;
    std::string out = latex_rational(c.re());
    if (!im.empty() && im[0] != '-') out += "+";
    return out + im;
}

namespace {

std::string latex_monomial(const TriPoly::Exp& e) {
    long order = e[0] + e[1] + e[2];
    if (order == 0) return "";
    std::ostringstream os;
    os << "\\frac{\\partial^{" << order << "}}{";
    if (e[0] > 0) {
        os << "\\partial z";
        if (e[0] > 1) os << "^{" << e[0] << "}";
    }
    if (e[1] > 0) {
        os << "\\partial \\bar{z}";
        if (e[1] > 1) os << "^{" << e[1] << "}";
    }
    if (e[2] > 0) {
        os << "\\partial x_3";
        if (e[2] > 1) os << "^{" << e[2] << "}";
    }
    os << "}";
    return os.str();
}

std::string latex_component(const TriPoly& symbol) {
    if (symbol.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : symbol.terms()) {
        std::string cs = to_latex(c);
        if (!first) os << " + ";
        first = false;
        bool need_parens = cs.find('+') != std::string::npos ||
                           (cs.rfind('-') != std::string::npos && cs.rfind('-') > 0);
        std::string mono = latex_monomial(e);
        if (mono.empty()) {
            os << (need_parens ? "\\left(" + cs + "\\right)" : cs);
        } else {
            if (cs == "1")
                os << mono;
            else if (cs == "-1")
                os << "-" << mono;
            else
                os << (need_parens ? "\\left(" + cs + "\\right)" : cs) << " " << mono;
        }
    }
    return os.str();
}

}  // namespace

std::string to_latex(const DiffOp& D) {
    std::ostringstream os;
    os << "\\mathrm{Rest}_{x_3=0} \\circ \\Big[";
    bool first = true;
    for (int s = 1; s <= 3; ++s) {
        if (D.comp[s - 1].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << latex_component(D.comp[s - 1]) << "\\right) \\otimes u_" << s << "^{\\vee}";
    }
    if (first) os << "0";
    os << "\\Big]";
    return os.str();
}

std::string to_text(const DiffOp& D) {
    std::ostringstream os;
    static const std::array<std::string, 3> vars = {"dz", "dzbar", "dx3"};
    bool first = true;
    for (int s = 1; s <= 3; ++s) {
        if (D.comp[s - 1].is_zero()) continue;
        if (!first) os << "\n";
        first = false;
        os << "u" << s << "^: " << D.comp[s - 1].str(vars);
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace sbo

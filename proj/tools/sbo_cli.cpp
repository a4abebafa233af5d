#include <CLI11.hpp>
#include <json.hpp>

#include <future>
#include <iostream>
#include <vector>

#include "sbo/errors.hpp"
#include "sbo/render.hpp"
#include "sbo/verify.hpp"

using nlohmann::json;
using namespace sbo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitOutOfScope = 3;
constexpr int kExitMismatch = 4;

struct Range {
    long lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    return {std::stol(s.substr(0, colon)), std::stol(s.substr(colon + 1))};
}

GeneratorTriple negate_mid(const GeneratorTriple& t, long new_m) {
    return {new_m, t.a, t.g_lo, ParityPoly(t.g_mid.bound(), -t.g_mid.body()), t.g_hi};
}

int cmd_classify(const std::string& lambda_s, const std::string& nu_s, long m,
                 const std::string& format) {
    GQ lambda = GQ::from_string(lambda_s);
    GQ nu = GQ::from_string(nu_s);
    Classification cls = classify(lambda, nu, m);
    if (format == "json") {
        json out{{"lambda", lambda.str()},
                 {"nu", nu.str()},
                 {"m", m},
                 {"dimension", cls.dimension},
                 {"case", cls.dimension == 1 ? json(case_str(cls.case_tag)) : json(nullptr)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "dimension " << cls.dimension;
        if (cls.dimension == 1)
            std::cout << " (case " << case_str(cls.case_tag) << ", subcase "
                      << subcase_str(cls.subcase) << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_solve(const std::string& lambda_s, const std::string& nu_s, long a_flag, bool has_a, long m,
              const std::string& format) {
    GQ lambda = GQ::from_string(lambda_s);
    long a;
    GQ nu;
    if (has_a) {
        a = a_flag;
        nu = lambda + GQ(Rational(a));
    } else {
        nu = GQ::from_string(nu_s);
        GQ diff = nu - lambda;
        if (!diff.is_integer()) {
            // nu - lambda not an integer: the solution space is trivially zero
            json out{{"lambda", lambda.str()}, {"nu", nu.str()},       {"m", m},
                     {"dimension", 0},         {"basis", json::array()}, {"closed_form", nullptr},
                     {"proportionality", nullptr}};
            std::cout << out.dump() << "\n";
            return kExitOk;
        }
        a = diff.re().to_long();
    }
    if (a < 0) {
        json out{{"lambda", lambda.str()}, {"nu", nu.str()},         {"a", a},
                 {"m", m},                 {"dimension", 0},          {"basis", json::array()},
                 {"closed_form", nullptr}, {"proportionality", nullptr}};
        std::cout << out.dump() << "\n";
        return kExitOk;
    }

    long p = std::labs(m);
    Classification cls = classify(lambda, nu, m);
    XiBasis xi = brute_force_xi(lambda, a, p);

    json basis = json::array();
    json closed_json = nullptr;
    json prop_json = nullptr;
    bool mismatch = static_cast<int>(xi.basis.size()) != cls.dimension;

    if (cls.dimension == 1 && !xi.basis.empty()) {
        GeneratorTriple closed = closed_form_solution(lambda, a, p);
        auto prop = proportionality(xi.basis[0], closed);
        if (!prop || prop->is_zero()) mismatch = true;
        if (m < 0) closed = negate_mid(closed, m);
        closed_json = to_json(closed);
        if (prop) prop_json = prop->str();
    }
    for (const auto& t : xi.basis) basis.push_back(to_json(m < 0 ? negate_mid(t, m) : t));

    if (format == "text") {
        std::cout << "dimension " << xi.basis.size() << "\n";
        for (const auto& b : basis) std::cout << "basis: " << b.dump() << "\n";
        if (!closed_json.is_null()) std::cout << "closed form: " << closed_json.dump() << "\n";
        if (!prop_json.is_null()) std::cout << "proportionality: " << prop_json.dump() << "\n";
    } else {
        json out{{"lambda", lambda.str()},
                 {"nu", nu.str()},
                 {"a", a},
                 {"m", m},
                 {"dimension", xi.basis.size()},
                 {"case", cls.dimension == 1 ? json(case_str(cls.case_tag)) : json(nullptr)},
                 {"subcase", cls.dimension == 1 ? json(subcase_str(cls.subcase)) : json(nullptr)},
                 {"basis", basis},
                 {"closed_form", closed_json},
                 {"proportionality", prop_json}};
        std::cout << out.dump() << "\n";
    }
    if (mismatch) {
        std::cerr << "solve: brute-force and closed-form results disagree\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_emit(const std::string& lambda_s, const std::string& nu_s, long m,
             const std::string& format) {
    GQ lambda = GQ::from_string(lambda_s);
    GQ nu = GQ::from_string(nu_s);
    DiffOp op = emit_operator(lambda, nu, m);
    if (format == "latex")
        std::cout << to_latex(op) << "\n";
    else if (format == "text")
        std::cout << to_text(op) << "\n";
    else
        std::cout << to_json(op).dump() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& grid_lambda, const Range& grid_a, const Range& grid_m, long jobs,
               bool fuzz) {
    std::vector<GQ> lambdas;
    if (grid_lambda.empty()) {
        lambdas = verify::default_lambda_samples();
    } else {
        Range r = parse_range(grid_lambda);
        for (long v = r.lo; v <= r.hi; ++v) lambdas.push_back(GQ(v));
    }
    struct Task {
        GQ lambda;
        long a, m;
    };
    std::vector<Task> tasks;
    for (long m = grid_m.lo; m <= grid_m.hi; ++m)
        for (long a = grid_a.lo; a <= grid_a.hi; ++a)
            for (const GQ& lambda : lambdas) tasks.push_back({lambda, a, m});

    std::vector<verify::PointResult> results(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i)
            results[i] = verify::verify_point(tasks[i].lambda, tasks[i].a, tasks[i].m, fuzz);
    } else {
        size_t next = 0;
        while (next < tasks.size()) {
            size_t batch = std::min<size_t>(jobs, tasks.size() - next);
            std::vector<std::future<verify::PointResult>> futs;
            for (size_t j = 0; j < batch; ++j) {
                const Task& t = tasks[next + j];
                futs.push_back(std::async(std::launch::async, [t, fuzz] {
                    return verify::verify_point(t.lambda, t.a, t.m, fuzz);
                }));
            }
            for (size_t j = 0; j < batch; ++j) results[next + j] = futs[j].get();
            next += batch;
        }
    }

    size_t failures = 0;
    for (const auto& r : results) {
        bool ok = r.ok();
        if (!ok) ++failures;
        std::cout << "lambda=" << r.lambda.str() << " a=" << r.a << " m=" << r.m
                  << " dim=" << r.dim_brute << (r.ok_dim ? "" : " DIM-MISMATCH")
                  << (r.ok_prop ? "" : " PROP-MISMATCH") << (r.ok_ms ? "" : " MS-NONZERO")
                  << (r.ok_dual ? "" : " DUALITY-MISMATCH") << (ok ? " ok" : " FAIL") << "\n";
    }
    std::cout << "checked " << results.size() << " points, " << failures << " failures\n";
    return failures == 0 ? kExitOk : kExitMismatch;
}

int cmd_suite(long max_ell, long max_op_ell) {
    bool all_ok = true;
    for (const auto& c : verify::appendix_suite(max_ell)) {
        std::cout << (c.ok ? "PASS " : "FAIL ") << c.name
                  << (c.ok ? "" : " at " + c.detail) << "\n";
        all_ok = all_ok && c.ok;
    }
    for (const auto& c : verify::operator_identity_suite(max_op_ell)) {
        std::cout << (c.ok ? "PASS " : "FAIL ") << c.name
                  << (c.ok ? "" : " at " + c.detail) << "\n";
        all_ok = all_ok && c.ok;
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int cmd_compare_kkp(const std::string& lambda_s, const std::string& nu_s, long max_degree,
                    const std::string& k_override) {
    GQ lambda = GQ::from_string(lambda_s);
    GQ nu = GQ::from_string(nu_s);
    std::optional<GQ> k;
    if (!k_override.empty()) k = GQ::from_string(k_override);
    KkpComparison cmp = compare_kkp(lambda, nu, max_degree, k);
    json out{{"lambda", lambda.str()},
             {"nu", nu.str()},
             {"max_degree", max_degree},
             {"K", cmp.K.str()},
             {"ok", cmp.ok},
             {"witness", cmp.ok ? json(nullptr) : json(cmp.witness)}};
    std::cout << out.dump() << "\n";
    return cmp.ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification of the intertwining differential operators"};
    app.require_subcommand(1);

    std::string lambda_s, nu_s, format = "json", grid_lambda, k_override;
    long m = 1, a_flag = 0, max_degree = 6, max_ell = 12, max_op_ell = 8, jobs = 1;
    std::string grid_a_s = "0:8", grid_m_s = "1:5";
    bool fuzz = false;

    auto* c_classify = app.add_subcommand("classify", "dimension of the operator space");
    c_classify->add_option("--lambda", lambda_s)->required();
    c_classify->add_option("--nu", nu_s)->required();
    c_classify->add_option("--m", m)->required();
    c_classify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* c_solve = app.add_subcommand("solve", "brute-force and closed-form solution triples");
    c_solve->add_option("--lambda", lambda_s)->required();
    auto* nu_opt = c_solve->add_option("--nu", nu_s);
    auto* a_opt = c_solve->add_option("--a", a_flag);
    c_solve->add_option("--m", m)->required();
    c_solve->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* c_emit = app.add_subcommand("emit", "closed-form operator in json, latex or text");
    c_emit->add_option("--lambda", lambda_s)->required();
    c_emit->add_option("--nu", nu_s)->required();
    c_emit->add_option("--m", m)->required();
    c_emit->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));

    auto* c_verify = app.add_subcommand("verify", "grid cross-check of all routes");
    c_verify->add_option("--grid-lambda", grid_lambda, "integer range lo:hi (default: built-in set)");
    c_verify->add_option("--grid-a", grid_a_s);
    c_verify->add_option("--grid-m", grid_m_s);
    c_verify->add_option("--jobs", jobs);
    c_verify->add_flag("--fuzz", fuzz)->group("");

    auto* c_suite = app.add_subcommand("suite", "polynomial and operator identity batteries");
    c_suite->add_option("--max-ell", max_ell);
    c_suite->add_option("--max-op-ell", max_op_ell);

    auto* c_kkp = app.add_subcommand("compare-kkp", "compare with the 1-form operator");
    c_kkp->add_option("--lambda", lambda_s)->required();
    c_kkp->add_option("--nu", nu_s)->required();
    c_kkp->add_option("--max-degree", max_degree);
    c_kkp->add_option("--k-override", k_override)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(lambda_s, nu_s, m, format);
        if (c_solve->parsed()) {
            if (a_opt->count() == 0 && nu_opt->count() == 0) {
                std::cerr << "solve: provide --a or --nu\n";
                return kExitParse;
            }
            return cmd_solve(lambda_s, nu_s, a_flag, a_opt->count() > 0, m, format);
        }
        if (c_emit->parsed()) return cmd_emit(lambda_s, nu_s, m, format);
        if (c_verify->parsed())
            return cmd_verify(grid_lambda, parse_range(grid_a_s), parse_range(grid_m_s), jobs, fuzz);
        if (c_suite->parsed()) return cmd_suite(max_ell, max_op_ell);
        if (c_kkp->parsed()) return cmd_compare_kkp(lambda_s, nu_s, max_degree, k_override);
    } catch (const ZeroMError& e) {
        std::cerr << "error: " << e.what() << " (m = 0 is out of scope)\n";
        return kExitOutOfScope;
    } catch (const NotAdmissibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOutOfScope;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}

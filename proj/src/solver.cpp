#include "sbo/solver.hpp"

#include <cstdlib>

#include "sbo/errors.hpp"
#include "sbo/gegenbauer.hpp"

namespace sbo {

std::string case_str(CaseTag t) {
    switch (t) {
        case CaseTag::Case1: return "1";
        case CaseTag::Case2: return "2";
        default: return "";
    }
}

std::string subcase_str(SubCase s) {
    switch (s) {
        case SubCase::S1I: return "1.I";
        case SubCase::S1II: return "1.II";
        case SubCase::S2I: return "2.I";
        case SubCase::S2II: return "2.II";
        case SubCase::S3I: return "3.I";
        case SubCase::S3II: return "3.II";
        default: return "";
    }
}

namespace {

SubCase subcase_of(long a, long abs_m) {
    if (a == abs_m - 1) return abs_m == 1 ? SubCase::S1I : SubCase::S1II;
    if (a == abs_m) return abs_m == 1 ? SubCase::S2I : SubCase::S2II;
    return abs_m == 1 ? SubCase::S3I : SubCase::S3II;
}

}  // namespace

Classification classify(const GQ& lambda, const GQ& nu, long m) {
    if (m == 0) throw ZeroMError("classify: m = 0 is not supported");
    long p = std::labs(m);
    GQ diff = nu - lambda;
    bool a_natural = diff.is_integer() && diff.re().sign() >= 0;

    Classification out;
    if (p == 1) {
        if (a_natural) {
            out.dimension = 1;
            out.case_tag = CaseTag::Case1;
            out.subcase = subcase_of(diff.re().to_long(), 1);
        }
        return out;
    }
    bool lambda_ok = lambda.is_integer() && lambda.re() <= Rational(1 - p);
    bool nu_ok = nu.is_integer() &&
                 (nu.re() == Rational(0) || nu.re() == Rational(1) || nu.re() == Rational(2));
    if (lambda_ok && nu_ok) {
        out.dimension = 1;
        out.case_tag = CaseTag::Case2;
        out.subcase = subcase_of(diff.re().to_long(), p);
    }
    return out;
}

ConstantsABC constants_abc(const GQ& lambda, const GQ& nu, long m) {
    if (m == 0) throw ZeroMError("constants_abc: m = 0 is not supported");
    long p = std::labs(m);
    if (!nu.is_integer()) throw NotNaturalError("constants_abc: nu = " + nu.str() + " not an integer");
    long nu_l = nu.re().to_long();
    if (nu_l < 0 || nu_l > 2)
        throw NotAdmissibleError("constants_abc: nu = " + nu.str() + " outside {0,1,2}");
    GQ a_gq = nu - lambda;
    if (!a_gq.is_integer() || a_gq.re() < Rational(p))
        throw NotAdmissibleError("constants_abc: nu - lambda must be an integer >= |m|");
    long a = a_gq.re().to_long();

    // base = lambda + floor((-lambda - |m|)/2)
    GQ base = lambda + GQ(rational_floor(((-lambda - GQ(Rational(p))) * GQ(Rational(1, 2))).re()));
    ConstantsABC out;
    switch (nu_l) {
        case 0: out.A = base; break;
        case 1: out.A = GQ(-1); break;
        default:
            if (base.is_zero()) throw PoleError("constants_abc: A inverts zero at nu = 2");
            out.A = base.inverse();
    }
    out.B = GQ(-2) * gamma_factor(lambda - GQ(1), a - p);
    out.C = GQ(Rational(p)) * (nu - GQ(1)) + lambda - GQ(2);
    return out;
}

GeneratorTriple closed_form_solution(const GQ& lambda, long a, long m) {
    if (m < 1) throw NotAdmissibleError("closed_form_solution: requires m >= 1");
    GQ nu = lambda + GQ(Rational(a));
    Classification cls = classify(lambda, nu, m);
    if (cls.dimension == 0)
        throw NotAdmissibleError("closed_form_solution: (lambda, a, m) = (" + lambda.str() + ", " +
                                 std::to_string(a) + ", " + std::to_string(m) + ") has no solution");

    if (a == m - 1) {
        return {m, a, ParityPoly(0, UniPoly(GQ(1))), ParityPoly(-1), ParityPoly(-2)};
    }
    if (m == 1) {
        GQ c_lo = -(lambda + GQ(rational_floor(Rational(a - 1, 2))));
        UniPoly lo = c_lo * gegenbauer_imag(lambda, a);
        UniPoly mid = (-GQ::i() * gamma_factor(lambda - GQ(1), a)) * gegenbauer_imag(lambda, a - 1);
        UniPoly hi = gegenbauer_imag(lambda, a - 2);
        return {m, a, ParityPoly(a, lo), ParityPoly(a - 1, mid), ParityPoly(a - 2, hi)};
    }
    // m > 1, a >= m
    long nu_l = nu.re().to_long();
    ConstantsABC abc = constants_abc(lambda, nu, m);
    GQ sign = (nu_l % 2 == 0) ? -GQ(1) : GQ(1);  // (-1)^(nu+1)
    UniPoly lo = (sign * GQ::i() * abc.A * abc.B) * gegenbauer_imag(lambda, a - m + 1 - 2 * nu_l);
    UniPoly mid = -abc.C * gegenbauer_imag(lambda - GQ(1), a - m) +
                  (GQ::i() * abc.B) * (UniPoly::variable() * gegenbauer_imag(lambda, a - m - 1));
    UniPoly hi = (GQ::i() * abc.B) * gegenbauer_imag(lambda, a - m - 1);
    return {m, a, ParityPoly(a - m + 1, lo), ParityPoly(a - m, mid), ParityPoly(a - m - 1, hi)};
}

std::vector<std::vector<GQ>> nullspace(const Matrix& mat) {
    size_t rows = mat.size();
    size_t cols = rows == 0 ? 0 : mat[0].size();
    Matrix a = mat;

    std::vector<long> pivot_col_of_row;
    std::vector<bool> is_pivot_col(cols, false);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && a[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        GQ inv = a[r][c].inverse();
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            GQ f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col_of_row.push_back(static_cast<long>(c));
        is_pivot_col[c] = true;
        ++r;
    }

    std::vector<std::vector<GQ>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot_col[c]) continue;
        std::vector<GQ> v(cols, GQ(0));
        v[c] = GQ(1);
        for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[pivot_col_of_row[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Exponents of the parity space with bound b, ascending.
std::vector<long> parity_exponents(long b) {
    std::vector<long> out;
    if (b < 0) return out;
    for (long e = b % 2; e <= b; e += 2) out.push_back(e);
    return out;
}

GeneratorTriple triple_from_vector(const FParams& p, const std::vector<GQ>& v) {
    long pm = std::labs(p.m);
    std::array<long, 3> bounds = {p.a - pm + 1, p.a - pm, p.a - pm - 1};
    std::array<UniPoly, 3> polys;
    size_t idx = 0;
    for (int j = 0; j < 3; ++j)
        for (long e : parity_exponents(bounds[j])) polys[j].set(e, polys[j].coeff(e) + v[idx++]);
    return {p.m, p.a, ParityPoly(bounds[0], polys[0]), ParityPoly(bounds[1], polys[1]),
            ParityPoly(bounds[2], polys[2])};
}

}  // namespace

XiBasis brute_force_xi(const GQ& lambda, long a, long m) {
    if (m < 1) throw NotAdmissibleError("brute_force_xi: requires m >= 1");
    if (a < 0) throw NotAdmissibleError("brute_force_xi: requires a >= 0");
    FParams p = FParams::from_a(lambda, a, m);

    std::array<long, 3> bounds = {a - m + 1, a - m, a - m - 1};
    std::vector<std::array<int, 2>> unknowns;  // (slot, exponent index)
    std::array<std::vector<long>, 3> exps;
    for (int j = 0; j < 3; ++j) {
        exps[j] = parity_exponents(bounds[j]);
        for (size_t i = 0; i < exps[j].size(); ++i)
            unknowns.push_back({j, static_cast<int>(i)});
    }

    size_t n = unknowns.size();
    XiBasis out{p, {}};
    if (n == 0) return out;

    // Column c = image of the c-th unit coefficient vector under L_1..L_6,
    // rows indexed by (equation, exponent of t).
    std::vector<std::array<UniPoly, 6>> images(n);
    for (size_t c = 0; c < n; ++c) {
        std::array<UniPoly, 3> fs;
        auto [slot, ei] = unknowns[c];
        fs[slot].set(exps[slot][ei], GQ(1));
        images[c] = l_operators(p, fs[0], fs[1], fs[2]);
    }
    std::vector<std::set<long>> row_exps(6);
    for (size_t c = 0; c < n; ++c)
        for (int r6 = 0; r6 < 6; ++r6)
            for (const auto& [e, coeff] : images[c][r6].terms()) {
                (void)coeff;
                row_exps[r6].insert(e);
            }

    Matrix mat;
    for (int r6 = 0; r6 < 6; ++r6)
        for (long e : row_exps[r6]) {
            std::vector<GQ> row(n);
            for (size_t c = 0; c < n; ++c) row[c] = images[c][r6].coeff(e);
            mat.push_back(std::move(row));
        }
    if (mat.empty()) mat.push_back(std::vector<GQ>(n, GQ(0)));

    for (const auto& v : nullspace(mat)) {
        GeneratorTriple t = triple_from_vector(p, v);
        for (const auto& L : l_operators(p, t))
            if (!L.is_zero())
                throw std::logic_error("brute_force_xi: kernel vector fails the equations");
        out.basis.push_back(std::move(t));
    }
    return out;
}

VecTriPoly duality_phi(const VecTriPoly& psi) {
    return {psi[3].flip_axis2(), -psi[2].flip_axis2(), psi[1].flip_axis2()};
}

namespace {

std::optional<GQ> first_nonzero(const GeneratorTriple& t) {
    for (const ParityPoly* g : {&t.g_lo, &t.g_mid, &t.g_hi})
        for (const auto& [e, c] : g->body().terms()) {
            (void)e;
            return c;
        }
    return std::nullopt;
}

}  // namespace

GeneratorTriple normalize_triple(const GeneratorTriple& t) {
    auto lead = first_nonzero(t);
    if (!lead) return t;
    GQ s = lead->inverse();
    auto scale = [&](const ParityPoly& g) {
        return ParityPoly(g.bound(), s * g.body());
    };
    return {t.m, t.a, scale(t.g_lo), scale(t.g_mid), scale(t.g_hi)};
}

std::optional<GQ> proportionality(const GeneratorTriple& x, const GeneratorTriple& y) {
    auto ylead = first_nonzero(y);
    if (!ylead) return std::nullopt;
    auto xlead = first_nonzero(x);
    if (!xlead) return std::nullopt;
    GeneratorTriple nx = normalize_triple(x);
    GeneratorTriple ny = normalize_triple(y);
    if (!(nx == ny)) return std::nullopt;
    return *xlead / *ylead;
}

}  // namespace sbo

#include "sbo/verify.hpp"

#include <cstdlib>

#include "sbo/gegenbauer.hpp"

namespace sbo::verify {

namespace {

std::vector<GQ> mu_samples() {
    std::vector<GQ> mus;
    for (long v = -6; v <= 6; ++v) mus.push_back(GQ(v));
    mus.push_back(GQ(Rational(1, 2)));
    mus.push_back(GQ(Rational(-5, 2)));
    mus.push_back(GQ(Rational(2, 3)));
    return mus;
}

UniPoly t_monomial(long e) {
    return UniPoly::monomial(e, GQ(1));
}

}  // namespace

std::vector<Check> appendix_suite(long max_ell) {
    std::vector<Check> out;
    const auto mus = mu_samples();
    auto add = [&out](const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({name, ok, ok ? "" : detail});
    };

    bool ok_g = true, ok_s = true;
    std::string w_g, w_s;
    for (const GQ& mu : mus)
        for (long ell = 0; ell <= max_ell; ++ell) {
            if (!op_G(mu, ell, gegenbauer_renorm(mu, ell)).is_zero() && ok_g) {
                ok_g = false;
                w_g = "mu=" + mu.str() + " ell=" + std::to_string(ell);
            }
            if (!op_S(mu, ell, gegenbauer_imag(mu, ell)).is_zero() && ok_s) {
                ok_s = false;
                w_s = "mu=" + mu.str() + " ell=" + std::to_string(ell);
            }
        }
    add("gegenbauer-annihilation-G", ok_g, w_g);
    add("gegenbauer-annihilation-S", ok_s, w_s);

    bool ok_conj = true;
    std::string w_conj;
    for (const GQ& mu : mus)
        for (long ell = 0; ell <= max_ell && ok_conj; ++ell)
            for (long j = 0; j <= max_ell; ++j) {
                UniPoly f = t_monomial(j);
                if (op_S(mu, ell, f.scale_arg_i()) != op_G(mu, ell, f).scale_arg_i()) {
                    ok_conj = false;
                    w_conj = "mu=" + mu.str() + " ell=" + std::to_string(ell) + " j=" + std::to_string(j);
                    break;
                }
            }
    add("S-G-conjugation", ok_conj, w_conj);

    bool ok_shift = true, ok_mult = true;
    std::string w_shift, w_mult;
    for (const GQ& mu : mus)
        for (long ell = 0; ell <= max_ell; ++ell)
            for (long j = 0; j <= max_ell; ++j) {
                UniPoly f = t_monomial(j);
                UniPoly lhs = op_S(mu + GQ(1), ell, f) - op_S(mu, ell, f);
                UniPoly rhs = GQ(2) * (GQ(Rational(ell)) * f - euler_t(f));
                if (lhs != rhs && ok_shift) {
                    ok_shift = false;
                    w_shift = "mu=" + mu.str() + " ell=" + std::to_string(ell) + " j=" + std::to_string(j);
                }
                UniPoly t = UniPoly::variable();
                UniPoly lhs2 = t * op_S(mu + GQ(1), ell - 1, f) - op_S(mu, ell, t * f);
                UniPoly rhs2 = GQ(2) * differentiate_t(f);
                if (lhs2 != rhs2 && ok_mult) {
                    ok_mult = false;
                    w_mult = "mu=" + mu.str() + " ell=" + std::to_string(ell) + " j=" + std::to_string(j);
                }
            }
    add("S-parameter-shift", ok_shift, w_shift);
    add("S-variable-mult", ok_mult, w_mult);

    bool ok_d1 = true, ok_d2 = true, ok_k1 = true, ok_k2 = true, ok_k3 = true;
    std::string w_d1, w_d2, w_k1, w_k2, w_k3;
    for (const GQ& mu : mus)
        for (long ell = 0; ell <= max_ell; ++ell) {
            UniPoly ci = gegenbauer_imag(mu, ell);
            UniPoly ci_up = gegenbauer_imag(mu + GQ(1), ell);
            UniPoly ci_d1 = gegenbauer_imag(mu + GQ(1), ell - 1);
            UniPoly ci_d2 = gegenbauer_imag(mu + GQ(1), ell - 2);
            GQ gam = gamma_factor(mu, ell);
            UniPoly t = UniPoly::variable();

            if (differentiate_t(ci) != (GQ(2) * GQ::i() * gam) * ci_d1 && ok_d1) {
                ok_d1 = false;
                w_d1 = "mu=" + mu.str() + " ell=" + std::to_string(ell);
            }
            if (euler_t(ci) - GQ(Rational(ell)) * ci != GQ(2) * ci_d2 && ok_d2) {
                ok_d2 = false;
                w_d2 = "mu=" + mu.str() + " ell=" + std::to_string(ell);
            }
            UniPoly k1_lhs = (mu + GQ(Rational(ell))) * ci + ci_d2;
            UniPoly k1_rhs = (mu + GQ(Rational((ell + 1) / 2))) * ci_up;
            if (k1_lhs != k1_rhs && ok_k1) {
                ok_k1 = false;
                w_k1 = "mu=" + mu.str() + " ell=" + std::to_string(ell);
            }
            UniPoly k2_rhs = gam * GQ::i() * (t * ci_d1) - GQ(Rational(ell, 2)) * ci;
            if (ci_d2 != k2_rhs && ok_k2) {
                ok_k2 = false;
                w_k2 = "mu=" + mu.str() + " ell=" + std::to_string(ell);
            }
            GQ gam_next = gamma_factor(mu, ell + 1);
            GQ gam_half = gamma_factor(mu - GQ(Rational(1, 2)), ell + 1);
            UniPoly k3 = GQ::i() * (t * ci_d1) - gam_next * ci_up + gam_half * ci;
            if (!k3.is_zero() && ok_k3) {
                ok_k3 = false;
                w_k3 = "mu=" + mu.str() + " ell=" + std::to_string(ell);
            }
        }
    add("derivative-relation-1", ok_d1, w_d1);
    add("derivative-relation-2", ok_d2, w_d2);
    add("three-term-1", ok_k1, w_k1);
    add("three-term-2", ok_k2, w_k2);
    add("three-term-3", ok_k3, w_k3);

    bool ok_decay = true;
    std::string w_decay;
    for (long k = 0; k <= 6; ++k)
        for (long ell = 0; ell <= 2 * k; ++ell) {
            long lo = -k + (2 * k - ell + 1) / 2;
            long hi = -k + (ell + 1) / 2;
            GQ scale = gamma_ratio(GQ(Rational(lo)), hi - lo);
            if (scale * gegenbauer_renorm(GQ(Rational(-k)), ell) !=
                gegenbauer_renorm(GQ(Rational(-k)), 2 * k - ell)) {
                ok_decay = false;
                w_decay = "k=" + std::to_string(k) + " ell=" + std::to_string(ell);
            }
        }
    add("degree-decay", ok_decay, w_decay);

    bool ok_parity = true;
    std::string w_parity;
    for (const GQ& mu : mus)
        for (long ell = 0; ell <= max_ell; ++ell) {
            UniPoly c = gegenbauer_renorm(mu, ell);
            for (const auto& [e, coeff] : c.terms()) {
                (void)coeff;
                if ((e - ell) % 2 != 0) ok_parity = false;
            }
            if (ell % 2 == 0 && c.coeff(0).is_zero()) ok_parity = false;
            if (c.is_zero()) ok_parity = false;
            if (!ok_parity && w_parity.empty())
                w_parity = "mu=" + mu.str() + " ell=" + std::to_string(ell);
        }
    add("parity-and-nonvanishing", ok_parity, w_parity);

    return out;
}

std::vector<Check> operator_identity_suite(long max_ell) {
    std::vector<Check> out;
    std::vector<GQ> mus = {GQ(-3), GQ(-1), GQ(0), GQ(1), GQ(2), GQ(Rational(1, 2)), GQ(Rational(-5, 2))};
    TriPoly d1 = TriPoly::variable(1), d2 = TriPoly::variable(2), d3 = TriPoly::variable(3);
    TriPoly lap2 = d1 * d1 + d2 * d2;

    bool ok1 = true, ok2 = true, ok3 = true;
    std::string w1, w2, w3;
    for (const GQ& mu : mus)
        for (long ell = 0; ell <= max_ell; ++ell) {
            GQ gam = gamma_factor(mu, ell);
            TriPoly lhs1 = (mu + GQ(Rational(ell))) * script_d(mu, ell) -
                           script_d(mu + GQ(1), ell - 2) * lap2;
            TriPoly rhs1 = (mu + GQ(Rational((ell + 1) / 2))) * script_d(mu + GQ(1), ell);
            TriPoly lhs2 = script_d(mu + GQ(1), ell - 2) * lap2 +
                           gam * (script_d(mu + GQ(1), ell - 1) * d3);
            TriPoly rhs2 = GQ(Rational(ell, 2)) * script_d(mu, ell);
            TriPoly lhs3 = script_d(mu + GQ(1), ell - 2) * d3 -
                           gam * script_d(mu + GQ(1), ell - 1) +
                           gamma_factor(mu - GQ(Rational(1, 2)), ell) * script_d(mu, ell - 1);

            // order-<=ell operators are determined by their action on
            // monomials up to degree ell + 2
            for (long dd = 0; dd <= ell + 2; ++dd)
                for (long e1 = 0; e1 <= dd; ++e1)
                    for (long e2 = 0; e1 + e2 <= dd; ++e2) {
                        TriPoly mono = TriPoly::monomial({e1, e2, dd - e1 - e2}, GQ(1));
                        if (apply_op(lhs1, mono) != apply_op(rhs1, mono) && ok1) {
                            ok1 = false;
                            w1 = "mu=" + mu.str() + " ell=" + std::to_string(ell);
                        }
                        if (apply_op(lhs2, mono) != apply_op(rhs2, mono) && ok2) {
                            ok2 = false;
                            w2 = "mu=" + mu.str() + " ell=" + std::to_string(ell);
                        }
                        if (!apply_op(lhs3, mono).is_zero() && ok3) {
                            ok3 = false;
                            w3 = "mu=" + mu.str() + " ell=" + std::to_string(ell);
                        }
                    }
        }
    out.push_back({"operator-three-term-1", ok1, w1});
    out.push_back({"operator-three-term-2", ok2, w2});
    out.push_back({"operator-three-term-3", ok3, w3});
    return out;
}

bool ml_equivalence_at(const FParams& p, const GeneratorTriple& t) {
    auto M = m_coeffs(p, build_psi(p, t));
    bool m_zero = M[0].is_zero() && M[1].is_zero() && M[2].is_zero();
    bool l_zero = true;
    for (const auto& L : l_operators(p, t))
        if (!L.is_zero()) l_zero = false;
    return m_zero == l_zero;
}

PointResult verify_point(const GQ& lambda, long a, long m, bool fuzz) {
    PointResult r;
    r.lambda = lambda;
    r.a = a;
    r.m = m;
    GQ nu = lambda + GQ(Rational(a));
    Classification cls = classify(lambda, nu, m);
    XiBasis xi = brute_force_xi(lambda, a, m);
    r.dim_classify = cls.dimension;
    r.dim_brute = static_cast<int>(xi.basis.size());
    r.ok_dim = r.dim_brute == r.dim_classify;
    if (cls.dimension == 0 || !r.ok_dim) return r;

    GeneratorTriple closed = closed_form_solution(lambda, a, m);
    if (fuzz) {
        // deliberately corrupt the solution; the checks below must go red
        UniPoly body = closed.g_lo.body();
        long e = closed.g_lo.bound() % 2;
        body.set(e, body.coeff(e) + GQ(1));
        closed = GeneratorTriple(m, a, ParityPoly(closed.g_lo.bound(), body), closed.g_mid,
                                 closed.g_hi);
    }
    auto prop = proportionality(xi.basis[0], closed);
    r.ok_prop = prop.has_value() && !prop->is_zero();
    if (r.ok_prop) r.prop = *prop;

    FParams p = FParams::from_a(lambda, a, m);
    VecTriPoly psi = build_psi(p, closed);
    auto M = m_coeffs(p, psi);
    r.ok_ms = M[0].is_zero() && M[1].is_zero() && M[2].is_zero();

    VecTriPoly phi = duality_phi(psi);
    auto M2 = m_coeffs(p, phi);
    bool phi_annihilated = M2[0].is_zero() && M2[1].is_zero() && M2[2].is_zero();
    GeneratorTriple mirrored(-m, a, closed.g_lo,
                             ParityPoly(closed.g_mid.bound(), -closed.g_mid.body()), closed.g_hi);
    FParams pneg = FParams::from_a(lambda, a, -m);
    bool phi_shape = phi == build_psi(pneg, mirrored);
    bool involution = duality_phi(phi) == psi;
    r.ok_dual = phi_annihilated && phi_shape && involution;
    return r;
}

std::vector<GQ> default_lambda_samples() {
    std::vector<GQ> out;
    for (long v = -12; v <= 4; ++v) out.push_back(GQ(v));
    out.push_back(GQ(Rational(1, 2)));
    out.push_back(GQ(Rational(-3, 2)));
    out.push_back(GQ(Rational(2, 3)));
    out.push_back(GQ(Rational(1, 2), Rational(1, 3)));
    return out;
}

uint64_t seed_from_env() {
    const char* s = std::getenv("SBO_SEED");
    if (s == nullptr) return 20240901ull;
    return std::strtoull(s, nullptr, 10);
}

GeneratorTriple random_triple(std::mt19937_64& rng, long m, long a) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<int> keep(0, 3);
    long p = std::labs(m);
    std::array<long, 3> bounds = {a - p + 1, a - p, a - p - 1};
    std::array<UniPoly, 3> polys;
    for (int j = 0; j < 3; ++j) {
        if (bounds[j] < 0) continue;
        for (long e = bounds[j] % 2; e <= bounds[j]; e += 2) {
            if (keep(rng) == 0) continue;  // occasional structural zero
            GQ c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
            polys[j].set(e, c);
        }
    }
    return {m, a, ParityPoly(bounds[0], polys[0]), ParityPoly(bounds[1], polys[1]),
            ParityPoly(bounds[2], polys[2])};
}

}  // namespace sbo::verify

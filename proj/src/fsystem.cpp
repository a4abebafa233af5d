#include "sbo/fsystem.hpp"

#include <cstdlib>

#include "sbo/errors.hpp"
#include "sbo/gegenbauer.hpp"

namespace sbo {

FParams FParams::make(const GQ& lambda, const GQ& nu, long m) {
    if (m == 0) throw ZeroMError("FParams: m = 0 is not supported");
    GQ diff = nu - lambda;
    if (!diff.is_integer())
        throw NotNaturalError("FParams: nu - lambda = " + diff.str() + " is not an integer");
    FParams p;
    p.lambda = lambda;
    p.nu = nu;
    p.m = m;
    p.a = diff.re().to_long();
    return p;
}

FParams FParams::from_a(const GQ& lambda, long a, long m) {
    return make(lambda, lambda + GQ(Rational(a)), m);
}

GeneratorTriple::GeneratorTriple(long m_, long a_, ParityPoly lo, ParityPoly mid, ParityPoly hi)
    : m(m_), a(a_), g_lo(std::move(lo)), g_mid(std::move(mid)), g_hi(std::move(hi)) {
    if (m == 0) throw ZeroMError("GeneratorTriple: m = 0 is not supported");
    long p = std::labs(m);
    if (g_lo.bound() != a - p + 1 || g_mid.bound() != a - p || g_hi.bound() != a - p - 1)
        throw ParityError("GeneratorTriple: bounds do not match (m, a)");
}

GeneratorTriple GeneratorTriple::zero(long m, long a) {
    long p = std::labs(m);
    return {m, a, ParityPoly(a - p + 1), ParityPoly(a - p), ParityPoly(a - p - 1)};
}

std::set<long> index_set_K(long m) {
    if (m == 0) throw ZeroMError("index_set_K: m = 0 is not supported");
    return {std::labs(m - 1), std::labs(m), std::labs(m + 1)};
}

VecTriPoly harmonic_generator(long k, long m) {
    std::set<long> K = index_set_K(m);
    if (!K.contains(k))
        throw IndexError("harmonic_generator: k = " + std::to_string(k) + " not in K(m)");
    long p = std::labs(m);
    TriPoly z1 = TriPoly::variable(1);
    TriPoly z2 = TriPoly::variable(2);
    VecTriPoly out;
    if (m >= 1) {
        // u_{k-m+2} carries (zeta1 + i zeta2)^k.
        TriPoly h = (z1 + GQ::i() * z2).pow(k);
        out[static_cast<int>(k - m + 2)] = h;
    } else {
        // u_{|m|-k+2} carries (zeta1 - i zeta2)^k: k = |m|-1 sits in u3 and
        // k = |m|+1 in u1, matching the psi^- coordinates.
        TriPoly h = (z1 - GQ::i() * z2).pow(k);
        out[static_cast<int>(p - k + 2)] = h;
    }
    return out;
}

TriPoly t_saturate(long b, const ParityPoly& g) {
    if (g.bound() != b)
        throw ParityError("t_saturate: polynomial bound " + std::to_string(g.bound()) +
                          " does not match b = " + std::to_string(b));
    TriPoly out;
    if (g.is_zero()) return out;
    TriPoly q2 = TriPoly::variable(1) * TriPoly::variable(1) + TriPoly::variable(2) * TriPoly::variable(2);
    for (const auto& [e, c] : g.body().terms()) {
        long j = (b - e) / 2;
        out += c * (TriPoly::monomial({0, 0, e}, GQ(1)) * q2.pow(j));
    }
    return out;
}

VecTriPoly build_psi(const FParams& p, const GeneratorTriple& t) {
    long pm = std::labs(p.m);
    VecTriPoly out;
    const std::array<const ParityPoly*, 3> gs = {&t.g_lo, &t.g_mid, &t.g_hi};
    for (int j = 0; j < 3; ++j) {
        long k = pm - 1 + j;
        if (gs[j]->bound() < 0) continue;  // space is {0}
        TriPoly sat = t_saturate(p.a - k, *gs[j]);
        if (sat.is_zero()) continue;
        VecTriPoly h = harmonic_generator(k, p.m);
        for (int s = 1; s <= 3; ++s)
            if (!h[s].is_zero()) out[s] += sat * h[s];
    }
    return out;
}

TriPoly hat_dpi_scalar(const GQ& lambda, const TriPoly& p) {
    TriPoly d1 = differentiate(p, 1);
    return (GQ(2) * lambda) * d1 + GQ(2) * euler_operator(d1) -
           TriPoly::variable(1) * laplacian3(p);
}

std::array<TriPoly, 3> m_coeffs(const FParams& p, const VecTriPoly& psi) {
    TriPoly d2_1 = differentiate(psi[1], 2);
    TriPoly d2_3 = differentiate(psi[3], 2);
    TriPoly d3_1 = differentiate(psi[1], 3);
    TriPoly d3_2 = differentiate(psi[2], 3);
    TriPoly d3_3 = differentiate(psi[3], 3);
    GQ two(2), i = GQ::i();
    std::array<TriPoly, 3> out;
    out[0] = hat_dpi_scalar(p.lambda, psi[1]) - (two * i) * d2_1 + two * d3_2;
    out[1] = hat_dpi_scalar(p.lambda, psi[2]) - d3_1 + d3_3;
    out[2] = hat_dpi_scalar(p.lambda, psi[3]) - two * d3_2 + (two * i) * d2_3;
    return out;
}

std::array<UniPoly, 6> l_operators(const FParams& p, const UniPoly& f0, const UniPoly& f1,
                                   const UniPoly& f2) {
    const GQ& lambda = p.lambda;
    long a = p.a, m = p.m;
    GQ lam1 = lambda - GQ(1);
    GQ c = GQ(Rational(m)) * (lambda + GQ(Rational(a - 1)));
    GQ shift = lambda - GQ(1);

    std::array<UniPoly, 6> L;
    L[0] = op_S(lambda, a + m - 1, f0);
    L[1] = op_S(lambda, a - m - 1, f2);
    L[2] = op_S(lam1, a + m, f1) - GQ(2) * differentiate_t(f0);
    L[3] = op_S(lam1, a - m, f1) + GQ(2) * differentiate_t(f2);
    L[4] = (shift - c) * f0 + euler_t(f0) + differentiate_t(f1);
    L[5] = (shift + c) * f2 + euler_t(f2) - differentiate_t(f1);
    return L;
}

std::array<UniPoly, 6> l_operators(const FParams& p, const GeneratorTriple& t) {
    return l_operators(p, t.g_lo.body(), t.g_mid.body(), t.g_hi.body());
}

}  // namespace sbo

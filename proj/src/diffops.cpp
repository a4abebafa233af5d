#include "sbo/diffops.hpp"

#include <cstdlib>

#include "sbo/errors.hpp"
#include "sbo/gegenbauer.hpp"
#include "sbo/solver.hpp"

namespace sbo {

TriPoly apply_op(const TriPoly& symbol, const TriPoly& f) {
    TriPoly out;
    for (const auto& [e, c] : symbol.terms()) {
        TriPoly term = f;
        for (int axis = 1; axis <= 3; ++axis)
            for (long k = 0; k < e[axis - 1] && !term.is_zero(); ++k)
                term = differentiate(term, axis);
        out += c * term;
    }
    return out;
}

TriPoly apply(const DiffOp& D, const PolySection& F) {
    TriPoly out;
    for (int s = 1; s <= 3; ++s) out += apply_op(D.comp[s - 1], F[s]);
    return out.restrict_axis3();
}

namespace {

// (I_ell C~_ell^mu)(X, Y) with X, Y given as symbols.
TriPoly iota_ctilde(const GQ& mu, long ell, const TriPoly& x_sym, const TriPoly& y_sym) {
    TriPoly out;
    if (ell < 0) return out;
    UniPoly c = gegenbauer_renorm(mu, ell);
    for (const auto& [e, coeff] : c.terms()) {
        long j = (ell - e) / 2;  // z^e contributes x^j y^e
        out += coeff * (x_sym.pow(j) * y_sym.pow(e));
    }
    return out;
}

TriPoly neg_laplacian_x() {
    TriPoly d1 = TriPoly::variable(1), d2 = TriPoly::variable(2);
    return -(d1 * d1 + d2 * d2);
}

TriPoly neg_laplacian_z() {
    return GQ(-4) * (TriPoly::variable(1) * TriPoly::variable(2));
}

}  // namespace

TriPoly script_d(const GQ& mu, long ell) {
    return iota_ctilde(mu, ell, neg_laplacian_x(), TriPoly::variable(3));
}

TriPoly script_d_z(const GQ& mu, long ell) {
    return iota_ctilde(mu, ell, neg_laplacian_z(), TriPoly::variable(3));
}

TriPoly scalar_ctilde(const GQ& lambda, const GQ& nu) {
    GQ diff = nu - lambda;
    if (!diff.is_integer() || diff.re().sign() < 0)
        throw NotNaturalError("scalar_ctilde: nu - lambda = " + diff.str() + " is not natural");
    return script_d_z(lambda - GQ(1), diff.re().to_long());
}

DiffOp emit_operator(const GQ& lambda, const GQ& nu, long m) {
    Classification cls = classify(lambda, nu, m);
    if (cls.dimension == 0)
        throw NotAdmissibleError("emit_operator: no operator at (" + lambda.str() + ", " + nu.str() +
                                 ", " + std::to_string(m) + ")");
    long p = std::labs(m);
    long a = (nu - lambda).re().to_long();
    TriPoly dz = TriPoly::variable(1), dzb = TriPoly::variable(2), dx3 = TriPoly::variable(3);

    DiffOp out;
    if (p == 1) {
        if (a == 0) {
            out.comp[m > 0 ? 0 : 2] = TriPoly(GQ(1));
            return out;
        }
        GQ head = lambda + GQ(rational_floor(Rational(a - 1, 2)));
        GQ gam = gamma_factor(lambda - GQ(1), a);
        if (m == 1) {
            out.comp[0] = head * script_d_z(lambda, a);
            out.comp[1] = (GQ(2) * gam) * (script_d_z(lambda, a - 1) * dzb);
            out.comp[2] = GQ(4) * (script_d_z(lambda, a - 2) * dzb.pow(2));
        } else {
            out.comp[0] = GQ(4) * (script_d_z(lambda, a - 2) * dz.pow(2));
            out.comp[1] = (GQ(-2) * gam) * (script_d_z(lambda, a - 1) * dz);
            out.comp[2] = head * script_d_z(lambda, a);
        }
        return out;
    }
    if (a == p - 1) {
        if (m > 1)
            out.comp[0] = dzb.pow(m - 1);
        else
            out.comp[2] = dz.pow(p - 1);
        return out;
    }
    // |m| > 1, a >= |m|
    long nu_l = nu.re().to_long();
    ConstantsABC abc = constants_abc(lambda, nu, m);
    GQ pow2 = pow_int(GQ(2), 2 * nu_l - 1);
    TriPoly d_top = script_d_z(lambda, a - p + 1 - 2 * nu_l);
    TriPoly d_mid_l = script_d_z(lambda - GQ(1), a - p);
    TriPoly d_low = script_d_z(lambda, a - p - 1);
    if (m > 1) {
        out.comp[0] = (pow2 * abc.A * abc.B) * (d_top * dz.pow(nu_l) * dzb.pow(nu_l + m - 1));
        out.comp[1] = (-abc.C * d_mid_l + abc.B * (dx3 * d_low)) * dzb.pow(m);
        out.comp[2] = (GQ(2) * abc.B) * (d_low * dzb.pow(m + 1));
    } else {
        out.comp[0] = (GQ(2) * abc.B) * (d_low * dz.pow(p + 1));
        out.comp[1] = (abc.C * d_mid_l - abc.B * (dx3 * d_low)) * dz.pow(p);
        out.comp[2] = (pow2 * abc.A * abc.B) * (d_top * dz.pow(nu_l + p - 1) * dzb.pow(nu_l));
    }
    return out;
}

GQ symbol_inverse_scale(const VecTriPoly& psi, long m) {
    long a = 0;
    for (int s = 1; s <= 3; ++s) {
        auto d = psi[s].total_degree();
        if (d) a = std::max(a, *d);
    }
    long p = std::labs(m);
    GQ scale = pow_int(GQ(2), p);
    scale *= (m >= 1) ? i_pow(a - p) : pow_int(-GQ::i(), ((a - p) % 4 + 4) % 4);
    return scale;
}

DiffOp symbol_inverse(const VecTriPoly& psi, long m) {
    if (m == 0) throw ZeroMError("symbol_inverse: m = 0 is not supported");
    TriPoly dz = TriPoly::variable(1), dzb = TriPoly::variable(2), dx3 = TriPoly::variable(3);
    TriPoly sub1 = dz + dzb;               // d/dx1
    TriPoly sub2 = GQ::i() * (dz - dzb);   // d/dx2
    DiffOp out;
    if (psi.is_zero()) return out;
    GQ scale = symbol_inverse_scale(psi, m).inverse();
    for (int s = 1; s <= 3; ++s)
        out.comp[s - 1] = scale * psi[s].substitute(sub1, sub2, dx3);
    return out;
}

VecTriPoly symb(const DiffOp& D) {
    TriPoly z1 = TriPoly::variable(1), z2 = TriPoly::variable(2), z3 = TriPoly::variable(3);
    GQ half(Rational(1, 2));
    TriPoly sub_dz = half * (z1 - GQ::i() * z2);
    TriPoly sub_dzb = half * (z1 + GQ::i() * z2);
    VecTriPoly out;
    for (int s = 1; s <= 3; ++s) out[s] = D.comp[s - 1].substitute(sub_dz, sub_dzb, z3);
    return out;
}

DiffOp op_mirror(const DiffOp& D) {
    auto swap_dzdzb = [](const TriPoly& p) {
        TriPoly out;
        for (const auto& [e, c] : p.terms()) out.set({e[1], e[0], e[2]}, c);
        return out;
    };
    DiffOp out;
    out.comp[0] = swap_dzdzb(D.comp[2]);
    out.comp[1] = -swap_dzdzb(D.comp[1]);
    out.comp[2] = swap_dzdzb(D.comp[0]);
    return out;
}

std::array<TriPoly, 2> KkpOperator::apply(const OneForm3& omega) const {
    if (a == 0) return {omega[1].restrict_axis3(), omega[2].restrict_axis3()};
    // codifferential with the -div convention
    TriPoly dstar = -(differentiate(omega[1], 1) + differentiate(omega[2], 2) +
                      differentiate(omega[3], 3));
    TriPoly d_dd = script_d(lambda, a - 2);
    TriPoly d_i = script_d(lambda - GQ(1), a - 1);
    TriPoly d_id = script_d(lambda - GQ(1), a);
    GQ gam = gamma_factor(lambda - GQ(Rational(3, 2)), a);
    GQ head = (lambda + GQ(Rational(a - 1))) * GQ(Rational(1, 2));
    std::array<TriPoly, 2> out;
    for (int j = 1; j <= 2; ++j) {
        TriPoly val = apply_op(d_dd, differentiate(dstar, j));
        val -= gam * apply_op(d_i, differentiate(omega[3], j));
        val += head * apply_op(d_id, omega[j]);
        out[j - 1] = val.restrict_axis3();
    }
    return out;
}

KkpOperator kkp_operator(const GQ& lambda, const GQ& nu) {
    GQ diff = nu - lambda;
    if (!diff.is_integer() || diff.re().sign() < 0)
        throw NotNaturalError("kkp_operator: nu - lambda = " + diff.str() + " is not natural");
    return {lambda, nu, diff.re().to_long()};
}

TriPoly poly_x_to_z(const TriPoly& p) {
    TriPoly z = TriPoly::variable(1), zb = TriPoly::variable(2), x3 = TriPoly::variable(3);
    GQ half(Rational(1, 2));
    TriPoly x1 = half * (z + zb);
    TriPoly x2 = (-GQ::i() * half) * (z - zb);
    return p.substitute(x1, x2, x3);
}

TriPoly poly_z_to_x(const TriPoly& p) {
    TriPoly x1 = TriPoly::variable(1), x2 = TriPoly::variable(2), x3 = TriPoly::variable(3);
    TriPoly z = x1 + GQ::i() * x2;
    TriPoly zb = x1 - GQ::i() * x2;
    return p.substitute(z, zb, x3);
}

TriPoly op_x_to_z(const TriPoly& symbol) {
    TriPoly dz = TriPoly::variable(1), dzb = TriPoly::variable(2), dx3 = TriPoly::variable(3);
    return symbol.substitute(dz + dzb, GQ::i() * (dz - dzb), dx3);
}

KkpComparison compare_kkp(const GQ& lambda, const GQ& nu, long max_degree,
                          const std::optional<GQ>& k_override) {
    KkpOperator kkp = kkp_operator(lambda, nu);
    long a = kkp.a;
    KkpComparison result;
    result.K = k_override.value_or(a == 0 ? GQ(1) : GQ(2));

    DiffOp d_plus = emit_operator(lambda, nu, 1);
    DiffOp d_minus = emit_operator(lambda, nu, -1);
    GQ half(Rational(1, 2));

    for (long deg = 0; deg <= max_degree; ++deg)
        for (long e1 = 0; e1 <= deg; ++e1)
            for (long e2 = 0; e2 + e1 <= deg; ++e2) {
                long e3 = deg - e1 - e2;
                TriPoly mono = TriPoly::monomial({e1, e2, e3}, GQ(1));
                for (int c = 1; c <= 3; ++c) {
                    OneForm3 omega;
                    omega[c] = mono;
                    // left side: iota (D^1 - D^-1) A^inverse, in z coordinates
                    TriPoly f1z = poly_x_to_z(omega[1]);
                    TriPoly f2z = poly_x_to_z(omega[2]);
                    TriPoly f3z = poly_x_to_z(omega[3]);
                    PolySection F;
                    F[1] = half * (f1z + GQ::i() * f2z);
                    F[2] = -f3z;
                    F[3] = half * (-f1z + GQ::i() * f2z);
                    TriPoly d1 = apply(d_plus, F);
                    TriPoly dm1 = apply(d_minus, F);
                    TriPoly lhs_dx1 = poly_z_to_x(d1 - dm1);
                    TriPoly lhs_dx2 = poly_z_to_x(-GQ::i() * (d1 + dm1));
                    auto rhs = kkp.apply(omega);
                    if (lhs_dx1 != result.K * rhs[0] || lhs_dx2 != result.K * rhs[1]) {
                        result.ok = false;
                        result.witness = "x1^" + std::to_string(e1) + " x2^" + std::to_string(e2) +
                                         " x3^" + std::to_string(e3) + " dx" + std::to_string(c);
                        return result;
                    }
                }
            }
    result.ok = true;
    return result;
}

}  // namespace sbo

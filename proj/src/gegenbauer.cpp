#include "sbo/gegenbauer.hpp"

#include "sbo/errors.hpp"

namespace sbo {

UniPoly gegenbauer_renorm(const GQ& mu, long ell) {
    UniPoly out;
    if (ell < 0) return out;
    long half_up = (ell + 1) / 2;  // floor((ell+1)/2)
    GQ base = mu + GQ(Rational(half_up));
    for (long k = 0; k <= ell / 2; ++k) {
        // Gamma(mu+ell-k) / Gamma(mu+floor((ell+1)/2)), a rising factorial of
        // nonnegative length, so the coefficient is polynomial in mu.
        GQ num = rising_factorial(base, ell - k - half_up);
        GQ denom(Rational(1));
        for (long j = 2; j <= k; ++j) denom *= GQ(Rational(j));
        for (long j = 2; j <= ell - 2 * k; ++j) denom *= GQ(Rational(j));
        GQ coeff = num / denom;
        if (k % 2 != 0) coeff = -coeff;
        coeff *= pow_int(GQ(2), ell - 2 * k);
        out += UniPoly::monomial(ell - 2 * k, coeff);
    }
    return out;
}

UniPoly gegenbauer_imag(const GQ& mu, long ell) {
    return gegenbauer_renorm(mu, ell).scale_arg_i();
}

GQ gamma_factor(const GQ& mu, long ell) {
    if (ell < 0) throw NegativeDegreeError("gamma_factor: ell = " + std::to_string(ell));
    if (ell % 2 != 0) return GQ(1);
    return mu + GQ(Rational(ell, 2));
}

UniPoly op_G(const GQ& mu, long ell, const UniPoly& f) {
    UniPoly f1 = differentiate_t(f);
    UniPoly f2 = differentiate_t(f1);
    UniPoly z = UniPoly::variable();
    UniPoly one_minus_z2 = UniPoly(GQ(1)) - z * z;
    GQ c0 = GQ(Rational(ell)) * (GQ(Rational(ell)) + GQ(2) * mu);
    GQ c1 = GQ(2) * mu + GQ(1);
    return one_minus_z2 * f2 - c1 * (z * f1) + c0 * f;
}

UniPoly op_S(const GQ& mu, long ell, const UniPoly& g) {
    UniPoly g1 = differentiate_t(g);
    UniPoly g2 = differentiate_t(g1);
    UniPoly t = UniPoly::variable();
    UniPoly one_plus_t2 = UniPoly(GQ(1)) + t * t;
    GQ c0 = GQ(Rational(ell)) * (GQ(Rational(ell)) + GQ(2) * mu);
    GQ c1 = GQ(1) + GQ(2) * mu;
    return -(one_plus_t2 * g2 + c1 * (t * g1) - c0 * g);
}

}  // namespace sbo

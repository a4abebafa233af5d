#ifndef SBO_GEGENBAUER_HPP
#define SBO_GEGENBAUER_HPP

#include "sbo/poly.hpp"

namespace sbo {

// Renormalized Gegenbauer polynomial in z. Nonzero for every mu when ell >= 0;
// the zero polynomial for ell < 0.
UniPoly gegenbauer_renorm(const GQ& mu, long ell);

// Same polynomial with z replaced by i*t (coefficients land in Q(i)).
UniPoly gegenbauer_imag(const GQ& mu, long ell);

// gamma(mu, ell): 1 for odd ell, mu + ell/2 for even ell. Requires ell >= 0.
GQ gamma_factor(const GQ& mu, long ell);

// Gegenbauer differential operator: (1-z^2) f'' - (2mu+1) z f' + ell(ell+2mu) f.
UniPoly op_G(const GQ& mu, long ell, const UniPoly& f);

// Imaginary Gegenbauer operator: -((1+t^2) g'' + (1+2mu) t g' - ell(ell+2mu) g).
UniPoly op_S(const GQ& mu, long ell, const UniPoly& g);

}  // namespace sbo

#endif

#ifndef SBO_FSYSTEM_HPP
#define SBO_FSYSTEM_HPP

#include <array>
#include <set>

#include "sbo/poly.hpp"

namespace sbo {

// Parameters (lambda, nu, m) with a = nu - lambda, which must be an exact
// integer for any of the solution machinery to apply.
struct FParams {
    GQ lambda;
    GQ nu;
    long m = 1;
    long a = 0;

    static FParams make(const GQ& lambda, const GQ& nu, long m);
    static FParams from_a(const GQ& lambda, long a, long m);
};

// The unknowns of the F-system: the triple indexed by k = |m|-1, |m|, |m|+1
// with parity bounds a-|m|+1, a-|m|, a-|m|-1 respectively.
struct GeneratorTriple {
    long m;
    long a;
    ParityPoly g_lo;   // k = |m|-1
    ParityPoly g_mid;  // k = |m|
    ParityPoly g_hi;   // k = |m|+1

    GeneratorTriple(long m, long a, ParityPoly lo, ParityPoly mid, ParityPoly hi);
    static GeneratorTriple zero(long m, long a);

    friend bool operator==(const GeneratorTriple& x, const GeneratorTriple& y) {
        return x.m == y.m && x.a == y.a && x.g_lo == y.g_lo && x.g_mid == y.g_mid && x.g_hi == y.g_hi;
    }
};

// K(m) = {|m-1|, |m|, |m+1|}; throws ZeroMError for m = 0.
std::set<long> index_set_K(long m);

// The SO(2)-equivariant generator attached to k in K(m): a single component
// carrying (zeta1 + i zeta2)^k for m >= 1, (zeta1 - i zeta2)^k for m <= -1.
VecTriPoly harmonic_generator(long k, long m);

// (T_b g)(zeta): t^(b-2j) |-> zeta3^(b-2j) (zeta1^2+zeta2^2)^j, homogeneous of
// degree b. Requires g to lie in the parity space with bound exactly b.
TriPoly t_saturate(long b, const ParityPoly& g);

// Assemble psi = sum_k (T_{a-k} g_k) h_k from a generator triple.
VecTriPoly build_psi(const FParams& p, const GeneratorTriple& t);

// Scalar part of the Fourier-transformed action on one component:
// (2 lambda + 2 E_zeta) d/dzeta1 - zeta1 Laplacian.
TriPoly hat_dpi_scalar(const GQ& lambda, const TriPoly& p);

// The three vector coefficients M_s(psi) whose simultaneous vanishing is the
// F-system equation; only lambda from the parameters enters.
std::array<TriPoly, 3> m_coeffs(const FParams& p, const VecTriPoly& psi);

// The six polynomials L_1..L_6 of the reduced system, on arbitrary inputs.
std::array<UniPoly, 6> l_operators(const FParams& p, const UniPoly& f0, const UniPoly& f1,
                                   const UniPoly& f2);

std::array<UniPoly, 6> l_operators(const FParams& p, const GeneratorTriple& t);

}  // namespace sbo

#endif

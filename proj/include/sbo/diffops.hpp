#ifndef SBO_DIFFOPS_HPP
#define SBO_DIFFOPS_HPP

#include <array>
#include <optional>
#include <string>

#include "sbo/poly.hpp"

namespace sbo {

// Constant-coefficient operators are stored as their symbols: a TriPoly whose
// exponents are derivative multi-indices. Two flavors are used and never
// mixed: z-flavor (d/dz, d/dzbar, d/dx3) and x-flavor (d/dx1, d/dx2, d/dx3).

// Formal application of a symbol to a polynomial in the matching coordinates.
TriPoly apply_op(const TriPoly& symbol, const TriPoly& f);

// Vector-valued operator C^inf(R^3, V^3) -> C^inf(R^2): three z-flavor
// symbols, one per dual basis vector, with restriction to x3 = 0 after
// differentiation.
struct DiffOp {
    std::array<TriPoly, 3> comp;  // comp[s-1] acts on the coefficient of u_s

    bool is_zero() const { return comp[0].is_zero() && comp[1].is_zero() && comp[2].is_zero(); }
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.comp == b.comp; }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }
};

// (D F)(z, zbar) = sum_s (comp_s F_s) restricted to x3 = 0.
TriPoly apply(const DiffOp& D, const PolySection& F);

// Order-ell operator (I_ell C~_ell^mu)(-Laplacian_R2, d/dx3), zero for ell < 0.
// x-flavor; this is the building block of the 1-form operator below.
TriPoly script_d(const GQ& mu, long ell);
// Same operator over (d/dz, d/dzbar, d/dx3), with -Laplacian = -4 dz dzbar.
TriPoly script_d_z(const GQ& mu, long ell);

// Scalar operator of order nu - lambda used throughout the closed forms; to be
// composed with restriction to x3 = 0. Throws NotNaturalError when
// nu - lambda is not a natural number. z-flavor.
TriPoly scalar_ctilde(const GQ& lambda, const GQ& nu);

// The closed-form intertwining operator for an admissible (lambda, nu, m);
// throws NotAdmissibleError otherwise.
DiffOp emit_operator(const GQ& lambda, const GQ& nu, long m);

// Inverse symbol map: zeta-monomials to derivative monomials (dx1 = dz + dzbar,
// dx2 = i(dz - dzbar)), rescaled by 1/(i^(a-m) 2^m) for m >= 1 and by
// 1/((-i)^(a-|m|) 2^|m|) for m <= -1, a = deg psi, so the result is
// projectively comparable with emit_operator.
DiffOp symbol_inverse(const VecTriPoly& psi, long m);
// The scalar the raw inverse was divided by.
GQ symbol_inverse_scale(const VecTriPoly& psi, long m);

// Forward symbol map (dz -> (zeta1 - i zeta2)/2, dzbar -> (zeta1 + i zeta2)/2,
// dx3 -> zeta3), for round-trip checks.
VecTriPoly symb(const DiffOp& D);

// Component swap 1<->3, sign flip on component 2, dz <-> dzbar; carries the
// operator for m to the operator for -m.
DiffOp op_mirror(const DiffOp& D);

// Conformally covariant operator on 1-forms, applied to polynomial
// coefficients in (x1, x2, x3); returns the dx1, dx2 coefficients restricted
// to x3 = 0. Throws NotNaturalError when a = nu - lambda is not natural.
struct KkpOperator {
    GQ lambda, nu;
    long a;
    std::array<TriPoly, 2> apply(const OneForm3& omega) const;
};

KkpOperator kkp_operator(const GQ& lambda, const GQ& nu);

struct KkpComparison {
    bool ok = false;
    GQ K;
    std::string witness;  // first failing monomial 1-form, empty when ok
};

// Check iota (D^1 - D^-1) A^inverse = K C^(1,1) on all monomial 1-forms of
// total degree <= max_degree. K = 1 for a = 0, K = 2 otherwise; k_override
// substitutes a different K (used to validate that the checker can fail).
KkpComparison compare_kkp(const GQ& lambda, const GQ& nu, long max_degree,
                          const std::optional<GQ>& k_override = std::nullopt);

// Coordinate changes between the two polynomial pictures.
TriPoly poly_x_to_z(const TriPoly& p);
TriPoly poly_z_to_x(const TriPoly& p);
// x-flavor operator symbol to z-flavor.
TriPoly op_x_to_z(const TriPoly& symbol);

}  // namespace sbo

#endif

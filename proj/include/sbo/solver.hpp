#ifndef SBO_SOLVER_HPP
#define SBO_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "sbo/fsystem.hpp"

namespace sbo {

enum class CaseTag { None, Case1, Case2 };

// Subcases of the one-dimensional locus: split by a = |m|-1, a = |m|,
// a >= |m|+1 (1/2/3) and by |m| = 1 vs |m| > 1 (I/II).
enum class SubCase { None, S1I, S1II, S2I, S2II, S3I, S3II };

struct Classification {
    int dimension = 0;
    CaseTag case_tag = CaseTag::None;
    SubCase subcase = SubCase::None;
};

std::string case_str(CaseTag t);
std::string subcase_str(SubCase s);

// Dimension of the space of intertwining differential operators for
// (lambda, nu, m). Exact membership tests; throws ZeroMError for m = 0.
Classification classify(const GQ& lambda, const GQ& nu, long m);

struct ConstantsABC {
    GQ A, B, C;
};

// The constants entering the closed-form solutions; requires nu in {0,1,2}
// and nu - lambda >= |m|. Throws PoleError if nu = 2 and the inverted base
// vanishes.
ConstantsABC constants_abc(const GQ& lambda, const GQ& nu, long m);

// Closed-form generator of the solution space for m >= 1; throws
// NotAdmissibleError off the one-dimensional locus.
GeneratorTriple closed_form_solution(const GQ& lambda, long a, long m);

using Matrix = std::vector<std::vector<GQ>>;

// Exact kernel basis via Gauss-Jordan elimination with deterministic pivots
// (leftmost nonzero column, first available row).
std::vector<std::vector<GQ>> nullspace(const Matrix& mat);

struct XiBasis {
    FParams params;
    std::vector<GeneratorTriple> basis;
};

// Brute-force solution space: assemble the linear system L_1..L_6 = 0 over
// the free coefficients of the three parity spaces and return its kernel.
// Every returned triple is re-checked against the six equations.
XiBasis brute_force_xi(const GQ& lambda, long a, long m);

// The involution Phi(psi)(z1,z2,z3) = (psi3, -psi2, psi1)(z1,-z2,z3); it
// exchanges the m and -m solution spaces.
VecTriPoly duality_phi(const VecTriPoly& psi);

// Scale so the first nonzero coefficient (g_lo ascending exponents, then
// g_mid, then g_hi) equals 1; identity on the zero triple.
GeneratorTriple normalize_triple(const GeneratorTriple& t);

// The scalar c with x = c * y, if the triples are proportional and y != 0.
std::optional<GQ> proportionality(const GeneratorTriple& x, const GeneratorTriple& y);

}  // namespace sbo

#endif

#ifndef SBO_VERIFY_HPP
#define SBO_VERIFY_HPP

#include <random>
#include <string>
#include <vector>

#include "sbo/diffops.hpp"
#include "sbo/solver.hpp"

namespace sbo::verify {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Gegenbauer identity battery: annihilation by the differential operators,
// the operator shift and multiplication identities, derivative relations,
// three-term relations, degree decay, parity.
std::vector<Check> appendix_suite(long max_ell = 12);

// Identities between the order-ell operators, checked by applying both sides
// to every monomial of degree <= ell + 2.
std::vector<Check> operator_identity_suite(long max_ell = 8);

struct PointResult {
    GQ lambda;
    long a = 0;
    long m = 1;
    int dim_brute = 0;
    int dim_classify = 0;
    bool ok_dim = false;
    bool ok_prop = true;   // vacuous at dimension 0
    bool ok_ms = true;     // vacuous at dimension 0
    bool ok_dual = true;   // vacuous at dimension 0
    GQ prop;               // scalar relating brute basis and closed form

    bool ok() const { return ok_dim && ok_prop && ok_ms && ok_dual; }
};

// Full cross-check at one parameter point (m >= 1): brute-force dimension vs
// classification, proportionality with the closed form, annihilation of the
// assembled psi, and the duality with -m. When fuzz is set the closed form is
// deliberately perturbed first; a healthy checker must then report failure.
PointResult verify_point(const GQ& lambda, long a, long m, bool fuzz = false);

// All three M_s vanish iff all six L_r vanish for this triple.
bool ml_equivalence_at(const FParams& p, const GeneratorTriple& t);

// Integer lambdas -12..4 plus the rational and complex samples used by the
// default verification grid.
std::vector<GQ> default_lambda_samples();

uint64_t seed_from_env();
GeneratorTriple random_triple(std::mt19937_64& rng, long m, long a);

}  // namespace sbo::verify

#endif

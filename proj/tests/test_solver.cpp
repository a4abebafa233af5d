#include <doctest.h>

#include <random>

#include "sbo/errors.hpp"
#include "sbo/gegenbauer.hpp"
#include "sbo/solver.hpp"
#include "sbo/verify.hpp"

using namespace sbo;

TEST_CASE("classification") {
    CHECK(classify(GQ(Rational(1, 2)), GQ(Rational(5, 2)), 1).dimension == 1);
    CHECK(classify(GQ(Rational(1, 2)), GQ(Rational(5, 2)), 1).case_tag == CaseTag::Case1);
    CHECK(classify(GQ(-3), GQ(2), 4).dimension == 1);
    CHECK(classify(GQ(-3), GQ(2), 4).case_tag == CaseTag::Case2);
    CHECK(classify(GQ(-3), GQ(3), 4).dimension == 0);
    CHECK(classify(GQ(0), GQ(0), 1).dimension == 1);
    CHECK(classify(GQ(0), GQ(-1), 1).dimension == 0);
    CHECK(classify(GQ(Rational(1, 2), Rational(1, 3)), GQ(Rational(7, 2), Rational(1, 3)), 1).dimension == 1);
    CHECK(classify(GQ(Rational(1, 2), Rational(1, 3)), GQ(Rational(7, 2), Rational(1, 3)), 2).dimension == 0);
    CHECK(classify(GQ(-2), GQ(Rational(1, 2)), 3).dimension == 0);
    CHECK_THROWS_AS(classify(GQ(0), GQ(0), 0), ZeroMError);

    CHECK(classify(GQ(5), GQ(5), 1).subcase == SubCase::S1I);
    CHECK(classify(GQ(-1), GQ(0), 2).subcase == SubCase::S1II);
    CHECK(classify(GQ(5), GQ(6), 1).subcase == SubCase::S2I);
    CHECK(classify(GQ(-2), GQ(0), 2).subcase == SubCase::S2II);
    CHECK(classify(GQ(5), GQ(9), 1).subcase == SubCase::S3I);
    CHECK(classify(GQ(-4), GQ(1), 3).subcase == SubCase::S3II);

    // invariance under m -> -m across a sample grid
    for (long m = 1; m <= 5; ++m)
        for (long lam = -8; lam <= 2; ++lam)
            for (long a = 0; a <= 6; ++a) {
                GQ lambda(lam), nu(lam + a);
                Classification plus = classify(lambda, nu, m);
                Classification minus = classify(lambda, nu, -m);
                CHECK(plus.dimension == minus.dimension);
                CHECK(plus.case_tag == minus.case_tag);
                CHECK(plus.subcase == minus.subcase);
            }
}

TEST_CASE("constants") {
    CHECK(constants_abc(GQ(-5), GQ(1), 3).A == GQ(-1));  // nu = 1
    CHECK(constants_abc(GQ(-4), GQ(2), 3).C == GQ(-3));
    // B = -2 when a - |m| is odd
    CHECK(constants_abc(GQ(-4), GQ(1), 2).B == GQ(-2));  // a - m = 3
    // A at nu = 0: lambda + floor((-lambda-m)/2)
    CHECK(constants_abc(GQ(-4), GQ(0), 2).A == GQ(-3));
    // A at nu = 2 inverts the base
    CHECK(constants_abc(GQ(-6), GQ(2), 2).A == GQ(-4).inverse());
}

TEST_CASE("closed forms") {
    // a = m-1 always gives (1, 0, 0)
    GeneratorTriple t0 = closed_form_solution(GQ(Rational(9, 7)), 0, 1);
    CHECK(t0.g_lo.body() == UniPoly(GQ(1)));
    CHECK(t0.g_mid.is_zero());
    CHECK(t0.g_hi.is_zero());

    // m = 1, a = 1: middle entry is -i gamma(lambda-1, 1) C~_0 = -i
    GeneratorTriple t1 = closed_form_solution(GQ(Rational(2, 3)), 1, 1);
    CHECK(t1.g_mid.body() == UniPoly(-GQ::i()));
    CHECK(t1.g_hi.is_zero());  // negative-degree polynomial

    // m = 2, a = 2, lambda = -2: top entry via the constants, bottom vanishes
    GeneratorTriple t2 = closed_form_solution(GQ(-2), 2, 2);
    CHECK(t2.g_hi.is_zero());
    CHECK(t2.g_lo.body() == UniPoly::monomial(1, GQ(-24)));
    CHECK(t2.g_mid.body() == UniPoly(GQ(6)));

    CHECK_THROWS_AS(closed_form_solution(GQ(7), 5, 3), NotAdmissibleError);
    CHECK_THROWS_AS(closed_form_solution(GQ(Rational(1, 2)), 4, 2), NotAdmissibleError);
}

TEST_CASE("nullspace") {
    Matrix id3 = {{GQ(1), GQ(0), GQ(0)}, {GQ(0), GQ(1), GQ(0)}, {GQ(0), GQ(0), GQ(1)}};
    CHECK(nullspace(id3).empty());

    Matrix zero23 = {{GQ(0), GQ(0), GQ(0)}, {GQ(0), GQ(0), GQ(0)}};
    auto basis = nullspace(zero23);
    REQUIRE(basis.size() == 3);

    Matrix rank1 = {{GQ(1), GQ::i()}, {-GQ::i(), GQ(1)}};
    auto kernel = nullspace(rank1);
    REQUIRE(kernel.size() == 1);
    for (const auto& row : rank1) {
        GQ dot = row[0] * kernel[0][0] + row[1] * kernel[0][1];
        CHECK(dot.is_zero());
    }
    // proportional to (-i, 1)
    CHECK(kernel[0][0] * GQ(1) == kernel[0][1] * (-GQ::i()));

    // random consistency: M v = 0 for every basis vector, and the count
    // matches cols - rank estimated by re-elimination
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long> val(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
        Matrix mat(rows, std::vector<GQ>(cols));
        for (auto& row : mat)
            for (auto& x : row) x = GQ(Rational(val(rng)), Rational(val(rng)));
        for (const auto& v : nullspace(mat))
            for (const auto& row : mat) {
                GQ dot;
                for (size_t j = 0; j < cols; ++j) dot += row[j] * v[j];
                CHECK(dot.is_zero());
            }
    }
}

TEST_CASE("brute force solution spaces") {
    CHECK(brute_force_xi(GQ(-4), 5, 3).basis.size() == 1);
    CHECK(brute_force_xi(GQ(7), 5, 3).basis.empty());
    CHECK(brute_force_xi(GQ(Rational(2, 3)), 4, 1).basis.size() == 1);
    CHECK(brute_force_xi(GQ(Rational(1, 2), Rational(1, 3)), 3, 1).basis.size() == 1);
    CHECK(brute_force_xi(GQ(-5), 2, 4).basis.empty());  // a < m - 1
}

TEST_CASE("proportionality with the closed form") {
    for (auto [lam, a, m] : {std::tuple<long, long, long>{-4, 5, 3}, {-2, 2, 2}, {0, 4, 1}, {-9, 8, 5}}) {
        XiBasis xi = brute_force_xi(GQ(lam), a, m);
        REQUIRE(xi.basis.size() == 1);
        auto prop = proportionality(xi.basis[0], closed_form_solution(GQ(lam), a, m));
        REQUIRE(prop.has_value());
        CHECK_FALSE(prop->is_zero());
    }
}

TEST_CASE("duality") {
    std::mt19937_64 rng(59);
    // involution on random maps
    for (int trial = 0; trial < 20; ++trial) {
        GeneratorTriple t = verify::random_triple(rng, 3, 5);
        FParams p = FParams::from_a(GQ(2), 5, 3);
        VecTriPoly psi = build_psi(p, t);
        CHECK(duality_phi(duality_phi(psi)) == psi);
    }
    // matches the mirrored coordinates with the middle entry negated
    for (long m : {1L, 2L, 4L}) {
        long a = m + 2;
        GeneratorTriple t = verify::random_triple(rng, m, a);
        FParams p = FParams::from_a(GQ(-1), a, m);
        FParams pm = FParams::from_a(GQ(-1), a, -m);
        GeneratorTriple tm(-m, a, t.g_lo, ParityPoly(t.g_mid.bound(), -t.g_mid.body()), t.g_hi);
        CHECK(duality_phi(build_psi(p, t)) == build_psi(pm, tm));
    }
    // carries solutions for m to solutions for -m
    for (auto [lam, a, m] : {std::tuple<long, long, long>{-4, 5, 3}, {1, 3, 1}, {-6, 6, 2}}) {
        FParams p = FParams::from_a(GQ(lam), a, m);
        VecTriPoly psi = build_psi(p, closed_form_solution(GQ(lam), a, m));
        auto M = m_coeffs(p, duality_phi(psi));
        CHECK(M[0].is_zero());
        CHECK(M[1].is_zero());
        CHECK(M[2].is_zero());
    }
}

TEST_CASE("grid agreement between classification and brute force") {
    // compact version of the full acceptance grid
    for (long m = 1; m <= 4; ++m)
        for (long a = 0; a <= 5; ++a)
            for (const GQ& lambda : {GQ(-6), GQ(-3), GQ(0), GQ(Rational(1, 2))}) {
                Classification cls = classify(lambda, lambda + GQ(Rational(a)), m);
                XiBasis xi = brute_force_xi(lambda, a, m);
                CHECK(static_cast<int>(xi.basis.size()) == cls.dimension);
            }
}

TEST_CASE("fuzzed solution is rejected by the checker") {
    auto r = verify::verify_point(GQ(-4), 5, 3, /*fuzz=*/true);
    CHECK_FALSE(r.ok());
    auto r2 = verify::verify_point(GQ(-4), 5, 3);
    CHECK(r2.ok());
}

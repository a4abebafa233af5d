#include <doctest.h>

#include "sbo/errors.hpp"
#include "sbo/gegenbauer.hpp"
#include "sbo/verify.hpp"

using namespace sbo;

namespace {

UniPoly zmono(long e, const GQ& c) {
    return UniPoly::monomial(e, c);
}

}  // namespace

TEST_CASE("low-degree polynomials match the closed list") {
    // C~_0 = 1, C~_1 = 2z, C~_2 = 2(mu+1)z^2 - 1 etc.
    CHECK(gegenbauer_renorm(GQ(7), 0) == UniPoly(GQ(1)));
    CHECK(gegenbauer_renorm(GQ(5), 1) == zmono(1, GQ(2)));
    CHECK(gegenbauer_renorm(GQ(3), 2) == zmono(2, GQ(8)) + UniPoly(GQ(-1)));
    GQ mu(Rational(1, 2));
    CHECK(gegenbauer_renorm(mu, 3) ==
          zmono(3, GQ(Rational(4, 3)) * (mu + GQ(2))) + zmono(1, GQ(-2)));
    CHECK(gegenbauer_renorm(GQ(-2), 4) == UniPoly(GQ(Rational(1, 2))));  // z-terms vanish
    CHECK(gegenbauer_renorm(GQ(0), 6) ==
          zmono(6, GQ(Rational(4 * 3 * 4 * 5, 45))) + zmono(4, GQ(Rational(-2 * 3 * 4, 3))) +
              zmono(2, GQ(3)) + UniPoly(GQ(Rational(-1, 6))));
    CHECK(gegenbauer_renorm(GQ(4), -1).is_zero());
}

TEST_CASE("imaginary variant") {
    CHECK(gegenbauer_imag(GQ(9), 1) == zmono(1, GQ(2) * GQ::i()));
    GQ mu(Rational(-5, 2));
    CHECK(gegenbauer_imag(mu, 2) ==
          zmono(2, GQ(-2) * (mu + GQ(1))) + UniPoly(GQ(-1)));
    CHECK(gegenbauer_imag(mu, -3).is_zero());
}

TEST_CASE("gamma factor") {
    CHECK(gamma_factor(GQ(Rational(22, 7), Rational(3)), 3) == GQ(1));
    CHECK(gamma_factor(GQ(3), 4) == GQ(5));
    CHECK(gamma_factor(GQ(-2), 4) == GQ(0));
    CHECK_THROWS_AS(gamma_factor(GQ(1), -1), NegativeDegreeError);
}

TEST_CASE("differential operators") {
    GQ mu(1);
    // (1-z^2) 2 - 3z(2z) + 3z^2 on f = z^2
    CHECK(op_G(mu, 1, zmono(2, GQ(1))) == UniPoly(GQ(2)) + zmono(2, GQ(-5)));
    CHECK(op_G(mu, 0, UniPoly(GQ(1))).is_zero());
    CHECK(op_S(mu, 5, UniPoly()).is_zero());
    CHECK(op_G(GQ(Rational(2, 3)), 7, gegenbauer_renorm(GQ(Rational(2, 3)), 7)).is_zero());
    CHECK(op_S(GQ(Rational(2, 3)), 7, gegenbauer_imag(GQ(Rational(2, 3)), 7)).is_zero());
}

TEST_CASE("identity battery") {
    for (const auto& check : verify::appendix_suite(12)) {
        INFO(check.name, " at ", check.detail);
        CHECK(check.ok);
    }
}

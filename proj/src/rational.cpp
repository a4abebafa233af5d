#include "sbo/rational.hpp"

#include <stdexcept>

#include "sbo/errors.hpp"

namespace sbo {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_string(std::string_view s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (c != ' ') t.push_back(c);
    if (t.empty()) throw ParseError("Rational: empty string");
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw ParseError("Rational: cannot parse '" + std::string(s) + "'");
    if (q.get_den() == 0) throw ParseError("Rational: zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(mpq_class(q));
}

long Rational::to_long() const {
    if (!is_integer()) throw std::domain_error("Rational: to_long on non-integer " + str());
    if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rational: to_long overflow");
    return v_.get_num().get_si();
}

}  // namespace sbo

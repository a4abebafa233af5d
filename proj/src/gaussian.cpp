#include "sbo/gaussian.hpp"

#include <cctype>
#include <stdexcept>

#include "sbo/errors.hpp"

namespace sbo {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

GaussianRational pow_int(const GaussianRational& x, long n) {
    if (n < 0) return pow_int(x.inverse(), -n);
    GaussianRational acc(1), base = x;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

GaussianRational i_pow(long k) {
    long r = ((k % 4) + 4) % 4;
    switch (r) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

GaussianRational rising_factorial(const GaussianRational& x, long n) {
    if (n < 0) throw std::domain_error("rising_factorial: n must be >= 0");
    GaussianRational acc(1);
    GaussianRational term = x;
    for (long k = 0; k < n; ++k) {
        acc *= term;
        term += GaussianRational(1);
    }
    return acc;
}

GaussianRational gamma_ratio(const GaussianRational& x, long n) {
    if (n >= 0) return rising_factorial(x, n);
    GaussianRational denom = rising_factorial(x + GaussianRational(n), -n);
    if (denom.is_zero())
        throw PoleError("gamma_ratio: pole at x=" + x.str() + ", n=" + std::to_string(n));
    return denom.inverse();
}

Rational rational_floor(const Rational& x) {
    return x.floor();
}

Rational rational_floor(const GaussianRational& x) {
    if (!x.is_real()) throw NonRealError("rational_floor: nonzero imaginary part in " + x.str());
    return x.re().floor();
}

namespace {

// One signed term of the textual form: number, number*i, numberi, i, i/number.
struct TermParser {
    std::string_view s;
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    std::string read_number() {
        std::string out;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(s[pos++]);
        if (!done() && peek() == '/') {
            out.push_back(s[pos++]);
            if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("GaussianRational: malformed fraction");
            while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(s[pos++]);
        }
        return out;
    }
};

}  // namespace

GaussianRational GaussianRational::from_string(std::string_view s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError("GaussianRational: empty string");

    TermParser p{t};
    GaussianRational total(0);
    bool first = true;
    while (!p.done()) {
        int sign = 1;
        if (p.peek() == '+' || p.peek() == '-') {
            sign = (p.peek() == '-') ? -1 : 1;
            ++p.pos;
        } else if (!first) {
            throw ParseError("GaussianRational: expected sign in '" + std::string(s) + "'");
        }
        first = false;
        if (p.done()) throw ParseError("GaussianRational: dangling sign");

        Rational mag;
        bool imag = false;
        if (p.peek() == 'i') {
            ++p.pos;
            imag = true;
            if (!p.done() && p.peek() == '/') {
                ++p.pos;
                std::string d = p.read_number();
                if (d.empty()) throw ParseError("GaussianRational: malformed i/ term");
                mag = Rational(1) / Rational::from_string(d);
            } else {
                mag = Rational(1);
            }
        } else {
            std::string num = p.read_number();
            if (num.empty()) throw ParseError("GaussianRational: cannot parse '" + std::string(s) + "'");
            mag = Rational::from_string(num);
            if (!p.done() && (p.peek() == '*' || p.peek() == 'i')) {
                if (p.peek() == '*') {
                    ++p.pos;
                    if (p.done() || p.peek() != 'i') throw ParseError("GaussianRational: expected i after *");
                }
                ++p.pos;
                imag = true;
            }
        }
        if (sign < 0) mag = -mag;
        if (imag)
            total += GaussianRational(Rational(0), mag);
        else
            total += GaussianRational(mag);
    }
    return total;
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string istr = im_.str() + "*i";
    if (re_.is_zero()) return istr;
    if (im_.sign() > 0) return re_.str() + "+" + istr;
    return re_.str() + istr;  // im.str() carries the minus sign
}

}  // namespace sbo

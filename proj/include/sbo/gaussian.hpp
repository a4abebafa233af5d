#ifndef SBO_GAUSSIAN_HPP
#define SBO_GAUSSIAN_HPP

#include <string>
#include <string_view>

#include "sbo/rational.hpp"

namespace sbo {

// Element of Q(i), the coefficient field of the whole engine.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
    static GaussianRational from_string(std::string_view s);
    std::string str() const;

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_integer() const { return im_.is_zero() && re_.is_integer(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_, im_;
};

using GQ = GaussianRational;

// x^n for n in Z (negative n via inverse; throws on 0^negative).
GaussianRational pow_int(const GaussianRational& x, long n);

// i^k for k in Z.
GaussianRational i_pow(long k);

// x (x+1) ... (x+n-1); 1 for n = 0. Requires n >= 0.
GaussianRational rising_factorial(const GaussianRational& x, long n);

// Gamma(x+n)/Gamma(x) as a finite product for any sign of n.
// Throws PoleError when n < 0 and a zero factor appears in the denominator.
GaussianRational gamma_ratio(const GaussianRational& x, long n);

// Greatest integer <= x.
Rational rational_floor(const Rational& x);
// Same, via Q(i); throws NonRealError if the imaginary part is nonzero.
Rational rational_floor(const GaussianRational& x);

}  // namespace sbo

#endif

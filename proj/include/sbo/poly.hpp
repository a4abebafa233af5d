#ifndef SBO_POLY_HPP
#define SBO_POLY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include "sbo/gaussian.hpp"

namespace sbo {

// Sparse univariate polynomial over Q(i). No zero coefficients are stored;
// the zero polynomial has empty storage and no degree (nullopt).
class UniPoly {
public:
    using Terms = std::map<long, GQ>;

    UniPoly() = default;
    explicit UniPoly(const GQ& c) { set(0, c); }

    static UniPoly monomial(long exp, const GQ& c);
    static UniPoly variable() { return monomial(1, GQ(1)); }

    bool is_zero() const { return terms_.empty(); }
    std::optional<long> degree() const;
    GQ coeff(long exp) const;
    void set(long exp, const GQ& c);
    const Terms& terms() const { return terms_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const GQ& c, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Substitute x -> i*x (exact; used to pass between the z and t pictures).
    UniPoly scale_arg_i() const;
    GQ evaluate(const GQ& x) const;

    std::string str(const std::string& var = "t") const;

private:
    Terms terms_;
};

UniPoly differentiate_t(const UniPoly& f);
UniPoly euler_t(const UniPoly& f);  // t f'

// Element of the parity space Pol_b[t]_even = span{ t^(b-2j) }. The bound b
// may be negative, in which case only the zero polynomial is admitted.
class ParityPoly {
public:
    explicit ParityPoly(long bound) : bound_(bound) {}
    ParityPoly(long bound, UniPoly body);  // throws ParityError on violation

    long bound() const { return bound_; }
    const UniPoly& body() const { return body_; }
    bool is_zero() const { return body_.is_zero(); }

    friend bool operator==(const ParityPoly& a, const ParityPoly& b) {
        return a.bound_ == b.bound_ && a.body_ == b.body_;
    }
    friend bool operator!=(const ParityPoly& a, const ParityPoly& b) { return !(a == b); }

private:
    long bound_;
    UniPoly body_;
};

// Sparse polynomial in three commuting variables over Q(i). The variables are
// interpreted by context: (zeta1, zeta2, zeta3) symbols, (z, zbar, x3)
// coordinates, or (x1, x2, x3) coordinates.
class TriPoly {
public:
    using Exp = std::array<long, 3>;
    using Terms = std::map<Exp, GQ>;

    TriPoly() = default;
    explicit TriPoly(const GQ& c) { set({0, 0, 0}, c); }

    static TriPoly monomial(const Exp& e, const GQ& c);
    static TriPoly variable(int axis);  // axis in {1,2,3}

    bool is_zero() const { return terms_.empty(); }
    GQ coeff(const Exp& e) const;
    void set(const Exp& e, const GQ& c);
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_homogeneous(long d) const;
    std::optional<long> homogeneous_degree() const;
    std::optional<long> total_degree() const;

    TriPoly operator-() const;
    TriPoly& operator+=(const TriPoly& o);
    TriPoly& operator-=(const TriPoly& o);
    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(const GQ& c, const TriPoly& p);
    friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

    TriPoly pow(long n) const;
    // Substitute variable 2 -> -variable 2.
    TriPoly flip_axis2() const;
    // Drop all terms with a positive exponent on axis 3 (restriction to x3=0).
    TriPoly restrict_axis3() const;
    // Substitute each variable by a polynomial.
    TriPoly substitute(const TriPoly& v1, const TriPoly& v2, const TriPoly& v3) const;

    std::string str(const std::array<std::string, 3>& vars = {"z1", "z2", "z3"}) const;

private:
    Terms terms_;
};

TriPoly differentiate(const TriPoly& p, int axis);
TriPoly euler_operator(const TriPoly& p);  // sum_j zeta_j d/dzeta_j
TriPoly laplacian3(const TriPoly& p);      // sum_j d^2/dzeta_j^2

// Triple of TriPoly; stands for an element of Hom(V^3, Pol) in the basis
// {u1, u2, u3}, a polynomial section of V^3, or a 1-form, by context.
class VecTriPoly {
public:
    VecTriPoly() = default;
    VecTriPoly(TriPoly c1, TriPoly c2, TriPoly c3)
        : comps_{std::move(c1), std::move(c2), std::move(c3)} {}

    const TriPoly& operator[](int s) const { return comps_.at(s - 1); }  // s in {1,2,3}
    TriPoly& operator[](int s) { return comps_.at(s - 1); }

    bool is_zero() const;
    VecTriPoly operator-() const;
    VecTriPoly& operator+=(const VecTriPoly& o);
    VecTriPoly& operator-=(const VecTriPoly& o);
    friend VecTriPoly operator+(VecTriPoly a, const VecTriPoly& b) { return a += b; }
    friend VecTriPoly operator-(VecTriPoly a, const VecTriPoly& b) { return a -= b; }
    friend VecTriPoly operator*(const GQ& c, const VecTriPoly& v);
    friend bool operator==(const VecTriPoly& a, const VecTriPoly& b) { return a.comps_ == b.comps_; }
    friend bool operator!=(const VecTriPoly& a, const VecTriPoly& b) { return !(a == b); }

private:
    std::array<TriPoly, 3> comps_;
};

using PolySection = VecTriPoly;  // components in (z, zbar, x3)
using OneForm3 = VecTriPoly;     // coefficients of f1 dx1 + f2 dx2 + f3 dx3

}  // namespace sbo

#endif

#include "sbo/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "sbo/errors.hpp"

namespace sbo {

UniPoly UniPoly::monomial(long exp, const GQ& c) {
    UniPoly p;
    p.set(exp, c);
    return p;
}

std::optional<long> UniPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

GQ UniPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? GQ(0) : it->second;
}

void UniPoly::set(long exp, const GQ& c) {
    if (exp < 0) throw std::domain_error("UniPoly: negative exponent");
    if (c.is_zero())
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

UniPoly UniPoly::operator-() const {
    UniPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    return *this += -o;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            long e = ea + eb;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                GQ prod = ca * cb;
                if (!prod.is_zero()) out.terms_[e] = prod;
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    return out;
}

UniPoly operator*(const GQ& c, const UniPoly& p) {
    UniPoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, pc] : p.terms_) out.terms_[e] = c * pc;
    return out;
}

UniPoly UniPoly::scale_arg_i() const {
    UniPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = i_pow(e) * c;
    return out;
}

GQ UniPoly::evaluate(const GQ& x) const {
    GQ acc(0);
    for (const auto& [e, c] : terms_) acc += c * pow_int(x, e);
    return acc;
}

std::string UniPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e > 0) os << "*" << var << "^" << e;
    }
    return os.str();
}

UniPoly differentiate_t(const UniPoly& f) {
    UniPoly out;
    for (const auto& [e, c] : f.terms())
        if (e > 0) out.set(e - 1, GQ(Rational(e)) * c);
    return out;
}

UniPoly euler_t(const UniPoly& f) {
    UniPoly out;
    for (const auto& [e, c] : f.terms())
        if (e > 0) out.set(e, GQ(Rational(e)) * c);
    return out;
}

ParityPoly::ParityPoly(long bound, UniPoly body) : bound_(bound), body_(std::move(body)) {
    if (bound_ < 0 && !body_.is_zero())
        throw ParityError("ParityPoly: nonzero polynomial with negative bound " + std::to_string(bound_));
    for (const auto& [e, c] : body_.terms()) {
        (void)c;
        if (e > bound_ || ((bound_ - e) % 2) != 0)
            throw ParityError("ParityPoly: exponent " + std::to_string(e) +
                              " violates parity space with bound " + std::to_string(bound_));
    }
}

TriPoly TriPoly::monomial(const Exp& e, const GQ& c) {
    TriPoly p;
    p.set(e, c);
    return p;
}

TriPoly TriPoly::variable(int axis) {
    Exp e{0, 0, 0};
    e.at(axis - 1) = 1;
    return monomial(e, GQ(1));
}

GQ TriPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GQ(0) : it->second;
}

void TriPoly::set(const Exp& e, const GQ& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::domain_error("TriPoly: negative exponent");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

bool TriPoly::is_homogeneous(long d) const {
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (e[0] + e[1] + e[2] != d) return false;
    }
    return true;
}

std::optional<long> TriPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    long d = terms_.begin()->first[0] + terms_.begin()->first[1] + terms_.begin()->first[2];
    return is_homogeneous(d) ? std::optional<long>(d) : std::nullopt;
}

std::optional<long> TriPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    long d = 0;
    for (const auto& [e, c] : terms_) {
        (void)c;
        d = std::max(d, e[0] + e[1] + e[2]);
    }
    return d;
}

TriPoly TriPoly::operator-() const {
    TriPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
    return *this += -o;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            TriPoly::Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                GQ prod = ca * cb;
                if (!prod.is_zero()) out.terms_[e] = prod;
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    return out;
}

TriPoly operator*(const GQ& c, const TriPoly& p) {
    TriPoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, pc] : p.terms_) out.terms_[e] = c * pc;
    return out;
}

TriPoly TriPoly::pow(long n) const {
    if (n < 0) throw std::domain_error("TriPoly: negative power");
    TriPoly acc(GQ(1));
    TriPoly base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

TriPoly TriPoly::flip_axis2() const {
    TriPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = (e[1] % 2 != 0) ? -c : c;
    return out;
}

TriPoly TriPoly::restrict_axis3() const {
    TriPoly out;
    for (const auto& [e, c] : terms_)
        if (e[2] == 0) out.terms_[e] = c;
    return out;
}

TriPoly TriPoly::substitute(const TriPoly& v1, const TriPoly& v2, const TriPoly& v3) const {
    TriPoly out;
    for (const auto& [e, c] : terms_) {
        TriPoly term = TriPoly(c) * v1.pow(e[0]) * v2.pow(e[1]) * v3.pow(e[2]);
        out += term;
    }
    return out;
}

std::string TriPoly::str(const std::array<std::string, 3>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int j = 0; j < 3; ++j) {
            if (e[j] > 0) {
                os << "*" << vars[j];
                if (e[j] > 1) os << "^" << e[j];
            }
        }
    }
    return os.str();
}

TriPoly differentiate(const TriPoly& p, int axis) {
    if (axis < 1 || axis > 3) throw std::domain_error("differentiate: axis must be 1, 2 or 3");
    TriPoly out;
    for (const auto& [e, c] : p.terms()) {
        long k = e[axis - 1];
        if (k > 0) {
            TriPoly::Exp ne = e;
            ne[axis - 1] = k - 1;
            out.set(ne, GQ(Rational(k)) * c);
        }
    }
    return out;
}

TriPoly euler_operator(const TriPoly& p) {
    TriPoly out;
    for (const auto& [e, c] : p.terms()) {
        long d = e[0] + e[1] + e[2];
        if (d != 0) out.set(e, GQ(Rational(d)) * c);
    }
    return out;
}

TriPoly laplacian3(const TriPoly& p) {
    TriPoly out;
    for (int axis = 1; axis <= 3; ++axis) out += differentiate(differentiate(p, axis), axis);
    return out;
}

bool VecTriPoly::is_zero() const {
    return comps_[0].is_zero() && comps_[1].is_zero() && comps_[2].is_zero();
}

VecTriPoly VecTriPoly::operator-() const {
    return {-comps_[0], -comps_[1], -comps_[2]};
}

VecTriPoly& VecTriPoly::operator+=(const VecTriPoly& o) {
    for (int j = 0; j < 3; ++j) comps_[j] += o.comps_[j];
    return *this;
}

VecTriPoly& VecTriPoly::operator-=(const VecTriPoly& o) {
    for (int j = 0; j < 3; ++j) comps_[j] -= o.comps_[j];
    return *this;
}

VecTriPoly operator*(const GQ& c, const VecTriPoly& v) {
    return {c * v[1], c * v[2], c * v[3]};
}

}  // namespace sbo

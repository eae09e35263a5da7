#include "mlcech/exact/rational_function.hpp"

#include "mlcech/error.hpp"

#include <algorithm>

namespace mlcech {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw MathError("rational function with zero denominator");
    }
    normalize();
}

RationalFunction RationalFunction::pole_power(const GaussRational& a, long k) {
    if (k < 0) {
        return RationalFunction(Poly::linear_root(a).pow(-k));
    }
    return RationalFunction(Poly(GaussRational(1)), Poly::linear_root(a).pow(k));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(GaussRational(1));
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    const GaussRational lead = den_.leading();
    if (!(lead == GaussRational(1))) {
        const GaussRational inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

GaussRational RationalFunction::eval(const GaussRational& t) const {
    GaussRational d = den_.eval(t);
    if (d.is_zero()) {
        throw MathError("evaluation of a rational function at a pole");
    }
    return num_.eval(t) / d;
}

RationalFunction RationalFunction::invert_variable() const {
    if (num_.is_zero()) {
        return {};
    }
    // f(1/t) = t^{deg den - deg num} * rev(num) / rev(den)
    const long dn = num_.degree();
    const long dd = den_.degree();
    Poly rn = num_.reversed(dn);
    Poly rd = den_.reversed(dd);
    if (dd >= dn) {
        rn *= Poly::monomial(dd - dn);
    } else {
        rd *= Poly::monomial(dn - dd);
    }
    return RationalFunction(std::move(rn), std::move(rd));
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) {
        if (is_zero()) {
            throw MathError("negative power of the zero function");
        }
        return RationalFunction(den_.pow(-e), num_.pow(-e));
    }
    return RationalFunction(num_.pow(e), den_.pow(e));
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        *this = RationalFunction(num_ + o.num_, den_);
    } else {
        *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    // Cross-cancel first to keep intermediate degrees small.
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly a = g1.degree() > 0 ? divide_exact(num_, g1) : num_;
    Poly d2 = g1.degree() > 0 ? divide_exact(o.den_, g1) : o.den_;
    Poly b = g2.degree() > 0 ? divide_exact(o.num_, g2) : o.num_;
    Poly d1 = g2.degree() > 0 ? divide_exact(den_, g2) : den_;
    *this = RationalFunction(a * b, d1 * d2);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) {
        throw MathError("division by the zero function");
    }
    return *this *= RationalFunction(o.den_, o.num_);
}

std::string to_string(const RationalFunction& f, const char* var) {
    if (f.is_polynomial()) {
        return to_string(f.num(), var);
    }
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

} // namespace mlcech

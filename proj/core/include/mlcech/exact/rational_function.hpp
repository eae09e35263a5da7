#pragma once

#include "mlcech/exact/poly.hpp"

#include <string>

namespace mlcech {

/// num/den over Q(i), kept reduced with a monic denominator so that equality
/// of functions is equality of representations.
class RationalFunction {
public:
    RationalFunction() : den_(GaussRational(1)) {}
    RationalFunction(const GaussRational& c) : num_(c), den_(GaussRational(1)) {}  // NOLINT
    RationalFunction(Poly p) : num_(std::move(p)), den_(GaussRational(1)) {}        // NOLINT
    RationalFunction(Poly num, Poly den);

    /// The coordinate function t.
    static RationalFunction variable() { return RationalFunction(Poly::monomial(1)); }
    /// (t - a)^{-k} for k >= 0.
    static RationalFunction pole_power(const GaussRational& a, long k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Value at a finite point; throws MathError at a pole.
    GaussRational eval(const GaussRational& t) const;
    /// f(1/t), the same function written in the chart s = 1/t.
    RationalFunction invert_variable() const;
    RationalFunction pow(long e) const;
    RationalFunction derivative() const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();
    Poly num_;
    Poly den_;
};

std::string to_string(const RationalFunction& f, const char* var = "t");

} // namespace mlcech

#pragma once

#include "mlcech/exact/gauss_rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace mlcech {

/// Univariate polynomial over Q(i), coefficients stored lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
class Poly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr long kZeroDegree = -1;

    Poly() = default;
    explicit Poly(std::vector<GaussRational> coeffs);
    Poly(std::initializer_list<GaussRational> coeffs);
    Poly(const GaussRational& c);  // NOLINT(google-explicit-constructor)

    static Poly monomial(long degree, GaussRational c = GaussRational(1));
    /// t - a
    static Poly linear_root(const GaussRational& a);
    /// prod (t - a_k)
    static Poly from_roots(const std::vector<GaussRational>& roots);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<GaussRational>& coeffs() const { return coeffs_; }
    /// Coefficient of t^k; zero outside the stored range.
    GaussRational coeff(long k) const;
    GaussRational leading() const;

    GaussRational eval(const GaussRational& t) const;
    Poly derivative() const;
    /// p(t + a)
    Poly shift(const GaussRational& a) const;
    /// t^n p(1/t); requires n >= degree().
    Poly reversed(long n) const;
    Poly monic() const;
    Poly scaled(const GaussRational& c) const;
    Poly pow(long e) const;

    /// Largest m with (t - a)^m dividing p. The zero polynomial throws.
    long multiplicity(const GaussRational& a) const;
    /// Lowest index with nonzero coefficient; throws for zero.
    long valuation() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<GaussRational> coeffs_;
};

/// Euclidean division; throws MathError for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b, throwing MathError if the remainder is nonzero.
Poly divide_exact(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
/// Yun square-free decomposition of a nonconstant polynomial: returns
/// factors f_1, f_2, ... with p = lc * prod f_k^k and each f_k square-free.
std::vector<Poly> squarefree_decomposition(const Poly& p);

std::string to_string(const Poly& p, const char* var = "t");

} // namespace mlcech

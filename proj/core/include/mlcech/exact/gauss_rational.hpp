#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace mlcech {

using Rational = mpq_class;

/// Element of Q(i) with arbitrary-precision rational parts.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v) {}                   // NOLINT(google-explicit-constructor)
    GaussRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    /// |z|^2, exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussRational conj() const { return {re_, -im_}; }
    GaussRational inverse() const;
    GaussRational pow(long e) const;

    /// Parts rounded to the nearest double.
    std::complex<double> to_complex() const;

    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    GaussRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// Lexicographic on (re, im); only used to key ordered containers.
    friend std::strong_ordering operator<=>(const GaussRational& a, const GaussRational& b);

private:
    Rational re_{0};
    Rational im_{0};
};

/// Canonical text form: "0", "-3/2", "i", "1/2-3/4i", ...
std::string to_string(const GaussRational& z);
std::string to_string(const Rational& q);

/// Nearest double (mpq_get_d truncates toward zero).
double to_double(const Rational& q);

/// Inverse of to_string; also accepts decimals ("0.25") and spaces.
/// Throws SchemaError on malformed input.
GaussRational parse_gauss_rational(std::string_view text);
Rational parse_rational(std::string_view text);

std::size_t hash_value(const GaussRational& z);

} // namespace mlcech

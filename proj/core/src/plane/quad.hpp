#pragma once

// Binary128 complex arithmetic for ill-conditioned sums (GCC/Clang builtin type).

#include "mlcech/plane/domain.hpp"

#include <vector>

namespace mlcech::plane::detail {

__extension__ typedef __float128 quad;

struct QComplex {
    quad re = 0;
    quad im = 0;

    QComplex() = default;
    QComplex(quad r, quad i = 0) : re(r), im(i) {}
    explicit QComplex(Complex z) : re(z.real()), im(z.imag()) {}

    Complex to_complex() const { return {static_cast<double>(re), static_cast<double>(im)}; }

    friend QComplex operator+(QComplex a, QComplex b) { return {a.re + b.re, a.im + b.im}; }
    friend QComplex operator-(QComplex a, QComplex b) { return {a.re - b.re, a.im - b.im}; }
    friend QComplex operator*(QComplex a, QComplex b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QComplex operator/(QComplex a, QComplex b) {
        const quad n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    QComplex& operator+=(QComplex b) { return *this = *this + b; }
    QComplex& operator-=(QComplex b) { return *this = *this - b; }
    QComplex& operator*=(QComplex b) { return *this = *this * b; }
};

inline QComplex horner(const std::vector<Complex>& c, QComplex x) {
    QComplex acc;
    for (std::size_t m = c.size(); m-- > 0;) {
        acc = acc * x + QComplex(c[m]);
    }
    return acc;
}

/// exp(2 pi i k / n) for k = 0..n-1.
inline std::vector<QComplex> roots_of_unity(int n) {
    // pi as a double-double, then Taylor series for the primitive root.
    const quad pi = static_cast<quad>(3.141592653589793) + static_cast<quad>(1.2246467991473532e-16);
    const quad x = 2 * pi / n;
    quad c = 0;
    quad s = 0;
    quad term = 1;
    for (int k = 0; k < 40; ++k) {
        if (k > 0) {
            term = term * x / k;
        }
        switch (k % 4) {
        case 0: c += term; break;
        case 1: s += term; break;
        case 2: c -= term; break;
        default: s -= term; break;
        }
    }
    std::vector<QComplex> out(static_cast<std::size_t>(n));
    const QComplex w(c, s);
    // Powers by squaring keep the rounding error logarithmic in k.
    for (int k = 0; k < n; ++k) {
        QComplex acc(1);
        QComplex base = w;
        for (int e = k; e > 0; e >>= 1) {
            if (e & 1) {
                acc *= base;
            }
            base *= base;
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

} // namespace mlcech::plane::detail

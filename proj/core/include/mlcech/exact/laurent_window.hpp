#pragma once

#include "mlcech/exact/gauss_rational.hpp"
#include "mlcech/exact/rational_function.hpp"

#include <vector>

namespace mlcech {

/// A Laurent polynomial confined to the exponent range [lo, hi].
///
/// This is the finite-dimensional stand-in for C[t, 1/t] used by the Cech
/// computations. Arithmetic is exact; any result with a nonzero coefficient
/// outside the target window raises WindowOverflow instead of being cut off.
class LaurentWindow {
public:
    LaurentWindow(long lo, long hi);
    LaurentWindow(long lo, std::vector<GaussRational> coeffs);

    /// Embeds a Laurent polynomial c * t^k * p(t) into [lo, hi]. Throws
    /// MathError if f has a pole away from 0, WindowOverflow if it does not fit.
    static LaurentWindow from_function(const RationalFunction& f, long lo, long hi);

    long lo() const { return lo_; }
    long hi() const { return hi_; }
    long size() const { return hi_ - lo_ + 1; }

    /// Coefficient of t^n; std::out_of_range outside the window.
    const GaussRational& coeff(long n) const;
    void set(long n, GaussRational c);
    const std::vector<GaussRational>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    /// Same window required for +/-; a differing window is a logic error.
    LaurentWindow& operator+=(const LaurentWindow& o);
    LaurentWindow& operator-=(const LaurentWindow& o);
    friend LaurentWindow operator+(LaurentWindow a, const LaurentWindow& b) { return a += b; }
    friend LaurentWindow operator-(LaurentWindow a, const LaurentWindow& b) { return a -= b; }
    LaurentWindow scaled(const GaussRational& c) const;
    /// Multiplication by t^k inside the same window.
    LaurentWindow shifted(long k) const;
    /// Re-homes the same Laurent polynomial into [lo, hi].
    LaurentWindow rewindowed(long lo, long hi) const;

    friend bool operator==(const LaurentWindow& a, const LaurentWindow& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.coeffs_ == b.coeffs_;
    }

private:
    long lo_;
    long hi_;
    std::vector<GaussRational> coeffs_;
};

/// Exact product placed in [lo, hi]; WindowOverflow when a term falls outside.
LaurentWindow multiply(const LaurentWindow& a, const LaurentWindow& b, long lo, long hi);

} // namespace mlcech

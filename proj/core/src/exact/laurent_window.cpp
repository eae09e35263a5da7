#include "mlcech/exact/laurent_window.hpp"

#include "mlcech/error.hpp"

#include <stdexcept>
#include <string>

namespace mlcech {

namespace {

[[noreturn]] void overflow(long n, long lo, long hi) {
    throw WindowOverflow("Laurent term t^" + std::to_string(n) + " outside window [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
}

} // namespace

LaurentWindow::LaurentWindow(long lo, long hi) : lo_(lo), hi_(hi) {
    if (hi < lo) {
        throw MathError("Laurent window bounds inverted");
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
}

LaurentWindow::LaurentWindow(long lo, std::vector<GaussRational> coeffs)
    : lo_(lo), hi_(lo + static_cast<long>(coeffs.size()) - 1), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw MathError("empty Laurent window");
    }
}

LaurentWindow LaurentWindow::from_function(const RationalFunction& f, long lo, long hi) {
    LaurentWindow w(lo, hi);
    if (f.is_zero()) {
        return w;
    }
    const Poly& den = f.den();
    const long k = den.valuation();
    if (den.degree() != k) {
        throw MathError("not a Laurent polynomial: pole away from 0");
    }
    // den = t^k (monic), so f = t^{-k} num.
    const auto& c = f.num().coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero()) {
            continue;
        }
        const long n = static_cast<long>(j) - k;
        if (n < lo || n > hi) {
            overflow(n, lo, hi);
        }
        w.coeffs_[static_cast<std::size_t>(n - lo)] = c[j];
    }
    return w;
}

const GaussRational& LaurentWindow::coeff(long n) const {
    if (n < lo_ || n > hi_) {
        throw std::out_of_range("Laurent index outside window");
    }
    return coeffs_[static_cast<std::size_t>(n - lo_)];
}

void LaurentWindow::set(long n, GaussRational c) {
    if (n < lo_ || n > hi_) {
        if (c.is_zero()) {
            return;
        }
        overflow(n, lo_, hi_);
    }
    coeffs_[static_cast<std::size_t>(n - lo_)] = std::move(c);
}

bool LaurentWindow::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

LaurentWindow& LaurentWindow::operator+=(const LaurentWindow& o) {
    if (o.lo_ != lo_ || o.hi_ != hi_) {
        throw std::invalid_argument("adding Laurent windows with different ranges");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    return *this;
}

LaurentWindow& LaurentWindow::operator-=(const LaurentWindow& o) {
    if (o.lo_ != lo_ || o.hi_ != hi_) {
        throw std::invalid_argument("subtracting Laurent windows with different ranges");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
}

LaurentWindow LaurentWindow::scaled(const GaussRational& c) const {
    LaurentWindow w = *this;
    for (auto& x : w.coeffs_) {
        x *= c;
    }
    return w;
}

LaurentWindow LaurentWindow::shifted(long k) const {
    LaurentWindow w(lo_, hi_);
    for (long n = lo_; n <= hi_; ++n) {
        w.set(n + k, coeff(n));
    }
    return w;
}

LaurentWindow LaurentWindow::rewindowed(long lo, long hi) const {
    LaurentWindow w(lo, hi);
    for (long n = lo_; n <= hi_; ++n) {
        w.set(n, coeff(n));
    }
    return w;
}

LaurentWindow multiply(const LaurentWindow& a, const LaurentWindow& b, long lo, long hi) {
    LaurentWindow w(lo, hi);
    std::vector<GaussRational> acc(static_cast<std::size_t>(a.size() + b.size() - 1));
    for (long i = a.lo(); i <= a.hi(); ++i) {
        const auto& x = a.coeff(i);
        if (x.is_zero()) {
            continue;
        }
        for (long j = b.lo(); j <= b.hi(); ++j) {
            acc[static_cast<std::size_t>(i - a.lo() + j - b.lo())] += x * b.coeff(j);
        }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) {
        w.set(a.lo() + b.lo() + static_cast<long>(k), acc[k]);
    }
    return w;
}

} // namespace mlcech

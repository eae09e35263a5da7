#include "mlcech/exact/expansion.hpp"

#include "mlcech/error.hpp"

#include <algorithm>
#include <set>

namespace mlcech {

namespace {

/// Laurent expansion at 0 of num/den.
LaurentWindow expand_at_zero(const Poly& num, const Poly& den, long lo, long hi) {
    LaurentWindow w(lo, hi);
    const long vn = num.valuation();
    const long vd = den.valuation();
    const long ord = vn - vd;
    if (hi < ord) {
        return w;
    }
    // num/den = t^ord * N(t)/D(t) with D(0) != 0; power series of N/D.
    const auto& nc = num.coeffs();
    const auto& dc = den.coeffs();
    const long terms = hi - ord + 1;
    const GaussRational inv_d0 = dc[static_cast<std::size_t>(vd)].inverse();
    std::vector<GaussRational> q(static_cast<std::size_t>(terms));
    for (long k = 0; k < terms; ++k) {
        GaussRational acc;
        const long ni = vn + k;
        if (ni < static_cast<long>(nc.size())) {
            acc = nc[static_cast<std::size_t>(ni)];
        }
        const long dmax = std::min<long>(k, static_cast<long>(dc.size()) - 1 - vd);
        for (long i = 1; i <= dmax; ++i) {
            const auto& d = dc[static_cast<std::size_t>(vd + i)];
            if (!d.is_zero()) {
                acc -= d * q[static_cast<std::size_t>(k - i)];
            }
        }
        q[static_cast<std::size_t>(k)] = acc * inv_d0;
    }
    for (long n = std::max(lo, ord); n <= hi; ++n) {
        w.set(n, q[static_cast<std::size_t>(n - ord)]);
    }
    return w;
}

} // namespace

LaurentWindow laurent_expand(const RationalFunction& f, const Point& a, long lo, long hi) {
    if (hi < lo) {
        throw MathError("Laurent window bounds inverted");
    }
    if (f.is_zero()) {
        throw MathError("Laurent expansion of the zero function (order undefined)");
    }
    if (a.is_infinity()) {
        RationalFunction g = f.invert_variable();
        return expand_at_zero(g.num(), g.den(), lo, hi);
    }
    return expand_at_zero(f.num().shift(a.value()), f.den().shift(a.value()), lo, hi);
}

long order_at(const RationalFunction& f, const Point& a) {
    if (f.is_zero()) {
        throw MathError("order of the zero function");
    }
    if (a.is_infinity()) {
        return f.den().degree() - f.num().degree();
    }
    return f.num().multiplicity(a.value()) - f.den().multiplicity(a.value());
}

GaussRational residue_at(const RationalFunction& f, const Point& a) {
    if (f.is_zero()) {
        throw MathError("residue of the zero function");
    }
    if (a.is_infinity()) {
        // f(1/s) * (-s^{-2}) ds: the s^{-1} coefficient is -c_1 of f(1/s).
        return -laurent_expand(f, a, 1, 1).coeff(1);
    }
    if (order_at(f, a) >= 0) {
        return {};
    }
    return laurent_expand(f, a, -1, -1).coeff(-1);
}

PartialFractions partial_fractions(const RationalFunction& f, const std::vector<GaussRational>& roots) {
    PartialFractions out;
    auto [quot, rem] = divmod(f.num(), f.den());
    out.polynomial = quot;
    if (f.den().degree() == 0 || f.is_zero()) {
        return out;
    }
    Poly remaining = f.den();
    std::set<GaussRational> seen;
    for (const auto& a : roots) {
        if (!seen.insert(a).second) {
            continue;
        }
        const long m = remaining.multiplicity(a);
        if (m == 0) {
            continue;
        }
        remaining = divide_exact(remaining, Poly::linear_root(a).pow(m));
        LaurentWindow w = laurent_expand(f, Point(a), -m, -1);
        std::map<long, GaussRational> coeffs;
        for (long j = 1; j <= m; ++j) {
            coeffs.emplace(j, w.coeff(-j));
        }
        out.parts.emplace_back(Point(a), std::move(coeffs));
    }
    if (remaining.degree() > 0) {
        throw MathError("roots insufficient: denominator factor " + to_string(remaining) + " remains");
    }
    return out;
}

RationalFunction reassemble(const PartialFractions& pf) {
    RationalFunction f(pf.polynomial);
    for (const auto& part : pf.parts) {
        f += part.to_function();
    }
    return f;
}

std::vector<std::pair<GaussRational, long>> split_roots(const Poly& p, const std::vector<GaussRational>& candidates) {
    std::vector<std::pair<GaussRational, long>> out;
    if (p.is_zero()) {
        throw MathError("roots of the zero polynomial");
    }
    Poly remaining = p;
    std::set<GaussRational> seen;
    for (const auto& a : candidates) {
        if (remaining.degree() < 1) {
            break;
        }
        if (!seen.insert(a).second) {
            continue;
        }
        const long m = remaining.multiplicity(a);
        if (m > 0) {
            remaining = divide_exact(remaining, Poly::linear_root(a).pow(m));
            out.emplace_back(a, m);
        }
    }
    if (remaining.degree() >= 1) {
        auto factors = squarefree_decomposition(remaining);
        for (std::size_t k = 0; k < factors.size(); ++k) {
            const Poly& fk = factors[k];
            if (fk.degree() == 0) {
                continue;
            }
            if (fk.degree() > 1) {
                throw MathError("irreducible factor of degree > 1 over Q(i) with no supplied root: " + to_string(fk));
            }
            const GaussRational root = -fk.coeff(0) / fk.coeff(1);
            out.emplace_back(root, static_cast<long>(k) + 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Divisor divisor_of(const RationalFunction& f, const std::vector<GaussRational>& roots) {
    if (f.is_zero()) {
        throw MathError("divisor of the zero function");
    }
    Divisor d;
    for (const auto& [a, m] : split_roots(f.num(), roots)) {
        d.add(Point(a), m);
    }
    for (const auto& [a, m] : split_roots(f.den(), roots)) {
        d.add(Point(a), -m);
    }
    d.add(Point::infinity(), f.den().degree() - f.num().degree());
    return d;
}

} // namespace mlcech

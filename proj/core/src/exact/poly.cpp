#include "mlcech/exact/poly.hpp"

#include "mlcech/error.hpp"

#include <algorithm>

namespace mlcech {

Poly::Poly(std::vector<GaussRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<GaussRational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(const GaussRational& c) {
    if (!c.is_zero()) {
        coeffs_.push_back(c);
    }
}

Poly Poly::monomial(long degree, GaussRational c) {
    if (c.is_zero()) {
        return {};
    }
    std::vector<GaussRational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
}

Poly Poly::linear_root(const GaussRational& a) { return Poly{-a, GaussRational(1)}; }

Poly Poly::from_roots(const std::vector<GaussRational>& roots) {
    Poly p(GaussRational(1));
    for (const auto& r : roots) {
        p *= linear_root(r);
    }
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

GaussRational Poly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) {
        return {};
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

GaussRational Poly::leading() const { return coeffs_.empty() ? GaussRational() : coeffs_.back(); }

GaussRational Poly::eval(const GaussRational& t) const {
    GaussRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<GaussRational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * GaussRational(static_cast<long>(k));
    }
    return Poly(std::move(d));
}

Poly Poly::shift(const GaussRational& a) const {
    if (a.is_zero() || coeffs_.size() <= 1) {
        return *this;
    }
    // Repeated synthetic division (Taylor shift), O(n^2).
    std::vector<GaussRational> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = n - 1; j > k; --j) {
            c[j - 1] += a * c[j];
        }
    }
    return Poly(std::move(c));
}

Poly Poly::reversed(long n) const {
    if (n < degree()) {
        throw MathError("Poly::reversed: n below degree");
    }
    std::vector<GaussRational> r(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        r[static_cast<std::size_t>(n) - k] = coeffs_[k];
    }
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) {
        return {};
    }
    return scaled(leading().inverse());
}

Poly Poly::scaled(const GaussRational& c) const {
    if (c.is_zero()) {
        return {};
    }
    std::vector<GaussRational> v = coeffs_;
    for (auto& x : v) {
        x *= c;
    }
    return Poly(std::move(v));
}

Poly Poly::pow(long e) const {
    if (e < 0) {
        throw MathError("Poly::pow: negative exponent");
    }
    Poly result(GaussRational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

long Poly::multiplicity(const GaussRational& a) const {
    if (is_zero()) {
        throw MathError("multiplicity of a root in the zero polynomial");
    }
    long m = 0;
    std::vector<GaussRational> c = coeffs_;
    while (c.size() > 1) {
        // Synthetic division by (t - a); remainder ends up in q[0].
        std::vector<GaussRational> q(c.size() - 1);
        GaussRational carry;
        for (std::size_t j = c.size(); j-- > 0;) {
            carry = carry * a + c[j];
            if (j > 0) {
                q[j - 1] = carry;
            }
        }
        if (!carry.is_zero()) {
            break;
        }
        c = std::move(q);
        ++m;
    }
    return m;
}

long Poly::valuation() const {
    if (is_zero()) {
        throw MathError("valuation of the zero polynomial");
    }
    long k = 0;
    while (coeffs_[static_cast<std::size_t>(k)].is_zero()) {
        ++k;
    }
    return k;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<GaussRational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a].is_zero()) {
            continue;
        }
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b) {
            r[a + b] += coeffs_[a] * o.coeffs_[b];
        }
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

Poly Poly::operator-() const {
    std::vector<GaussRational> v = coeffs_;
    for (auto& x : v) {
        x = -x;
    }
    return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) {
        throw MathError("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {Poly(), a};
    }
    std::vector<GaussRational> r = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    std::vector<GaussRational> q(r.size() - db);
    const GaussRational inv_lead = d.back().inverse();
    for (std::size_t k = q.size(); k-- > 0;) {
        GaussRational c = r[k + db] * inv_lead;
        if (!c.is_zero()) {
            for (std::size_t j = 0; j <= db; ++j) {
                r[k + j] -= c * d[j];
            }
        }
        q[k] = std::move(c);
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly divide_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw MathError("inexact polynomial division");
    }
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
    if (p.degree() < 1) {
        throw MathError("square-free decomposition of a constant");
    }
    std::vector<Poly> out;
    Poly dp = p.derivative();
    Poly a = gcd(p, dp);
    Poly b = divide_exact(p, a).monic();
    Poly c = divide_exact(dp, a);
    c = c.scaled(p.leading().inverse());
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly f = gcd(b, d);
        out.push_back(f);
        Poly nb = divide_exact(b, f);
        Poly nc = divide_exact(d, f);
        b = std::move(nb);
        d = nc - b.derivative();
    }
    return out;
}

std::string to_string(const Poly& p, const char* var) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const GaussRational c = p.coeff(k);
        if (c.is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        const bool unit = c == GaussRational(1);
        if (k == 0 || !unit) {
            out += c.is_real() || k == 0 ? to_string(c) : "(" + to_string(c) + ")";
        }
        if (k > 0) {
            out += var;
            if (k > 1) {
                out += "^" + std::to_string(k);
            }
        }
    }
    return out;
}

} // namespace mlcech

#include "mlcech/plane/pole_push.hpp"

#include "mlcech/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mlcech::plane {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log sum_m |c_m| y^m for coefficients of y^1..y^M.
double log_abs_poly(const std::vector<double>& log_abs, double log_y) {
    double best = kNegInf;
    for (std::size_t m = 0; m < log_abs.size(); ++m) {
        best = std::max(best, log_abs[m] + static_cast<double>(m + 1) * log_y);
    }
    if (best == kNegInf) {
        return best;
    }
    double sum = 0;
    for (std::size_t m = 0; m < log_abs.size(); ++m) {
        sum += std::exp(log_abs[m] + static_cast<double>(m + 1) * log_y - best);
    }
    return best + std::log(sum);
}

/// Bound on sum_{n > L} |e_n| where sum e_n x^n = P(kappa x^shift / (1 - r x)):
/// min over 1 < x < 1/r of P_abs(kappa x^shift / (1 - r x)) / x^{L + 1}.
double log_tail(const std::vector<double>& log_abs, double kappa, double r, int shift, long terms) {
    const double log_xmax = r > 0 ? -std::log(r) : 50.0;
    double best = std::numeric_limits<double>::infinity();
    constexpr int kGrid = 160;
    for (int k = 1; k < kGrid; ++k) {
        const double lx = log_xmax * k / kGrid;
        const double x = std::exp(lx);
        const double denom = 1 - r * x;
        if (denom <= 0) {
            continue;
        }
        const double log_y = std::log(kappa) + shift * lx - std::log(denom);
        best = std::min(best, log_abs_poly(log_abs, log_y) - static_cast<double>(terms + 1) * lx);
    }
    return best;
}

std::vector<double> log_abs_coeffs(const std::vector<Complex>& c) {
    std::vector<double> out;
    out.reserve(c.size());
    for (const auto& x : c) {
        const double a = std::abs(x);
        out.push_back(a > 0 ? std::log(a) : kNegInf);
    }
    return out;
}

/// Smallest L with majorant tail(L) <= budget.
long majorant_terms(const std::vector<double>& log_abs, double kappa, double r, int shift, double budget, long max_terms) {
    const double target = std::log(budget);
    long hi = 1;
    while (log_tail(log_abs, kappa, r, shift, hi) > target) {
        if (hi >= max_terms) {
            throw MathError("pole push budget unreachable within the term cap");
        }
        hi = std::min(max_terms, hi * 2);
    }
    long lo = hi / 2;
    while (lo + 1 < hi) {
        const long mid = (lo + hi) / 2;
        if (log_tail(log_abs, kappa, r, shift, mid) <= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

/// y <- y * kappa w^shift / (1 - r w), truncated to indices 0..len-1.
void multiply_by_map(std::vector<Complex>& y, Complex kappa, Complex r, int shift) {
    const std::size_t len = y.size();
    if (shift == 1) {
        for (std::size_t k = len; k-- > 1;) {
            y[k] = kappa * y[k - 1];
        }
        y[0] = 0;
    } else {
        for (auto& v : y) {
            v *= kappa;
        }
    }
    for (std::size_t k = 1; k < len; ++k) {
        y[k] += r * y[k - 1];
    }
}

/// Coefficients of sum_m c_m X^m, X = kappa w^shift / (1 - r w), in w^0..w^L.
std::vector<Complex> compose(const std::vector<Complex>& c, Complex kappa, Complex r, int shift, long terms) {
    std::vector<Complex> s(static_cast<std::size_t>(terms + 1), Complex(0));
    for (std::size_t m = c.size(); m-- > 0;) {
        s[0] += c[m];
        multiply_by_map(s, kappa, r, shift);
    }
    return s;
}

struct Truncation {
    std::vector<Complex> series;  ///< w^0..w^L
    double tail = 0;
};

/// Composes and truncates: the majorant bounds the coefficients beyond L_maj,
/// the computed coefficients between L and L_maj are summed directly.
Truncation compose_truncated(const std::vector<Complex>& c, Complex kappa, Complex r, int shift, double budget,
                             long max_terms) {
    const auto log_abs = log_abs_coeffs(c);
    const long l_maj = majorant_terms(log_abs, std::abs(kappa), std::abs(r), shift, budget / 2, max_terms);
    const double far = std::exp(log_tail(log_abs, std::abs(kappa), std::abs(r), shift, l_maj));
    auto s = compose(c, kappa, r, shift, l_maj);
    double suffix = 0;
    long l = l_maj;
    while (l > 1 && suffix + std::abs(s[static_cast<std::size_t>(l)]) <= budget / 2) {
        suffix += std::abs(s[static_cast<std::size_t>(l)]);
        --l;
    }
    s.resize(static_cast<std::size_t>(l + 1));
    return {std::move(s), suffix + far};
}

Complex horner(const std::vector<Complex>& c, Complex x) {
    Complex acc = 0;
    for (std::size_t m = c.size(); m-- > 0;) {
        acc = acc * x + c[m];
    }
    return acc;
}

} // namespace

Complex PolePart::operator()(Complex z) const {
    const Complex w = 1.0 / (z - a);
    return horner(coeffs, w) * w;
}

PolePart to_numeric(const PrincipalPart& part) {
    if (part.pole().is_infinity()) {
        throw MathError("plane principal parts must have finite poles");
    }
    PolePart out;
    out.a = part.pole().value().to_complex();
    out.coeffs.assign(static_cast<std::size_t>(part.order()), Complex(0));
    for (const auto& [j, c] : part.coeffs()) {
        out.coeffs[static_cast<std::size_t>(j - 1)] = c.to_complex();
    }
    return out;
}

Complex RationalTerm::operator()(Complex z) const {
    if (pole.infinite) {
        return horner(coeffs, (z - center) / scale);
    }
    const Complex v = scale / (z - center);
    return horner(coeffs, v) * v;
}

Complex RationalApprox::operator()(Complex z) const {
    Complex sum = 0;
    for (const auto& t : terms) {
        sum += t(z);
    }
    return sum;
}

std::vector<SpherePoint> RationalApprox::poles() const {
    std::vector<SpherePoint> out;
    for (const auto& t : terms) {
        out.push_back(t.pole);
    }
    return out;
}

void RationalApprox::add(const RationalTerm& term) {
    for (auto& t : terms) {
        if (t.pole == term.pole && t.center == term.center && t.scale == term.scale) {
            if (t.coeffs.size() < term.coeffs.size()) {
                t.coeffs.resize(term.coeffs.size(), Complex(0));
            }
            for (std::size_t k = 0; k < term.coeffs.size(); ++k) {
                t.coeffs[k] += term.coeffs[k];
            }
            return;
        }
    }
    terms.push_back(term);
}

SpherePoint natural_target(const PolePart& part, const Exhaustion& k) {
    if (!k.empty()) {
        const auto& c = k.constraints()[k.dominating_constraint(part.a)];
        if (c.kind == Constraint::Kind::disc_outside) {
            return SpherePoint::at(c.center);
        }
    }
    return SpherePoint::infinity();
}

PushedApprox push_pole(const PolePart& part, const Exhaustion& k, const SpherePoint& target, double eps,
                       const PushOptions& options) {
    PushedApprox out;
    out.path.push_back(part.a);
    if (part.coeffs.empty() || k.empty()) {
        return out;
    }
    if (!target.infinite && part.a == target.value) {
        out.r.add({target, target.value, 1.0, part.coeffs});
        return out;
    }
    Complex b = part.a;
    double d = k.distance_lower_bound(b);
    if (!(d > 0)) {
        throw MathError("pole lies in the compact set");
    }
    // coefficients in v = d / (z - b)
    std::vector<Complex> c(part.coeffs.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        c[j] = part.coeffs[j] / std::pow(d, static_cast<double>(j + 1));
    }

    const Complex hub = k.hub();
    const double rho = k.hub_radius();
    double tails = 0;
    for (int m = 0;; ++m) {
        if (m >= options.max_steps) {
            throw MathError("pole push budget unreachable within the step cap");
        }
        const double budget = eps * std::ldexp(1.0, -m - 1) / options.safety;
        if (target.infinite && std::abs(b - hub) >= options.taylor_ratio * rho) {
            // Taylor section in u = (z - hub) / scale, |u| <= 1 on K
            const double scale = rho > 0 ? rho : std::abs(b - hub) / options.taylor_ratio;
            const Complex beta = -d / (b - hub);
            const Complex p = scale / (b - hub);
            auto t = compose_truncated(c, beta, p, 0, budget, options.max_terms);
            out.r.add({target, hub, scale, std::move(t.series)});
            tails += t.tail;
            break;
        }
        if (!target.infinite && b == target.value) {
            out.r.add({target, b, d, c});
            break;
        }

        Complex dir;
        double step = options.theta * d;
        bool lands = false;
        if (target.infinite) {
            const auto& dom = k.constraints()[k.dominating_constraint(b)];
            if (dom.kind == Constraint::Kind::disc_outside) {
                throw MathError("no path to infinity: the pole lies in a bounded complement component");
            }
            dir = dom.escape_direction(b);
        } else {
            const Complex gap = target.value - b;
            dir = gap / std::abs(gap);
            if (std::abs(gap) <= step) {
                step = std::abs(gap);
                lands = true;
            }
        }
        Complex next;
        double d_next = 0;
        for (;;) {
            next = lands ? target.value : b + step * dir;
            d_next = k.distance_lower_bound(next);
            if (d_next > 0 && step / d_next <= options.max_ratio) {
                break;
            }
            step /= 2;
            lands = false;
            if (step < 1e-14 * (1 + std::abs(b))) {
                throw MathError("pole push blocked: no path within the complement component");
            }
        }
        const Complex h = next - b;
        const double alpha = d / d_next;
        const Complex q = -h / d_next;
        auto t = compose_truncated(c, alpha, q, 1, budget, options.max_terms);
        c.assign(t.series.begin() + 1, t.series.end());
        tails += t.tail;
        b = next;
        d = d_next;
        out.path.push_back(b);
        ++out.steps;
    }
    out.certified_bound = options.safety * tails;
    return out;
}

} // namespace mlcech::plane

#include "mlcech/p1/line_bundle.hpp"

#include "mlcech/error.hpp"
#include "mlcech/exact/laurent_window.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mlcech::p1 {

namespace {

using cech::Face;

/// Exponent range of a Laurent polynomial c t^v p(t).
std::pair<long, long> laurent_support(const RationalFunction& f) {
    const long v = f.den().valuation();
    if (f.den().degree() != v) {
        throw MathError("section restricted to the overlap is not a Laurent polynomial");
    }
    return {f.num().valuation() - v, f.num().degree() - v};
}

/// Two-chart datum whose overlap space is the Laurent window spanned by the
/// given images of the chart bases.
CechCover two_chart_datum(const std::vector<RationalFunction>& images1, const std::vector<RationalFunction>& images2) {
    long lo = std::numeric_limits<long>::max();
    long hi = std::numeric_limits<long>::min();
    for (const auto* images : {&images1, &images2}) {
        for (const auto& f : *images) {
            if (f.is_zero()) {
                continue;
            }
            auto [a, b] = laurent_support(f);
            lo = std::min(lo, a);
            hi = std::max(hi, b);
        }
    }
    if (lo > hi) {
        lo = hi = 0;
    }
    const auto width = static_cast<std::size_t>(hi - lo + 1);
    auto restriction = [&](const std::vector<RationalFunction>& images) {
        linalg::Matrix m(width, images.size());
        for (std::size_t k = 0; k < images.size(); ++k) {
            LaurentWindow w = LaurentWindow::from_function(images[k], lo, hi);
            for (long n = lo; n <= hi; ++n) {
                m(static_cast<std::size_t>(n - lo), k) = w.coeff(n);
            }
        }
        return m;
    };
    cech::Nerve nerve(2, {Face{0}, Face{1}, Face{0, 1}});
    cech::SheafDatum datum;
    datum.set_dim(Face{0}, images1.size());
    datum.set_dim(Face{1}, images2.size());
    datum.set_dim(Face{0, 1}, width);
    datum.set_restriction(Face{0}, Face{0, 1}, restriction(images1));
    datum.set_restriction(Face{1}, Face{0, 1}, restriction(images2));
    return {std::move(nerve), std::move(datum)};
}

std::pair<long, long> ranks_of(const CechCover& cover) {
    auto report = cech::cohomology(cech::build_complex(cover.nerve, cover.datum));
    return {static_cast<long>(report.ranks.at(0)), static_cast<long>(report.ranks.at(1))};
}

RationalFunction t_power(long k) {
    if (k >= 0) {
        return RationalFunction(Poly::monomial(k));
    }
    return RationalFunction(Poly(GaussRational(1)), Poly::monomial(-k));
}

} // namespace

void TruncationPolicy::check(const Divisor& d) const {
    if (window < minimum_window(d)) {
        throw MathError("truncation window " + std::to_string(window) + " below the minimum " +
                        std::to_string(minimum_window(d)) + " for D = " + to_string(d));
    }
    if (stabilization_step < 1) {
        throw MathError("stabilization step must be positive");
    }
}

CechCover od_cech_datum_at(const Divisor& d, long window) {
    if (window < 0) {
        throw MathError("negative truncation window");
    }
    RationalFunction p(GaussRational(1));       // prod over finite points
    RationalFunction p_star(GaussRational(1));  // prod over finite nonzero points
    RationalFunction q(GaussRational(1));       // Q(s)
    for (const auto& [x, n] : d.entries()) {
        if (x.is_infinity()) {
            q *= t_power(n);
            continue;
        }
        const RationalFunction factor = RationalFunction::pole_power(x.value(), -n);
        p *= factor;
        if (!x.value().is_zero()) {
            p_star *= factor;
            q *= RationalFunction::pole_power(x.value().inverse(), -n);
        }
    }
    const RationalFunction base1 = p_star / p;
    const RationalFunction base2 = (RationalFunction(GaussRational(1)) / q).invert_variable() * p_star;
    std::vector<RationalFunction> images1;
    std::vector<RationalFunction> images2;
    for (long k = 0; k <= window; ++k) {
        images1.push_back(base1 * t_power(k));
        images2.push_back(base2 * t_power(-k));
    }
    return two_chart_datum(images1, images2);
}

std::pair<long, long> od_cohomology(const Divisor& d, const TruncationPolicy& policy) {
    policy.check(d);
    auto at_m = ranks_of(od_cech_datum_at(d, policy.window));
    auto at_next = ranks_of(od_cech_datum_at(d, policy.window + policy.stabilization_step));
    if (at_m != at_next) {
        throw StabilizationError("window too small: ranks changed between M = " + std::to_string(policy.window) +
                                 " and M + " + std::to_string(policy.stabilization_step));
    }
    return at_m;
}

CechCover od_cech_datum(const Divisor& d, const TruncationPolicy& policy) {
    (void)od_cohomology(d, policy);
    return od_cech_datum_at(d, policy.window);
}

CechCover omega1_datum(long window, const RationalFunction& ds_dt) {
    if (window < 0) {
        throw MathError("negative truncation window");
    }
    std::vector<RationalFunction> images1;
    std::vector<RationalFunction> images2;
    for (long k = 0; k <= window; ++k) {
        images1.push_back(t_power(k));
        images2.push_back(t_power(-k) * ds_dt);
    }
    return two_chart_datum(images1, images2);
}

cech::CohomologyReport omega1_cech(long window) {
    const RationalFunction ds_dt = -t_power(-2);
    auto cover = omega1_datum(window, ds_dt);
    auto report = cech::cohomology(cech::build_complex(cover.nerve, cover.datum));
    auto next = omega1_datum(window + 1, ds_dt);
    auto report_next = cech::cohomology(cech::build_complex(next.nerve, next.datum));
    if (report.ranks != report_next.ranks) {
        throw StabilizationError("window too small for Omega^1 at M = " + std::to_string(window));
    }
    return report;
}

RiemannRochReport riemann_roch_check(const Divisor& d) {
    return riemann_roch_check(d, TruncationPolicy::for_divisor(d));
}

RiemannRochReport riemann_roch_check(const Divisor& d, const TruncationPolicy& policy) {
    RiemannRochReport r;
    r.degree = d.degree();
    std::tie(r.h0, r.h1) = od_cohomology(d, policy);
    r.lhs = r.h0 - r.h1;
    r.rhs = 1 - r.genus + r.degree;
    r.holds = r.lhs == r.rhs;
    r.closed_form_h0 = std::max(0L, r.degree + 1);
    r.closed_form_h1 = std::max(0L, -r.degree - 1);
    return r;
}

Equivalence linear_equivalence(const Divisor& d, const Divisor& d_prime) {
    Equivalence out;
    if (d.degree() != d_prime.degree()) {
        return out;
    }
    out.equivalent = true;
    RationalFunction f(GaussRational(1));
    const Divisor diff = d - d_prime;
    for (const auto& [x, n] : diff.entries()) {
        if (x.is_finite()) {
            f *= RationalFunction::pole_power(x.value(), -n);
        }
    }
    out.witness = std::move(f);
    return out;
}

} // namespace mlcech::p1

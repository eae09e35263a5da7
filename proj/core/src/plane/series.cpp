#include "mlcech/plane/series.hpp"

#include "mlcech/error.hpp"
#include "quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mlcech::plane {

Complex PoleGrouping::f(int n, Complex z) const {
    Complex sum = 0;
    if (auto it = stages.find(n); it != stages.end()) {
        for (auto k : it->second) {
            sum += parts[k](z);
        }
    }
    return sum;
}

PoleGrouping group_poles(const std::vector<PolePart>& parts, const DomainSpec& domain, int n_max) {
    PoleGrouping g;
    g.domain = domain;
    g.parts = parts;
    g.n_max = n_max;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const Complex a = parts[k].a;
        if (!domain.contains(a)) {
            throw MathError("pole " + to_string(SpherePoint::at(a)) + " is not in the domain");
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (parts[j].a == a) {
                throw MathError("repeated pole " + to_string(SpherePoint::at(a)));
            }
        }
        int stage = 0;
        for (int n = 1; n <= n_max; ++n) {
            if (exhaust(domain, n).contains(a)) {
                stage = n;
                break;
            }
        }
        if (stage == 0) {
            throw MathError("pole " + to_string(SpherePoint::at(a)) + " enters no compact up to stage " +
                            std::to_string(n_max));
        }
        g.stages[stage].push_back(k);
    }
    return g;
}

MLSeries assemble(const PoleGrouping& grouping, int depth, const PushOptions& options) {
    if (depth < grouping.last_stage()) {
        throw MathError("depth below the last stage containing a pole");
    }
    MLSeries s;
    s.domain = grouping.domain;
    s.parts = grouping.parts;
    s.depth = depth;
    for (const auto& [n, indices] : grouping.stages) {
        Stage st;
        st.n = n;
        st.indices = indices;
        if (n >= 2) {
            const Exhaustion k = exhaust(grouping.domain, n - 1);
            const double eps = std::ldexp(1.0, -n) / static_cast<double>(indices.size());
            for (auto idx : indices) {
                const auto& part = grouping.parts[idx];
                auto pushed = push_pole(part, k, natural_target(part, k), eps, options);
                for (const auto& term : pushed.r.terms) {
                    st.r.add(term);
                }
                st.certified_bound += pushed.certified_bound;
                st.paths.push_back(std::move(pushed.path));
            }
        }
        s.stages.push_back(std::move(st));
    }
    return s;
}

MLSeries truncate(const MLSeries& series, int depth) {
    MLSeries out = series;
    out.depth = depth;
    out.stages.clear();
    bool dropped = series.tail_bound > 0;
    for (const auto& st : series.stages) {
        if (st.n <= depth) {
            out.stages.push_back(st);
        } else {
            dropped = true;
        }
    }
    out.tail_bound = dropped ? std::ldexp(1.0, -depth) : 0.0;
    return out;
}

Complex MLSeries::stage_sum(Complex z, int lo, int hi) const {
    Complex sum = 0;
    for (const auto& st : stages) {
        if (st.n <= lo || st.n > hi) {
            continue;
        }
        for (auto k : st.indices) {
            sum += parts[k](z);
        }
        sum -= st.r(z);
    }
    return sum;
}

Evaluation evaluate(const MLSeries& series, Complex z, double exclusion) {
    if (!series.domain.contains(z)) {
        throw MathError("evaluation point outside the domain");
    }
    for (const auto& p : series.parts) {
        if (std::abs(z - p.a) <= exclusion) {
            throw MathError("evaluation point within the exclusion radius of a pole");
        }
    }
    if (series.tail_bound > 0 && !exhaust(series.domain, series.depth).contains(z)) {
        throw MathError("evaluation point outside K_N: tail bound not certified");
    }
    return {series.stage_sum(z, 0, series.depth), series.tail_bound};
}

double separation_radius(const MLSeries& series, const PolePart& part) {
    double r = series.domain.boundary_distance(part.a);
    for (const auto& p : series.parts) {
        if (p.a != part.a) {
            r = std::min(r, std::abs(p.a - part.a));
        }
    }
    // R_n grows like exp(L rho / dist) off K_{n-1}; keep the contour where it is tame.
    for (const auto& st : series.stages) {
        const bool owns = std::any_of(st.indices.begin(), st.indices.end(),
                                      [&](std::size_t k) { return series.parts[k].a == part.a; });
        if (owns && st.n >= 2) {
            r = std::min(r, 0.5 * exhaust(series.domain, st.n - 1).distance_lower_bound(part.a));
        }
    }
    return r;
}

double verify_principal_part(const MLSeries& series, const PolePart& part, double rho, int samples) {
    if (samples < 64) {
        throw MathError("verify_principal_part needs at least 64 samples");
    }
    if (!(rho > 0) || rho >= separation_radius(series, part)) {
        throw MathError("contour radius violates pole separation");
    }
    // The corrections R_n are large away from K_{n-1}; summing in binary128
    // keeps their (analytic) contribution out of the extracted coefficients.
    using detail::QComplex;
    auto term_value = [](const RationalTerm& t, QComplex z) {
        if (t.pole.infinite) {
            return detail::horner(t.coeffs, (z - QComplex(t.center)) / QComplex(t.scale));
        }
        const QComplex v = QComplex(t.scale) / (z - QComplex(t.center));
        return detail::horner(t.coeffs, v) * v;
    };
    auto f = [&](QComplex z) {
        QComplex sum;
        for (const auto& st : series.stages) {
            for (auto k : st.indices) {
                const auto& p = series.parts[k];
                const QComplex w = QComplex(1) / (z - QComplex(p.a));
                sum += detail::horner(p.coeffs, w) * w;
            }
            for (const auto& t : st.r.terms) {
                sum -= term_value(t, z);
            }
        }
        return sum;
    };
    const auto roots = detail::roots_of_unity(samples);
    const QComplex center(part.a);
    std::vector<QComplex> acc(part.coeffs.size());
    for (const auto& w : roots) {
        const QComplex h = QComplex(rho) * w;
        QComplex v = f(center + h);
        for (auto& a : acc) {
            v *= h;
            a += v;
        }
    }
    std::vector<Complex> c;
    for (const auto& a : acc) {
        c.push_back((a / QComplex(samples)).to_complex());
    }
    double worst = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        const Complex a = part.coeffs[j];
        worst = std::max(worst, std::abs(c[j] - a) / std::max(1.0, std::abs(a)));
    }
    return worst;
}

} // namespace mlcech::plane

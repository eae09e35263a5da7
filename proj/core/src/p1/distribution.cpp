#include "mlcech/p1/distribution.hpp"

#include "mlcech/error.hpp"
#include "mlcech/exact/expansion.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mlcech::p1 {

using cech::Face;

MLDistribution::MLDistribution(std::vector<PrincipalPart> parts) : parts_(std::move(parts)) {
    std::set<Point> seen;
    for (const auto& p : parts_) {
        if (!seen.insert(p.pole()).second) {
            throw MathError("duplicate pole " + to_string(p.pole()) + " in Mittag-Leffler distribution");
        }
    }
}

long MLDistribution::max_order() const {
    long m = 0;
    for (const auto& p : parts_) {
        m = std::max(m, p.order());
    }
    return m;
}

namespace {

/// u^{-m} in the local coordinate at the pole, as a function of t.
RationalFunction inverse_local_power(const Point& pole, long m) {
    if (pole.is_infinity()) {
        return RationalFunction(Poly::monomial(m));
    }
    return RationalFunction::pole_power(pole.value(), m);
}

std::vector<RationalFunction> u0_basis(const MLDistribution& mu, long window) {
    std::vector<RationalFunction> basis{RationalFunction(GaussRational(1))};
    for (const auto& part : mu.parts()) {
        for (long m = 1; m <= window; ++m) {
            basis.push_back(inverse_local_power(part.pole(), m));
        }
    }
    return basis;
}

} // namespace

CechCover ml_cover_datum(const MLDistribution& mu, long window) {
    if (window < mu.max_order()) {
        throw MathError("window " + std::to_string(window) + " below the maximal pole order");
    }
    const std::size_t n = mu.size();
    std::vector<Face> faces{Face{0}};
    for (std::size_t k = 1; k <= n; ++k) {
        faces.push_back(Face{k});
    }
    for (std::size_t k = 1; k <= n; ++k) {
        faces.push_back(Face{0, k});
    }
    cech::Nerve nerve(n + 1, faces);

    const auto basis = u0_basis(mu, window);
    const auto local_dim = static_cast<std::size_t>(window + 1);
    const auto overlap_dim = static_cast<std::size_t>(2 * window + 1);
    cech::SheafDatum datum;
    datum.set_dim(Face{0}, basis.size());
    for (std::size_t k = 1; k <= n; ++k) {
        const Point& pole = mu.parts()[k - 1].pole();
        datum.set_dim(Face{k}, local_dim);
        datum.set_dim(Face{0, k}, overlap_dim);
        linalg::Matrix from0(overlap_dim, basis.size());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            LaurentWindow w = laurent_expand(basis[b], pole, -window, window);
            for (long e = -window; e <= window; ++e) {
                from0(static_cast<std::size_t>(e + window), b) = w.coeff(e);
            }
        }
        linalg::Matrix fromk(overlap_dim, local_dim);
        for (std::size_t m = 0; m < local_dim; ++m) {
            fromk(static_cast<std::size_t>(window) + m, m) = GaussRational(1);
        }
        datum.set_restriction(Face{0}, Face{0, k}, from0);
        datum.set_restriction(Face{k}, Face{0, k}, fromk);
    }
    return {std::move(nerve), std::move(datum)};
}

MLObstruction ml_obstruction(const MLDistribution& mu) {
    return ml_obstruction(mu, TruncationPolicy{mu.max_order() + 2, 1});
}

MLObstruction ml_obstruction(const MLDistribution& mu, const TruncationPolicy& policy) {
    const long window = policy.window;
    auto cover = ml_cover_datum(mu, window);
    auto cx = cech::build_complex(cover.nerve, cover.datum);

    MLObstruction out;
    out.window = window;

    // delta mu with f_0 = 0 and f_k the principal part: on U_0k it is f_k - f_0.
    const auto& c1 = cover.nerve.faces(1);
    const auto overlap_dim = static_cast<std::size_t>(2 * window + 1);
    out.cocycle.assign(c1.size() * overlap_dim, GaussRational());
    for (std::size_t i = 0; i < c1.size(); ++i) {
        const auto& part = mu.parts()[c1[i][1] - 1];
        for (const auto& [j, a] : part.coeffs()) {
            out.cocycle[i * overlap_dim + static_cast<std::size_t>(window - j)] = a;
        }
    }

    // One reduction of [delta0 | cocycle] gives rank delta0 and the witness.
    const auto& delta0 = cx.deltas.at(0);
    linalg::Matrix aug(delta0.rows(), delta0.cols() + 1);
    for (std::size_t r = 0; r < delta0.rows(); ++r) {
        for (std::size_t c = 0; c < delta0.cols(); ++c) {
            aug(r, c) = delta0(r, c);
        }
        aug(r, delta0.cols()) = out.cocycle[r];
    }
    std::vector<std::size_t> pivots;
    const linalg::Matrix e = linalg::rref(aug, &pivots);
    const bool consistent = pivots.empty() || pivots.back() != delta0.cols();
    const std::size_t rank0 = pivots.size() - (consistent ? 0 : 1);
    // The cover has no triple overlaps: the complex is C^0 -> C^1.
    out.report.ranks = {cx.dims.at(0) - rank0, cx.dims.at(1) - rank0};
    if (!consistent) {
        return out;
    }
    linalg::Vector g(delta0.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        g[pivots[r]] = e(r, delta0.cols());
    }
    out.class_zero = true;
    out.witness = g;
    const auto basis = u0_basis(mu, window);
    RationalFunction g0;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (!g[b].is_zero()) {
            g0 += basis[b] * RationalFunction(g[b]);
        }
    }
    out.solution = -g0;
    return out;
}

RationalFunction ml_solve(const MLDistribution& mu) {
    RationalFunction f;
    for (const auto& part : mu.parts()) {
        f += part.to_function();
    }
    long finite_order = 0;
    for (const auto& part : mu.parts()) {
        const long m = part.order();
        if (part.pole().is_finite()) {
            finite_order += m;
        }
        LaurentWindow w = laurent_expand(f, part.pole(), -m - 1, -1);
        for (long j = 1; j <= m + 1; ++j) {
            if (w.coeff(-j) != part.coeff(j)) {
                throw MathError("principal part mismatch at " + to_string(part.pole()));
            }
        }
    }
    if (f.den().degree() != finite_order) {
        throw MathError("solution has poles outside the distribution");
    }
    return f;
}

GaussRational distribution_residue(const MeromorphicOneForm& omega, const MLDistribution& mu) {
    GaussRational total;
    if (omega.coefficient.is_zero()) {
        return total;
    }
    for (const auto& part : mu.parts()) {
        const Point& a = part.pole();
        const long ord = order_at(omega.coefficient, a);
        if (ord < (a.is_infinity() ? 2 : 0)) {
            throw MathError("1-form is singular at " + to_string(a) + ", a pole of the distribution");
        }
        total += residue_at(omega.coefficient * part.to_function(), a);
    }
    return total;
}

} // namespace mlcech::p1

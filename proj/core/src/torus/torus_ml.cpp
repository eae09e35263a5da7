#include "mlcech/torus/torus_ml.hpp"

#include "mlcech/error.hpp"
#include "mlcech/numeric/contour.hpp"

#include <algorithm>
#include <cmath>

namespace mlcech::torus {

TorusDistribution::TorusDistribution(const Lattice& lattice, std::vector<TorusPart> parts)
    : lattice_(lattice), parts_(std::move(parts)) {
    for (auto& p : parts_) {
        if (p.coeffs.empty()) {
            throw SchemaError("torus principal part without coefficients");
        }
        if (p.coeffs.back() == Complex(0)) {
            throw SchemaError("torus principal part with zero leading coefficient");
        }
        if (!p.exact.empty() && p.exact.size() != p.coeffs.size()) {
            throw SchemaError("exact and float coefficient lists differ in length");
        }
        p.point = lattice_.reduce(p.point);
    }
    const double tol = 1e-9 * std::abs(lattice_.w1());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (lattice_.distance_to_lattice(parts_[i].point - parts_[j].point) <= tol) {
                throw MathError("two principal parts at the same point mod the lattice");
            }
        }
    }
}

double TorusDistribution::min_separation() const {
    double best = std::abs(lattice_.w1());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            best = std::min(best, lattice_.distance_to_lattice(parts_[i].point - parts_[j].point));
        }
    }
    return best;
}

bool TorusDistribution::is_exact() const {
    return std::all_of(parts_.begin(), parts_.end(), [](const TorusPart& p) { return !p.exact.empty(); });
}

ResidueTest residue_test(const TorusDistribution& mu, double tol) {
    ResidueTest out;
    if (mu.is_exact()) {
        GaussRational sum;
        for (const auto& p : mu.parts()) {
            sum += p.exact.front();
        }
        out.sum = sum.to_complex();
        out.solvable = sum.is_zero();
        out.exact = true;
        return out;
    }
    for (const auto& p : mu.parts()) {
        out.sum += p.coeffs.front();
    }
    out.solvable = std::abs(out.sum) <= tol;
    return out;
}

EllipticCandidate::EllipticCandidate(std::shared_ptr<const WeierstrassContext> ctx, TorusDistribution mu)
    : ctx_(std::move(ctx)), mu_(std::move(mu)) {}

Complex EllipticCandidate::operator()(Complex z) const {
    Complex sum = 0;
    for (const auto& p : mu_.parts()) {
        const Complex w = z - p.point;
        sum += p.coeffs[0] * ctx_->zeta(w);
        double fact = 1;  // (j - 1)!
        for (std::size_t j = 2; j <= p.coeffs.size(); ++j) {
            fact *= static_cast<double>(j - 1);
            const double sign = j % 2 == 0 ? 1.0 : -1.0;
            sum += p.coeffs[j - 1] * (sign / fact) * ctx_->wp_derivative(w, static_cast<int>(j) - 2);
        }
    }
    return sum;
}

EllipticCandidate torus_solve(const TorusDistribution& mu, std::shared_ptr<const WeierstrassContext> ctx, double tol) {
    if (!residue_test(mu, tol).solvable) {
        throw MathError("no solution exists (criterion): residue sum against dz is nonzero");
    }
    return {std::move(ctx), mu};
}

EllipticCandidate force_candidate(const TorusDistribution& mu, std::shared_ptr<const WeierstrassContext> ctx) {
    return {std::move(ctx), mu};
}

PeriodicityReport check_periodicity(const EllipticCandidate& f, const std::vector<Complex>& points, double tol,
                                    double exclusion) {
    const auto& lat = f.context().lattice();
    PeriodicityReport out;
    for (const auto& z : points) {
        for (const auto& p : f.distribution().parts()) {
            if (lat.distance_to_lattice(z - p.point) < exclusion) {
                throw MathError("periodicity sample hits the pole exclusion");
            }
        }
        const Complex v = f(z);
        out.max_deviation = std::max({out.max_deviation, std::abs(f(z + lat.w1()) - v), std::abs(f(z + lat.w2()) - v)});
        ++out.samples;
    }
    out.within_tolerance = out.max_deviation <= tol;
    return out;
}

PeriodicityReport check_periodicity(const EllipticCandidate& f, int samples, double tol) {
    if (samples < 10) {
        throw MathError("check_periodicity needs at least 10 samples");
    }
    const auto& lat = f.context().lattice();
    const double exclusion = 0.05 * std::abs(lat.w1());
    // R2 low-discrepancy sequence on the unit square.
    const double g = 1.32471795724474602596;
    const double a1 = 1 / g;
    const double a2 = 1 / (g * g);
    std::vector<Complex> points;
    for (long k = 0; static_cast<int>(points.size()) < samples; ++k) {
        if (k > 1000L * samples) {
            throw MathError("periodicity samples cannot avoid the pole exclusion");
        }
        const double a = std::fmod(0.5 + static_cast<double>(k) * a1, 1.0);
        const double b = std::fmod(0.5 + static_cast<double>(k) * a2, 1.0);
        const Complex z = a * lat.w1() + b * lat.w2();
        const bool near = std::any_of(f.distribution().parts().begin(), f.distribution().parts().end(),
                                      [&](const TorusPart& p) { return lat.distance_to_lattice(z - p.point) < exclusion; });
        if (!near) {
            points.push_back(z);
        }
    }
    return check_periodicity(f, points, tol, exclusion);
}

double coefficient_error(const EllipticCandidate& f, int samples) {
    const double rho = 0.4 * f.distribution().min_separation();
    double worst = 0;
    for (const auto& p : f.distribution().parts()) {
        // Two extra orders: the extracted principal part must stop at the prescribed order.
        const auto c = numeric::principal_coefficients([&](Complex z) { return f(z); }, p.point, rho, samples,
                                                       p.order() + 2);
        for (std::size_t j = 0; j < c.size(); ++j) {
            const Complex want = j < p.coeffs.size() ? p.coeffs[j] : Complex(0);
            worst = std::max(worst, std::abs(c[j] - want) / std::max(1.0, std::abs(want)));
        }
    }
    return worst;
}

} // namespace mlcech::torus

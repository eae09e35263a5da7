#include "mlcech/plane/domain.hpp"

#include "mlcech/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace mlcech::plane {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dot(Complex n, Complex z) { return (std::conj(n) * z).real(); }

Complex unit_or(Complex v, Complex fallback) {
    const double a = std::abs(v);
    return a > 0 ? v / a : fallback;
}

} // namespace

std::string to_string(const SpherePoint& p) {
    if (p.infinite) {
        return "inf";
    }
    std::ostringstream os;
    os.precision(17);
    os << p.value.real() << (p.value.imag() < 0 ? "" : "+") << p.value.imag() << "i";
    return os.str();
}

std::string to_string(DomainKind k) {
    switch (k) {
    case DomainKind::plane:
        return "plane";
    case DomainKind::disc:
        return "disc";
    case DomainKind::annulus:
        return "annulus";
    case DomainKind::halfplane:
        return "halfplane";
    }
    return "?";
}

DomainSpec DomainSpec::disc(Complex c, double r) {
    if (!(r > 0)) {
        throw MathError("disc radius must be positive");
    }
    DomainSpec d;
    d.kind = DomainKind::disc;
    d.center = c;
    d.radius = r;
    return d;
}

DomainSpec DomainSpec::annulus(Complex c, double r, double big_r) {
    if (!(r > 0) || !(big_r > r)) {
        throw MathError("annulus needs 0 < r < R");
    }
    DomainSpec d;
    d.kind = DomainKind::annulus;
    d.center = c;
    d.inner = r;
    d.radius = big_r;
    return d;
}

DomainSpec DomainSpec::halfplane(Complex normal, double offset) {
    if (std::abs(normal) == 0) {
        throw MathError("halfplane normal must be nonzero");
    }
    DomainSpec d;
    d.kind = DomainKind::halfplane;
    d.normal = normal / std::abs(normal);
    d.offset = offset;
    return d;
}

double DomainSpec::boundary_distance(Complex z) const {
    switch (kind) {
    case DomainKind::plane:
        return kInf;
    case DomainKind::disc:
        return radius - std::abs(z - center);
    case DomainKind::annulus: {
        const double rho = std::abs(z - center);
        return std::min(rho - inner, radius - rho);
    }
    case DomainKind::halfplane:
        return dot(normal, z) - offset;
    }
    return 0;
}

bool DomainSpec::contains(Complex z) const { return boundary_distance(z) > 0; }

std::vector<SpherePoint> DomainSpec::targets() const {
    if (kind == DomainKind::annulus) {
        return {SpherePoint::at(center), SpherePoint::infinity()};
    }
    return {SpherePoint::infinity()};
}

double Constraint::violation(Complex z) const {
    switch (kind) {
    case Kind::disc_inside:
        return std::abs(z - center) - radius;
    case Kind::disc_outside:
        return radius - std::abs(z - center);
    case Kind::halfplane:
        return offset - dot(normal, z);
    }
    return 0;
}

Complex Constraint::escape_direction(Complex z) const {
    switch (kind) {
    case Kind::disc_inside:
        return unit_or(z - center, Complex(1, 0));
    case Kind::disc_outside:
        return unit_or(center - z, Complex(1, 0));
    case Kind::halfplane:
        return -normal;
    }
    return {1, 0};
}

Exhaustion::Exhaustion(const DomainSpec& domain, int n) : domain_(domain), n_(n) {
    if (n < 1) {
        throw MathError("exhaustion index must be >= 1");
    }
    const double nn = n;
    const double inv = 1.0 / nn;
    using K = Constraint::Kind;
    constraints_.push_back({K::disc_inside, {0, 0}, nn, {}, 0});
    switch (domain.kind) {
    case DomainKind::plane:
        break;
    case DomainKind::disc: {
        const double r = domain.radius - inv;
        constraints_.push_back({K::disc_inside, domain.center, r, {}, 0});
        empty_ = r < 0 || std::abs(domain.center) > nn + r;
        break;
    }
    case DomainKind::annulus: {
        const double lo = domain.inner + inv;
        const double hi = domain.radius - inv;
        constraints_.push_back({K::disc_outside, domain.center, lo, {}, 0});
        constraints_.push_back({K::disc_inside, domain.center, hi, {}, 0});
        const double c = std::abs(domain.center);
        empty_ = lo > hi || c > nn + hi || nn + c < lo;
        break;
    }
    case DomainKind::halfplane:
        constraints_.push_back({K::halfplane, {}, 0, domain.normal, domain.offset + inv});
        empty_ = domain.offset + inv > nn;
        break;
    }
}

Exhaustion exhaust(const DomainSpec& domain, int n) { return Exhaustion(domain, n); }

bool Exhaustion::contains(Complex z, double tol) const {
    if (empty_) {
        return false;
    }
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const Constraint& c) { return c.violation(z) <= tol; });
}

bool Exhaustion::contains_interior(Complex z, double tol) const {
    if (empty_) {
        return false;
    }
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const Constraint& c) { return c.violation(z) < -tol; });
}

double Exhaustion::distance_lower_bound(Complex z) const {
    if (empty_) {
        return kInf;
    }
    double d = -kInf;
    for (const auto& c : constraints_) {
        d = std::max(d, c.violation(z));
    }
    return d;
}

std::size_t Exhaustion::dominating_constraint(Complex z) const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < constraints_.size(); ++k) {
        if (constraints_[k].violation(z) > constraints_[best].violation(z)) {
            best = k;
        }
    }
    return best;
}

double Exhaustion::max_modulus() const {
    if (empty_) {
        return 0;
    }
    double m = n_;
    for (const auto& c : constraints_) {
        if (c.kind == Constraint::Kind::disc_inside) {
            m = std::min(m, std::abs(c.center) + c.radius);
        }
    }
    return m;
}

namespace {

const Constraint* smallest_disc(const std::vector<Constraint>& constraints) {
    const Constraint* best = nullptr;
    for (const auto& c : constraints) {
        if (c.kind == Constraint::Kind::disc_inside && (!best || c.radius < best->radius)) {
            best = &c;
        }
    }
    return best;
}

} // namespace

Complex Exhaustion::hub() const {
    const auto* c = smallest_disc(constraints_);
    return c && !empty_ ? c->center : Complex(0);
}

double Exhaustion::hub_radius() const {
    const auto* c = smallest_disc(constraints_);
    return c && !empty_ ? std::max(0.0, c->radius) : 0.0;
}

std::vector<Complex> Exhaustion::boundary_samples(int count) const {
    std::vector<Complex> out;
    if (empty_) {
        return out;
    }
    for (const auto& c : constraints_) {
        if (c.kind == Constraint::Kind::halfplane) {
            // chord of the line inside |z| <= n
            const double half = std::sqrt(std::max(0.0, static_cast<double>(n_) * n_ - c.offset * c.offset));
            const Complex foot = c.normal * c.offset;
            const Complex along = c.normal * Complex(0, 1);
            for (int k = 0; k < count; ++k) {
                const double s = count == 1 ? 0 : -half + 2 * half * k / (count - 1);
                out.push_back(foot + along * s);
            }
            continue;
        }
        for (int k = 0; k < count; ++k) {
            out.push_back(c.center + std::polar(c.radius, 2 * std::numbers::pi * k / count));
        }
    }
    std::vector<Complex> kept;
    for (const auto& z : out) {
        if (contains(z, 1e-9)) {
            kept.push_back(z);
        }
    }
    return kept;
}

} // namespace mlcech::plane

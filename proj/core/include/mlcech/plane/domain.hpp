#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace mlcech::plane {

using Complex = std::complex<double>;

/// Membership tolerance for exhaustion compacts.
inline constexpr double kMembershipTol = 1e-12;

/// A point of the Riemann sphere: finite or infinity.
struct SpherePoint {
    bool infinite = false;
    Complex value{};

    static SpherePoint infinity() { return {true, {}}; }
    static SpherePoint at(Complex z) { return {false, z}; }
    friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

std::string to_string(const SpherePoint& p);

enum class DomainKind { plane, disc, annulus, halfplane };

/// One of four parametric open sets G. The halfplane is
/// {z : Re(conj(normal) z) > offset} with |normal| = 1.
struct DomainSpec {
    DomainKind kind = DomainKind::plane;
    Complex center{};
    double inner = 0;   ///< annulus r
    double radius = 0;  ///< disc R, annulus R
    Complex normal{1, 0};
    double offset = 0;

    static DomainSpec whole_plane() { return {}; }
    static DomainSpec disc(Complex c, double r);
    static DomainSpec annulus(Complex c, double r, double big_r);
    static DomainSpec halfplane(Complex normal, double offset);

    bool contains(Complex z) const;
    /// d(z, C \ G); +inf for the plane; negative outside G.
    double boundary_distance(Complex z) const;
    /// One point of the sphere minus G in each complement component.
    std::vector<SpherePoint> targets() const;
};

std::string to_string(DomainKind k);

/// Closed region described by one inequality.
struct Constraint {
    enum class Kind { disc_inside, disc_outside, halfplane } kind;
    Complex center{};    ///< discs
    double radius = 0;   ///< discs
    Complex normal{};    ///< halfplane: Re(conj(normal) z) >= offset
    double offset = 0;

    /// Signed violation: <= 0 inside, otherwise a lower bound on the distance
    /// from z to the region.
    double violation(Complex z) const;
    /// Unit direction in which the violation grows at z (outside the region).
    Complex escape_direction(Complex z) const;
};

/// K_n = {|z| <= n} intersected with {d(z, C \ G) >= 1/n}.
class Exhaustion {
public:
    Exhaustion(const DomainSpec& domain, int n);

    int index() const { return n_; }
    const DomainSpec& domain() const { return domain_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    bool empty() const { return empty_; }

    bool contains(Complex z, double tol = kMembershipTol) const;
    /// True if z satisfies every constraint with margin > tol.
    bool contains_interior(Complex z, double tol) const;
    /// Lower bound on d(z, K_n); <= 0 when z is in K_n.
    double distance_lower_bound(Complex z) const;
    /// Index of the constraint realizing distance_lower_bound.
    std::size_t dominating_constraint(Complex z) const;
    /// max |z| over K_n (an upper bound).
    double max_modulus() const;
    /// Centre of the smallest constraint disc containing K_n, and its radius.
    Complex hub() const;
    double hub_radius() const;
    /// Points on the boundary of K_n, about `count` per boundary curve.
    std::vector<Complex> boundary_samples(int count) const;

private:
    DomainSpec domain_;
    int n_;
    std::vector<Constraint> constraints_;
    bool empty_ = false;
};

Exhaustion exhaust(const DomainSpec& domain, int n);

} // namespace mlcech::plane

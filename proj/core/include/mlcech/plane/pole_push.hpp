#pragma once

#include "mlcech/exact/principal_part.hpp"
#include "mlcech/plane/domain.hpp"

#include <vector>

namespace mlcech::plane {

/// sum_j A_j (z - a)^{-j}; coeffs[j - 1] = A_j.
struct PolePart {
    Complex a;
    std::vector<Complex> coeffs;

    long order() const { return static_cast<long>(coeffs.size()); }
    Complex operator()(Complex z) const;
};

/// Numeric image of an exact finite principal part.
PolePart to_numeric(const PrincipalPart& part);

/// One summand of a rational approximant.
///   finite pole: sum_{m>=1} c_m (scale / (z - center))^m
///   polynomial:  sum_{m>=0} c_m ((z - center) / scale)^m
struct RationalTerm {
    SpherePoint pole;
    Complex center{};
    double scale = 1;
    std::vector<Complex> coeffs;  ///< finite pole: coeffs[m - 1]; polynomial: coeffs[m]

    Complex operator()(Complex z) const;
};

struct RationalApprox {
    std::vector<RationalTerm> terms;

    Complex operator()(Complex z) const;
    /// Pole locations, one per term.
    std::vector<SpherePoint> poles() const;
    /// Merges terms that share a pole and a scale.
    void add(const RationalTerm& term);
};

struct PushedApprox {
    RationalApprox r;
    double certified_bound = 0;
    std::vector<Complex> path;  ///< pole locations b_0 = a, b_1, ...
    std::size_t steps = 0;
};

struct PushOptions {
    double theta = 0.5;      ///< |b_{m+1} - b_m| <= theta d(b_m, K)
    double max_ratio = 0.5;  ///< accepted |h| / d(b_{m+1}, K)
    double safety = 10;      ///< certified bound = safety * sum of tails
    double taylor_ratio = 2; ///< switch to a Taylor section once |b - hub| >= ratio * hub radius
    int max_steps = 2000;
    long max_terms = 20000;
};

/// Complement component target for a pole outside K: the annulus hole centre
/// when the pole lies in the hole, infinity otherwise.
SpherePoint natural_target(const PolePart& part, const Exhaustion& k);

/// Rational R with poles only at `target` and sup_K |part - R| <= certified_bound <= eps.
/// MathError if the pole lies in K, the path is blocked, or the budget cannot
/// be met within the iteration caps.
PushedApprox push_pole(const PolePart& part, const Exhaustion& k, const SpherePoint& target, double eps,
                       const PushOptions& options = {});

} // namespace mlcech::plane

#pragma once

#include "mlcech/cech/complex.hpp"
#include "mlcech/cech/nerve.hpp"
#include "mlcech/cech/sheaf_datum.hpp"
#include "mlcech/exact/divisor.hpp"
#include "mlcech/exact/rational_function.hpp"

#include <optional>

namespace mlcech::p1 {

/// Degree cut-off for the otherwise infinite-dimensional section spaces.
struct TruncationPolicy {
    long window = 0;              ///< M: chart sections have degree <= M
    long stabilization_step = 1;  ///< ranks at M and M + step must agree

    /// Smallest admissible window for D: sum |n_x| + 3.
    static long minimum_window(const Divisor& d) { return d.total_weight() + 3; }
    static TruncationPolicy for_divisor(const Divisor& d) { return {minimum_window(d), 1}; }
    /// Throws MathError if window < minimum_window(d) or step < 1.
    void check(const Divisor& d) const;
};

/// A finite cover with its sheaf data, ready for cech::build_complex.
struct CechCover {
    cech::Nerve nerve;
    cech::SheafDatum datum;
};

/// O(D) on the standard cover U_1 = {t != inf}, U_2 = {t != 0}, s = 1/t:
///   Gamma(U_1) = span{t^k / P(t)},  P = prod_{a finite} (t - a)^{n_a}
///   Gamma(U_2) = span{s^k / Q(s)},  Q = s^{n_inf} prod_{a != 0} (s - 1/a)^{n_a}
///   Gamma(U_12) = Laurent window times 1 / P*(t),  P* = prod_{a != 0, inf} (t - a)^{n_a}
/// with 0 <= k <= M and the overlap window equal to the hull of the images.
/// Checks that cohomology ranks at M and M + step agree (StabilizationError
/// "window too small" otherwise).
CechCover od_cech_datum(const Divisor& d, const TruncationPolicy& policy);

/// Same datum at a fixed window with no stabilization check.
CechCover od_cech_datum_at(const Divisor& d, long window);

/// Ranks (h0, h1) of O(D).
std::pair<long, long> od_cohomology(const Divisor& d, const TruncationPolicy& policy);

/// Holomorphic 1-forms on the standard cover: C^0 = {f(t) dt} + {g(s) ds}
/// with degrees <= M, C^1 a Laurent window times dt. ds_dt is the chart
/// change factor, -t^{-2} for the real P^1.
CechCover omega1_datum(long window, const RationalFunction& ds_dt);

/// Cohomology of Omega^1 with the M vs M + 1 stabilization check.
cech::CohomologyReport omega1_cech(long window = 8);

struct RiemannRochReport {
    long genus = 0;
    long degree = 0;
    long h0 = 0;
    long h1 = 0;
    long lhs = 0;  ///< h0 - h1
    long rhs = 0;  ///< 1 - genus + degree
    bool holds = false;
    long closed_form_h0 = 0;  ///< max(0, d + 1), since D ~ d[inf] on P^1
    long closed_form_h1 = 0;  ///< max(0, -d - 1)
};

RiemannRochReport riemann_roch_check(const Divisor& d);
RiemannRochReport riemann_roch_check(const Divisor& d, const TruncationPolicy& policy);

struct Equivalence {
    bool equivalent = false;
    /// f with (f) = D - D' when equivalent.
    std::optional<RationalFunction> witness;
};

/// On P^1, D ~ D' iff deg D = deg D'.
Equivalence linear_equivalence(const Divisor& d, const Divisor& d_prime);

} // namespace mlcech::p1

#pragma once

#include "mlcech/exact/divisor.hpp"
#include "mlcech/exact/laurent_window.hpp"
#include "mlcech/exact/point.hpp"
#include "mlcech/exact/principal_part.hpp"
#include "mlcech/exact/rational_function.hpp"

#include <vector>

namespace mlcech {

/// Exact Laurent coefficients c_n, lo <= n <= hi, of f at a. At infinity the
/// local coordinate is s = 1/t.
LaurentWindow laurent_expand(const RationalFunction& f, const Point& a, long lo, long hi);

/// ord_a(f); additive under multiplication. Throws for f = 0.
long order_at(const RationalFunction& f, const Point& a);

/// Residue of the 1-form f dt at a. At infinity dt = -s^{-2} ds.
GaussRational residue_at(const RationalFunction& f, const Point& a);

struct PartialFractions {
    Poly polynomial;
    std::vector<PrincipalPart> parts;  ///< one per root that is a pole, in root order
};

/// f = polynomial + sum of principal parts at the supplied finite roots.
/// Throws MathError("roots insufficient") if the denominator does not split
/// over them.
PartialFractions partial_fractions(const RationalFunction& f, const std::vector<GaussRational>& roots);

/// Reassembles polynomial + parts into one rational function.
RationalFunction reassemble(const PartialFractions& pf);

/// Finite roots of p with multiplicities: supplied candidates are checked by
/// exact division, linear square-free factors are solved directly. Throws
/// MathError if a factor of degree > 1 remains.
std::vector<std::pair<GaussRational, long>> split_roots(const Poly& p, const std::vector<GaussRational>& candidates);

/// (f) = sum ord_x(f) [x] including infinity; degree 0 by construction.
Divisor divisor_of(const RationalFunction& f, const std::vector<GaussRational>& roots = {});

} // namespace mlcech

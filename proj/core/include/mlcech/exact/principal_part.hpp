#pragma once

#include "mlcech/exact/point.hpp"
#include "mlcech/exact/rational_function.hpp"

#include <map>

namespace mlcech {

/// sum_{j=1..m} A_j u^{-j} at a pole, where u = t - a for a finite pole and
/// u = 1/t at infinity. A_m is nonzero.
class PrincipalPart {
public:
    PrincipalPart(Point pole, std::map<long, GaussRational> coeffs);

    const Point& pole() const { return pole_; }
    const std::map<long, GaussRational>& coeffs() const { return coeffs_; }
    /// A_j, zero when absent.
    GaussRational coeff(long j) const;
    /// m, the pole order.
    long order() const { return coeffs_.rbegin()->first; }

    /// The part as a global rational function of t (a polynomial for infinity).
    RationalFunction to_function() const;

    friend bool operator==(const PrincipalPart&, const PrincipalPart&) = default;

private:
    Point pole_;
    std::map<long, GaussRational> coeffs_;
};

} // namespace mlcech

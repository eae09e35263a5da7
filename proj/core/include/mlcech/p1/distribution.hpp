#pragma once

#include "mlcech/cech/complex.hpp"
#include "mlcech/exact/principal_part.hpp"
#include "mlcech/exact/rational_function.hpp"
#include "mlcech/linalg/matrix.hpp"
#include "mlcech/p1/line_bundle.hpp"

#include <vector>

namespace mlcech::p1 {

/// Mittag-Leffler data on P^1: principal parts at pairwise distinct points.
///
/// The induced cover has one small chart U_k around each pole (containing no
/// other pole) and the complementary chart U_0 = P^1 minus the poles; the
/// local data are f_k = part k on U_k and f_0 = 0 on U_0.
class MLDistribution {
public:
    explicit MLDistribution(std::vector<PrincipalPart> parts);

    const std::vector<PrincipalPart>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    long max_order() const;

private:
    std::vector<PrincipalPart> parts_;
};

/// 1-form omega = f dt written in the t-chart.
struct MeromorphicOneForm {
    RationalFunction coefficient;
};

struct MLObstruction {
    cech::CohomologyReport report;      ///< cohomology of O on the induced cover
    linalg::Vector cocycle;             ///< delta mu in C^1
    bool class_zero = false;
    linalg::Vector witness;             ///< g in C^0 with delta g = delta mu
    RationalFunction solution;          ///< f = f_0 - g_0 = -g_0
    long window = 0;
};

/// Cech datum of O on the cover induced by mu, truncated at window M:
/// Gamma(U_0) = span{1, u_k^{-m}}, Gamma(U_k) = Taylor polynomials in u_k,
/// Gamma(U_0k) = Laurent window [-M, M] in u_k.
CechCover ml_cover_datum(const MLDistribution& mu, long window);

/// Default window: max pole order + 2.
MLObstruction ml_obstruction(const MLDistribution& mu);
MLObstruction ml_obstruction(const MLDistribution& mu, const TruncationPolicy& policy);

/// Sum of the principal parts (the infinity part is a polynomial); verifies
/// every principal part of the result exactly before returning.
RationalFunction ml_solve(const MLDistribution& mu);

/// sum over poles a of mu of Res_a(omega * f_a). MathError if omega is
/// singular at a pole of mu.
GaussRational distribution_residue(const MeromorphicOneForm& omega, const MLDistribution& mu);

} // namespace mlcech::p1

#pragma once

#include "mlcech/cech/nerve.hpp"
#include "mlcech/cech/sheaf_datum.hpp"
#include "mlcech/linalg/matrix.hpp"

#include <optional>
#include <vector>

namespace mlcech::cech {

/// Alternating Cech complex C^0 -> C^1 -> ... -> C^{p_max}.
struct CochainComplex {
    std::vector<std::size_t> dims;        ///< dim C^p
    std::vector<linalg::Matrix> deltas;   ///< deltas[p] : C^p -> C^{p+1}

    /// Throws MathError unless delta_{p+1} delta_p = 0 for every p.
    void check_square_zero() const;
};

/// (delta s)_{a_0..a_{p+1}} = sum_j (-1)^j s_{a_0..^a_j..a_{p+1}} restricted.
/// Validates the datum and verifies delta^2 = 0 before returning.
CochainComplex build_complex(const Nerve& nerve, const SheafDatum& datum);

struct CohomologyReport {
    std::vector<std::size_t> ranks;
    /// Per degree, cocycles whose classes form a basis of H^p.
    std::optional<std::vector<std::vector<linalg::Vector>>> representatives;
};

/// rank H^p = dim ker delta_p - rank delta_{p-1}; ranks via fraction-free
/// elimination, cross-checked against the null-space dimension.
CohomologyReport cohomology(const CochainComplex& cx, bool with_representatives = false);

/// True iff dim H^0 equals the independently computed number of glued
/// global sections.
bool h0_equals_global_sections(const Nerve& nerve, const SheafDatum& datum, std::size_t glued);

} // namespace mlcech::cech

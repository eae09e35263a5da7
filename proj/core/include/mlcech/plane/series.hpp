#pragma once

#include "mlcech/plane/domain.hpp"
#include "mlcech/plane/pole_push.hpp"

#include <map>
#include <vector>

namespace mlcech::plane {

/// I_n = {k : a_k in K_n \ K_{n-1}}.
struct PoleGrouping {
    DomainSpec domain;
    std::vector<PolePart> parts;
    std::map<int, std::vector<std::size_t>> stages;  ///< nonempty I_n only
    int n_max = 0;

    /// f_n = sum over I_n of the principal parts; 0 when I_n is empty.
    Complex f(int n, Complex z) const;
    int last_stage() const { return stages.empty() ? 0 : stages.rbegin()->first; }
};

/// MathError if a pole is outside G, on its boundary, repeated, or first
/// enters an exhaustion compact after stage n_max.
PoleGrouping group_poles(const std::vector<PolePart>& parts, const DomainSpec& domain, int n_max);

struct Stage {
    int n = 0;
    std::vector<std::size_t> indices;
    RationalApprox r;                       ///< absent (empty) for n = 1
    double certified_bound = 0;             ///< on K_{n-1}
    std::vector<std::vector<Complex>> paths;
};

/// f = f_1 + sum_{n >= 2} (f_n - R_n), truncated at stage N.
struct MLSeries {
    DomainSpec domain;
    std::vector<PolePart> parts;
    std::vector<Stage> stages;  ///< ascending n, only stages with poles
    int depth = 0;              ///< N
    double tail_bound = 0;      ///< sum_{n > N} 2^{-n} when poles beyond N exist, else 0

    /// Sum of f_n - R_n over stages lo < n <= hi.
    Complex stage_sum(Complex z, int lo, int hi) const;
};

/// R_n pushes every part of I_n off K_{n-1} with budget 2^{-n} split evenly.
MLSeries assemble(const PoleGrouping& grouping, int depth, const PushOptions& options = {});

/// Same series cut at a smaller depth.
MLSeries truncate(const MLSeries& series, int depth);

struct Evaluation {
    Complex value;
    double abs_error_bound = 0;
};

/// MathError within `exclusion` of a pole, outside G, or outside K_N when the
/// tail bound is nonzero.
Evaluation evaluate(const MLSeries& series, Complex z, double exclusion = 1e-9);

/// max_j |c_{-j} - A_j| / max(1, |A_j|) with c_{-j} from the trapezoid rule on
/// |z - a| = rho. MathError if rho is not below separation_radius or if
/// samples < 64.
double verify_principal_part(const MLSeries& series, const PolePart& part, double rho, int samples);

/// Largest radius accepted by verify_principal_part at a pole: the distance to
/// the other poles and to the boundary of G, and half the distance to K_{n-1}
/// for a pole of stage n.
double separation_radius(const MLSeries& series, const PolePart& part);

} // namespace mlcech::plane

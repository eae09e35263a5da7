#pragma once

#include "mlcech/exact/gauss_rational.hpp"
#include "mlcech/torus/weierstrass.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace mlcech::torus {

/// Default tolerances for the genus-1 checks.
struct Tolerances {
    double residue = 1e-12;
    double periodicity = 1e-6;
    double coefficient = 1e-5;
    double identity = 1e-5;
    double legendre = 1e-6;
};

/// sum_j A_j (z - point)^{-j} on the torus. `exact` is either empty or holds
/// the same coefficients as exact Gaussian rationals.
struct TorusPart {
    Complex point;
    std::vector<Complex> coeffs;  ///< coeffs[j - 1] = A_j
    std::vector<GaussRational> exact;

    long order() const { return static_cast<long>(coeffs.size()); }
};

class TorusDistribution {
public:
    /// Reduces points into the fundamental parallelogram. SchemaError on empty
    /// coefficient lists or a zero leading coefficient; MathError if two points
    /// agree mod the lattice.
    TorusDistribution(const Lattice& lattice, std::vector<TorusPart> parts);

    const Lattice& lattice() const { return lattice_; }
    const std::vector<TorusPart>& parts() const { return parts_; }
    /// min over pairs of the distance between points mod the lattice, and |w1|.
    double min_separation() const;
    bool is_exact() const;

private:
    Lattice lattice_;
    std::vector<TorusPart> parts_;
};

struct ResidueTest {
    Complex sum;
    bool solvable = false;
    bool exact = false;
};

/// Residue of mu against dz: sum of the A_1 coefficients. Exact inputs are
/// compared to zero exactly, float inputs within `tol`.
ResidueTest residue_test(const TorusDistribution& mu, double tol = Tolerances{}.residue);

/// sum_k [A_1k zeta(z - z_k) + sum_{j>=2} A_jk (-1)^j/(j-1)! wp^{(j-2)}(z - z_k)]
class EllipticCandidate {
public:
    EllipticCandidate(std::shared_ptr<const WeierstrassContext> ctx, TorusDistribution mu);

    Complex operator()(Complex z) const;
    const WeierstrassContext& context() const { return *ctx_; }
    const TorusDistribution& distribution() const { return mu_; }

private:
    std::shared_ptr<const WeierstrassContext> ctx_;
    TorusDistribution mu_;
};

/// Elliptic solution; MathError "no solution exists" when the residue test fails.
EllipticCandidate torus_solve(const TorusDistribution& mu, std::shared_ptr<const WeierstrassContext> ctx,
                              double tol = Tolerances{}.residue);

/// The same construction with the residue test skipped (negative controls).
EllipticCandidate force_candidate(const TorusDistribution& mu, std::shared_ptr<const WeierstrassContext> ctx);

struct PeriodicityReport {
    double max_deviation = 0;
    bool within_tolerance = false;
    std::size_t samples = 0;
};

/// max |f(z + w_i) - f(z)| over the given points. MathError if a point, or its
/// translate, is closer than `exclusion` to a pole.
PeriodicityReport check_periodicity(const EllipticCandidate& f, const std::vector<Complex>& points, double tol,
                                    double exclusion);

/// Same over `samples` quasi-random points of the fundamental parallelogram,
/// skipping those within 0.05 |w1| of a pole. samples >= 10.
PeriodicityReport check_periodicity(const EllipticCandidate& f, int samples,
                                    double tol = Tolerances{}.periodicity);

/// Max relative error between trapezoid-extracted Laurent coefficients of f
/// at each pole and the prescribed ones. Radius: 0.4 min_separation.
double coefficient_error(const EllipticCandidate& f, int samples = 256);

} // namespace mlcech::torus

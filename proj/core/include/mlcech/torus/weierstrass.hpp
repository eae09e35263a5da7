#pragma once

#include <complex>

namespace mlcech::torus {

using Complex = std::complex<double>;

/// Period lattice Z w1 + Z w2, stored Gauss-reduced with |w1| <= |w2| and
/// Im(w2 / w1) > 0.
class Lattice {
public:
    /// SchemaError if w1, w2 are R-linearly dependent or zero.
    Lattice(Complex w1, Complex w2);

    Complex w1() const { return w1_; }
    Complex w2() const { return w2_; }
    /// w2 / w1, in the standard fundamental domain.
    Complex tau() const { return w2_ / w1_; }

    /// Real coordinates (a, b) with z = a w1 + b w2.
    std::pair<double, double> coordinates(Complex z) const;
    /// Representative of z in the parallelogram a, b in [0, 1).
    Complex reduce(Complex z) const;
    /// Distance from z to the nearest lattice point.
    double distance_to_lattice(Complex z) const;

private:
    Complex w1_;
    Complex w2_;
};

/// Truncation of the row sums used for zeta, wp and their derivatives.
///
/// Each row {m w1 + n w2 : m in Z} is summed in closed form, so only the row
/// index is truncated: rows whose distance from the evaluation point exceeds
/// r_cut are dropped. The dropped rows decay like exp(-2 pi dist / |w1|).
class WeierstrassContext {
public:
    /// r_cut <= 0 picks the default 8 |w1|.
    explicit WeierstrassContext(Lattice lattice, double r_cut = 0);

    const Lattice& lattice() const { return lattice_; }
    double r_cut() const { return r_cut_; }
    Complex g2() const { return g2_; }
    Complex g3() const { return g3_; }
    /// Bound on the dropped rows of wp for any z.
    double tail_estimate() const { return tail_; }

    /// Weierstrass wp; MathError on lattice points.
    Complex wp(Complex z) const;
    /// k-th derivative of wp (k = 0 is wp itself).
    Complex wp_derivative(Complex z, int k) const;
    /// Weierstrass zeta.
    Complex zeta(Complex z) const;
    /// Quasi-periods eta_i = 2 zeta(w_i / 2), so zeta(z + w_i) = zeta(z) + eta_i.
    Complex eta1() const { return eta1_; }
    Complex eta2() const { return eta2_; }

private:
    Lattice lattice_;
    double r_cut_;
    int rows_;
    Complex g2_;
    Complex g3_;
    Complex e2_;  ///< G2 in the row-by-row summation order, normalized lattice
    double tail_;
    Complex eta1_;
    Complex eta2_;

    void check_off_lattice(Complex z) const;
};

} // namespace mlcech::torus

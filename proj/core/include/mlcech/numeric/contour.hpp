#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace mlcech::numeric {

using Complex = std::complex<double>;
using ComplexFn = std::function<Complex(Complex)>;

/// Laurent coefficient c_n of f at a by the trapezoid rule on |z - a| = rho:
/// c_n ~ (1/Q) sum_q f(a + rho w_q) (rho w_q)^{-n}, w_q = exp(2 pi i q / Q).
Complex contour_coefficient(const ComplexFn& f, Complex a, double rho, int samples, long n);

/// c_{-1}, ..., c_{-m} from one set of samples.
std::vector<Complex> principal_coefficients(const ComplexFn& f, Complex a, double rho, int samples, long m);

} // namespace mlcech::numeric

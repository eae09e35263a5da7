#include "mlcech/numeric/contour.hpp"

#include "mlcech/error.hpp"

#include <cmath>
#include <numbers>

namespace mlcech::numeric {

namespace {

std::vector<Complex> samples_on_circle(const ComplexFn& f, Complex a, double rho, int samples, std::vector<Complex>& nodes) {
    if (samples < 1 || !(rho > 0)) {
        throw MathError("contour needs a positive radius and sample count");
    }
    std::vector<Complex> values(static_cast<std::size_t>(samples));
    nodes.resize(values.size());
    for (int q = 0; q < samples; ++q) {
        const double theta = 2 * std::numbers::pi * q / samples;
        nodes[static_cast<std::size_t>(q)] = std::polar(rho, theta);
        values[static_cast<std::size_t>(q)] = f(a + nodes[static_cast<std::size_t>(q)]);
    }
    return values;
}

} // namespace

Complex contour_coefficient(const ComplexFn& f, Complex a, double rho, int samples, long n) {
    std::vector<Complex> nodes;
    auto values = samples_on_circle(f, a, rho, samples, nodes);
    Complex sum = 0;
    for (std::size_t q = 0; q < values.size(); ++q) {
        sum += values[q] * std::pow(nodes[q], static_cast<double>(-n));
    }
    return sum / static_cast<double>(samples);
}

std::vector<Complex> principal_coefficients(const ComplexFn& f, Complex a, double rho, int samples, long m) {
    std::vector<Complex> nodes;
    auto values = samples_on_circle(f, a, rho, samples, nodes);
    std::vector<Complex> out(static_cast<std::size_t>(m));
    for (std::size_t q = 0; q < values.size(); ++q) {
        Complex w = values[q];
        for (long j = 1; j <= m; ++j) {
            w *= nodes[q];
            out[static_cast<std::size_t>(j - 1)] += w;
        }
    }
    for (auto& c : out) {
        c /= static_cast<double>(samples);
    }
    return out;
}

} // namespace mlcech::numeric

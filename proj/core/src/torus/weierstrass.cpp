#include "mlcech/torus/weierstrass.hpp"

#include "mlcech/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace mlcech::torus {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxDerivative = 20;

/// cot(pi w) and csc^2(pi w) without overflow for large |Im w|.
std::pair<Complex, Complex> cot_csc2(Complex w) {
    const Complex i(0, 1);
    if (w.imag() >= 0) {
        const Complex e = std::exp(2.0 * i * kPi * w);  // |e| <= 1
        const Complex d = e - 1.0;
        return {i * (e + 1.0) / d, -4.0 * e / (d * d)};
    }
    const Complex e = std::exp(-2.0 * i * kPi * w);
    const Complex d = 1.0 - e;
    return {i * (1.0 + e) / d, -4.0 * e / (d * d)};
}

/// sum_m (w + m)^{-s} = pi^s csc^2(pi w) Q_s(cot(pi w)) for s >= 2;
/// returns the coefficient lists of Q_2 .. Q_{kMaxDerivative + 2}.
const std::vector<std::vector<double>>& q_polys() {
    static const std::vector<std::vector<double>> q = [] {
        std::vector<std::vector<double>> out(kMaxDerivative + 3);
        out[2] = {1.0};
        for (int s = 2; s < kMaxDerivative + 2; ++s) {
            // Q_{s+1} = ((1 + c^2) Q_s)' / s = (2 c Q_s + (1 + c^2) Q_s') / s
            const auto& qs = out[static_cast<std::size_t>(s)];
            std::vector<double> next(qs.size() + 1, 0.0);
            for (std::size_t k = 0; k < qs.size(); ++k) {
                next[k + 1] += 2.0 * qs[k];
                if (k >= 1) {
                    next[k - 1] += static_cast<double>(k) * qs[k];
                    next[k + 1] += static_cast<double>(k) * qs[k];
                }
            }
            for (auto& c : next) {
                c /= s;
            }
            while (next.size() > 1 && next.back() == 0.0) {
                next.pop_back();
            }
            out[static_cast<std::size_t>(s + 1)] = std::move(next);
        }
        return out;
    }();
    return q;
}

Complex row_power_sum(Complex w, int s) {
    const auto [c, k] = cot_csc2(w);
    const auto& q = q_polys()[static_cast<std::size_t>(s)];
    Complex acc = 0;
    for (std::size_t j = q.size(); j-- > 0;) {
        acc = acc * c + q[j];
    }
    return std::pow(kPi, s) * k * acc;
}

/// sum over the nonzero normalized lattice of w^{-s} for even s >= 2,
/// rows summed in order of |n|.
Complex eisenstein(Complex tau, int s, int rows) {
    // 2 zeta(s) for s = 2, 4, 6.
    Complex sum = s == 2 ? kPi * kPi / 3 : s == 4 ? std::pow(kPi, 4) / 45 : 2 * std::pow(kPi, 6) / 945;
    for (int n = 1; n <= rows; ++n) {
        sum += 2.0 * row_power_sum(static_cast<double>(n) * tau, s);
    }
    return sum;
}

} // namespace

Lattice::Lattice(Complex w1, Complex w2) : w1_(w1), w2_(w2) {
    if (!std::isfinite(std::abs(w1)) || !std::isfinite(std::abs(w2)) || std::abs(w1) == 0 || std::abs(w2) == 0) {
        throw SchemaError("lattice periods must be finite and nonzero");
    }
    const double im = (w2 / w1).imag();
    if (std::abs(im) < 1e-12) {
        throw SchemaError("lattice periods are linearly dependent over R");
    }
    if (im < 0) {
        w2_ = -w2_;
    }
    for (int it = 0; it < 200; ++it) {
        if (std::abs(w2_) < std::abs(w1_)) {
            const Complex t = w1_;
            w1_ = w2_;
            w2_ = -t;
        }
        const double k = std::round((w2_ / w1_).real());
        if (k == 0) {
            break;
        }
        w2_ -= k * w1_;
    }
}

std::pair<double, double> Lattice::coordinates(Complex z) const {
    const Complex u = z / w1_;
    const Complex t = tau();
    const double b = u.imag() / t.imag();
    return {u.real() - b * t.real(), b};
}

Complex Lattice::reduce(Complex z) const {
    auto [a, b] = coordinates(z);
    return z - std::floor(a) * w1_ - std::floor(b) * w2_;
}

double Lattice::distance_to_lattice(Complex z) const {
    const auto [a, b] = coordinates(z);
    const double ra = std::round(a);
    const double rb = std::round(b);
    double best = std::abs(z);
    for (int da = -1; da <= 1; ++da) {
        for (int db = -1; db <= 1; ++db) {
            best = std::min(best, std::abs(z - (ra + da) * w1_ - (rb + db) * w2_));
        }
    }
    return best;
}

WeierstrassContext::WeierstrassContext(Lattice lattice, double r_cut) : lattice_(lattice) {
    const double scale = std::abs(lattice_.w1());
    r_cut_ = r_cut > 0 ? r_cut : 8 * scale;
    const Complex tau = lattice_.tau();
    rows_ = std::max(1, static_cast<int>(std::ceil(r_cut_ / scale / tau.imag())));

    e2_ = eisenstein(tau, 2, rows_);
    const Complex w1 = lattice_.w1();
    g2_ = 60.0 * eisenstein(tau, 4, rows_) / std::pow(w1, 4);
    g3_ = 140.0 * eisenstein(tau, 6, rows_) / std::pow(w1, 6);

    // Dropped rows sit at height >= (rows + k) Im tau from the point.
    double tail = 0;
    for (int k = 1; k < 200; ++k) {
        const double q = std::exp(-2 * kPi * (rows_ + k) * tau.imag());
        const double term = 8 * kPi * kPi * q / ((1 - q) * (1 - q));
        tail += term;
        if (term < 1e-300) {
            break;
        }
    }
    tail_ = tail / (scale * scale);

    eta1_ = 2.0 * zeta(lattice_.w1() / 2.0);
    eta2_ = 2.0 * zeta(lattice_.w2() / 2.0);
}

void WeierstrassContext::check_off_lattice(Complex z) const {
    if (lattice_.distance_to_lattice(z) <= 1e-12 * std::abs(lattice_.w1())) {
        throw MathError("evaluation point lies on the lattice");
    }
}

Complex WeierstrassContext::wp(Complex z) const { return wp_derivative(z, 0); }

Complex WeierstrassContext::wp_derivative(Complex z, int k) const {
    if (k < 0 || k > kMaxDerivative) {
        throw MathError("wp derivative order out of range");
    }
    check_off_lattice(z);
    const Complex w1 = lattice_.w1();
    const Complex tau = lattice_.tau();
    const Complex u = z / w1;
    const double n0 = -u.imag() / tau.imag();
    const int lo = static_cast<int>(std::floor(n0)) - rows_;
    const int hi = static_cast<int>(std::ceil(n0)) + rows_;
    Complex sum = 0;
    for (int n = lo; n <= hi; ++n) {
        sum += row_power_sum(u + static_cast<double>(n) * tau, k + 2);
    }
    if (k == 0) {
        return (sum - e2_) / (w1 * w1);
    }
    double fact = 1;
    for (int j = 2; j <= k + 1; ++j) {
        fact *= j;
    }
    return (k % 2 == 0 ? fact : -fact) * sum / std::pow(w1, k + 2);
}

Complex WeierstrassContext::zeta(Complex z) const {
    check_off_lattice(z);
    const Complex w1 = lattice_.w1();
    const Complex tau = lattice_.tau();
    const Complex u = z / w1;
    const double n0 = -u.imag() / tau.imag();
    const int lo = std::min(static_cast<int>(std::floor(n0)), 0) - rows_;
    const int hi = std::max(static_cast<int>(std::ceil(n0)), 0) + rows_;
    Complex sum = e2_ * u + kPi * cot_csc2(u).first;
    for (int n = lo; n <= hi; ++n) {
        if (n == 0) {
            continue;
        }
        const Complex nt = static_cast<double>(n) * tau;
        sum += kPi * (cot_csc2(u + nt).first - cot_csc2(nt).first);
    }
    return sum / w1;
}

} // namespace mlcech::torus

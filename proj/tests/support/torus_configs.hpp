#pragma once

#include "mlcech/torus/torus_ml.hpp"
#include "random.hpp"

#include <random>
#include <vector>

namespace mlcech::testing {

inline torus::Lattice random_lattice(Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const torus::Complex w1 = std::polar(0.8 + 0.7 * u(rng), 6.283185307179586 * u(rng));
    const torus::Complex tau(2 * u(rng) - 1, 0.6 + 1.4 * u(rng));
    return {w1, w1 * tau};
}

/// 1..max_parts principal parts of order 1..4, pairwise separated by at least
/// 0.15 |w1| mod the lattice. With `balanced` the residues sum to zero.
/// `exact` draws coefficients from Q(i) and keeps the exact copy.
inline torus::TorusDistribution random_torus_distribution(Rng& rng, const torus::Lattice& lat, bool balanced,
                                                          bool exact, int max_parts = 6) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int count = uniform(rng, 1, max_parts);
    std::vector<torus::TorusPart> parts;
    while (static_cast<int>(parts.size()) < count) {
        const torus::Complex z = u(rng) * lat.w1() + u(rng) * lat.w2();
        bool close = false;
        for (const auto& p : parts) {
            close = close || lat.distance_to_lattice(z - p.point) < 0.15 * std::abs(lat.w1());
        }
        if (close) {
            continue;
        }
        torus::TorusPart part;
        part.point = z;
        const int order = uniform(rng, 1, 4);
        for (int j = 0; j < order; ++j) {
            if (exact) {
                part.exact.push_back(nonzero_gauss(rng));
                part.coeffs.push_back(part.exact.back().to_complex());
            } else {
                part.coeffs.emplace_back(2 * u(rng) - 1, 2 * u(rng) - 1);
            }
        }
        parts.push_back(std::move(part));
    }
    if (balanced) {
        // A single part can only be balanced with a zero residue.
        auto& last = parts.back();
        if (exact) {
            GaussRational rest;
            for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
                rest += parts[k].exact.front();
            }
            last.exact.front() = -rest;
            last.coeffs.front() = last.exact.front().to_complex();
        } else {
            torus::Complex rest = 0;
            for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
                rest += parts[k].coeffs.front();
            }
            last.coeffs.front() = -rest;
        }
        if (last.order() == 1 && last.coeffs.front() == torus::Complex(0)) {
            last.coeffs.push_back({1, 0});
            if (exact) {
                last.exact.emplace_back(1);
            }
        }
    }
    return {lat, std::move(parts)};
}

} // namespace mlcech::testing

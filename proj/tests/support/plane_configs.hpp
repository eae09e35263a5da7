#pragma once

#include "mlcech/plane/series.hpp"

#include <random>
#include <vector>

namespace mlcech::testing {

struct PlaneConfig {
    plane::DomainSpec domain;
    std::vector<plane::PolePart> parts;
    int n_max = 0;
};

/// Random domain from {plane, disc, annulus} with up to `max_poles` poles.
/// A stage-n pole sits in the ring K_n minus K_{n-1}, at least the fraction
/// `margin` of the ring's local width away from K_{n-1}, and `separation`
/// away from every other pole.
inline PlaneConfig random_plane_config(std::mt19937_64& rng, int kind, std::size_t max_poles = 20,
                                       double margin = 0.4, double separation = 0.08) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    PlaneConfig cfg;
    switch (kind % 3) {
    case 0:
        cfg.domain = plane::DomainSpec::whole_plane();
        cfg.n_max = 5;
        break;
    case 1:
        cfg.domain = plane::DomainSpec::disc({0.3 * (u(rng) - 0.5), 0.3 * (u(rng) - 0.5)}, 1.5 + 1.5 * u(rng));
        cfg.n_max = 4;
        break;
    default:
        cfg.domain = plane::DomainSpec::annulus({0, 0}, 0.5 + 0.5 * u(rng), 3 + u(rng));
        cfg.n_max = 4;
        break;
    }
    const auto count = std::uniform_int_distribution<std::size_t>(1, max_poles)(rng);
    for (int attempt = 0; attempt < 200000 && cfg.parts.size() < count; ++attempt) {
        const int n = std::uniform_int_distribution<int>(1, cfg.n_max)(rng);
        const plane::Complex z = std::polar(n * std::sqrt(u(rng)), 2 * 3.141592653589793 * u(rng));
        const auto kn = plane::exhaust(cfg.domain, n);
        if (!cfg.domain.contains(z) || !kn.contains(z)) {
            continue;
        }
        if (n > 1) {
            const double outside = plane::exhaust(cfg.domain, n - 1).distance_lower_bound(z);
            const double depth = -kn.distance_lower_bound(z);
            if (outside < margin * (outside + depth)) {
                continue;
            }
        }
        if (cfg.domain.boundary_distance(z) < 2 * separation) {
            continue;
        }
        bool close = false;
        for (const auto& p : cfg.parts) {
            close = close || std::abs(p.a - z) < separation;
        }
        if (close) {
            continue;
        }
        plane::PolePart part;
        part.a = z;
        const int order = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int j = 0; j < order; ++j) {
            part.coeffs.emplace_back(2 * u(rng) - 1, 2 * u(rng) - 1);
        }
        cfg.parts.push_back(part);
    }
    return cfg;
}

} // namespace mlcech::testing

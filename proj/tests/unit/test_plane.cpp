#include "doctest.h"
#include "plane_configs.hpp"

#include "mlcech/error.hpp"
#include "mlcech/plane/series.hpp"

#include <cmath>
#include <numbers>

using namespace mlcech;
using namespace mlcech::plane;

namespace {

PolePart simple(Complex a, std::vector<Complex> coeffs = {1.0}) { return {a, std::move(coeffs)}; }

double sampled_sup(const std::function<Complex(Complex)>& g, const std::vector<Complex>& zs) {
    double worst = 0;
    for (auto z : zs) {
        worst = std::max(worst, std::abs(g(z)));
    }
    return worst;
}

} // namespace

TEST_CASE("exhaustion examples") {
    auto k = exhaust(DomainSpec::whole_plane(), 3);
    CHECK(k.contains(3.0));
    CHECK(!k.contains(Complex(3.0 + 1e-9)));
    CHECK(k.max_modulus() == doctest::Approx(3));

    auto disc = exhaust(DomainSpec::disc(0, 1), 4);
    CHECK(disc.contains(0.75));
    CHECK(!disc.contains(Complex(0, 0.7501)));
    CHECK(disc.max_modulus() == doctest::Approx(0.75));

    auto ring = exhaust(DomainSpec::annulus(0, 1, 4), 2);
    CHECK(ring.contains(1.5));
    CHECK(ring.contains(Complex(0, -2)));
    CHECK(!ring.contains(1.49));
    CHECK(!ring.contains(2.01));
    CHECK(exhaust(DomainSpec::annulus(0, 1, 4), 1).empty());
    CHECK(DomainSpec::annulus(0, 1, 4).targets().size() == 2);

    auto half = exhaust(DomainSpec::halfplane({0, 1}, 0), 2);
    CHECK(half.contains(Complex(1, 0.5)));
    CHECK(!half.contains(Complex(1, 0.4)));
}

TEST_CASE("exhaustion nesting on boundary samples") {
    const std::vector<DomainSpec> domains{DomainSpec::whole_plane(), DomainSpec::disc({0.2, -0.1}, 2),
                                          DomainSpec::annulus(0, 1, 4), DomainSpec::halfplane({1, 1}, -0.5)};
    for (const auto& d : domains) {
        for (int n = 1; n <= 12; ++n) {
            auto kn = exhaust(d, n);
            auto next = exhaust(d, n + 1);
            for (auto z : kn.boundary_samples(90)) {
                CHECK(next.contains_interior(z, 1e-9));
                CHECK(d.contains(z));
            }
        }
    }
}

TEST_CASE("pole grouping") {
    auto g = group_poles({simple(0), simple(2.5)}, DomainSpec::whole_plane(), 10);
    CHECK(g.stages.at(1) == std::vector<std::size_t>{0});
    CHECK(g.stages.at(3) == std::vector<std::size_t>{1});
    CHECK(g.stages.size() == 2);
    CHECK(g.f(2, 0.3) == Complex(0));

    auto single = group_poles({simple(0)}, DomainSpec::whole_plane(), 10);
    CHECK(single.stages.size() == 1);
    CHECK(single.last_stage() == 1);

    auto disc = group_poles({simple(0.9)}, DomainSpec::disc(0, 1), 20);
    CHECK(disc.stages.begin()->first == 10);

    CHECK_THROWS_AS(group_poles({simple(1.0)}, DomainSpec::disc(0, 1), 20), MathError);
    CHECK_THROWS_AS(group_poles({simple(2.0)}, DomainSpec::disc(0, 1), 20), MathError);
    CHECK_THROWS_AS(group_poles({simple(0.5), simple(0.5)}, DomainSpec::disc(0, 1), 20), MathError);
    CHECK_THROWS_AS(group_poles({simple(0.99)}, DomainSpec::disc(0, 1), 20), MathError);
}

TEST_CASE("push 1/(z-5) off the unit disc") {
    auto k = exhaust(DomainSpec::whole_plane(), 1);
    auto pushed = push_pole(simple(5), k, SpherePoint::infinity(), 1e-6);
    CHECK(pushed.certified_bound <= 1e-6);
    REQUIRE(pushed.r.terms.size() == 1);
    const auto& term = pushed.r.terms[0];
    CHECK(term.pole.infinite);
    // oracle: -sum z^j / 5^{j+1}
    for (std::size_t j = 0; j < term.coeffs.size(); ++j) {
        CHECK(std::abs(term.coeffs[j] + std::pow(0.2, static_cast<double>(j + 1))) < 1e-15);
    }
    const auto degree = static_cast<double>(term.coeffs.size() - 1);
    CHECK(std::pow(0.2, degree + 1) / 0.8 <= 1e-6);
    std::vector<Complex> circle;
    for (int q = 0; q < 720; ++q) {
        circle.push_back(std::polar(1.0, 2 * std::numbers::pi * q / 720));
    }
    const double sup = sampled_sup([&](Complex z) { return 1.0 / (z - 5.0) - pushed.r(z); }, circle);
    CHECK(sup <= pushed.certified_bound);
}

TEST_CASE("push onto a pole already in E") {
    auto k = exhaust(DomainSpec::annulus(0, 1, 4), 2);
    auto pushed = push_pole(simple(0), k, SpherePoint::at(0), 1e-6);
    CHECK(pushed.certified_bound == 0);
    CHECK(pushed.r(2.0) == Complex(0.5));
}

TEST_CASE("push into the annulus hole") {
    auto k = exhaust(DomainSpec::annulus(0, 1, 4), 2);
    PolePart part = simple(0.5, {1.0, Complex(0, 0.5)});
    CHECK(natural_target(part, k) == SpherePoint::at(0));
    auto pushed = push_pole(part, k, SpherePoint::at(0), 1e-8);
    for (const auto& p : pushed.r.poles()) {
        CHECK(p == SpherePoint::at(0));
    }
    std::vector<Complex> zs = k.boundary_samples(360);
    const double sup = sampled_sup([&](Complex z) { return part(z) - pushed.r(z); }, zs);
    CHECK(sup <= pushed.certified_bound);
    CHECK(pushed.certified_bound <= 1e-8);
    CHECK_THROWS_AS(push_pole(part, k, SpherePoint::infinity(), 1e-8), MathError);
    CHECK_THROWS_AS(push_pole(simple(1.7), k, SpherePoint::infinity(), 1e-8), MathError);
}

TEST_CASE("push off a one-point compact") {
    // K_1 of the unit disc is {0}
    auto k = exhaust(DomainSpec::disc(0, 1), 1);
    CHECK(k.hub_radius() == 0);
    PolePart part = simple(0.5, {1.0, 0.5});
    auto pushed = push_pole(part, k, SpherePoint::infinity(), 1e-6);
    CHECK(pushed.certified_bound <= 1e-6);
    CHECK(std::abs(part(0.0) - pushed.r(0.0)) <= pushed.certified_bound);
}

TEST_CASE("push off an off-centre disc") {
    const Complex c(0.15, -0.1);
    auto k = exhaust(DomainSpec::disc(c, 1.5), 3);
    CHECK(k.hub() == c);
    CHECK(k.hub_radius() == doctest::Approx(1.5 - 1.0 / 3));
    // close to K, so the path is long and the Taylor section sizeable
    PolePart part = simple(c + std::polar(1.5 - 1.0 / 3 + 0.05, -1.6), {0.0, 1.0});
    auto pushed = push_pole(part, k, SpherePoint::infinity(), 1.0 / 32);
    const double sup = sampled_sup([&](Complex z) { return part(z) - pushed.r(z); }, k.boundary_samples(360));
    CHECK(sup <= pushed.certified_bound);
    CHECK(pushed.certified_bound <= 1.0 / 32);
}

TEST_CASE("series with a single pole") {
    auto g = group_poles({simple(0)}, DomainSpec::whole_plane(), 10);
    auto s = assemble(g, 1);
    REQUIRE(s.stages.size() == 1);
    CHECK(s.stages[0].r.terms.empty());
    auto e = evaluate(s, 2.0);
    CHECK(e.value == Complex(0.5));
    CHECK(e.abs_error_bound == 0);
    CHECK_THROWS_AS(evaluate(s, 0.0), MathError);
    CHECK(verify_principal_part(s, s.parts[0], 0.5, 256) <= 1e-12);

    auto g2 = group_poles({simple(0, {0.0, 1.0})}, DomainSpec::whole_plane(), 10);
    auto s2 = assemble(g2, 1);
    CHECK(verify_principal_part(s2, s2.parts[0], 0.5, 256) <= 1e-9);
    CHECK_THROWS_AS(verify_principal_part(s2, s2.parts[0], 0.5, 32), MathError);
}

TEST_CASE("five poles on the plane") {
    std::vector<PolePart> parts;
    for (int k = 1; k <= 5; ++k) {
        parts.push_back(simple(static_cast<double>(k)));
    }
    auto g = group_poles(parts, DomainSpec::whole_plane(), 10);
    for (int k = 1; k <= 5; ++k) {
        CHECK(g.stages.at(k) == std::vector<std::size_t>{static_cast<std::size_t>(k - 1)});
    }
    auto s = assemble(g, 6);
    for (const auto& st : s.stages) {
        if (st.n < 2) {
            continue;
        }
        for (const auto& p : st.r.poles()) {
            CHECK(p.infinite);
        }
        CHECK(st.certified_bound <= std::ldexp(1.0, -st.n));
        auto zs = exhaust(s.domain, st.n - 1).boundary_samples(360);
        const double sup = sampled_sup([&](Complex z) { return g.f(st.n, z) - st.r(z); }, zs);
        CHECK(sup <= st.certified_bound);
    }
    for (const auto& p : s.parts) {
        CHECK(verify_principal_part(s, p, 0.3, 256) <= 1e-6);
    }
    const Complex z(0.5, 0.5);
    for (int n = 1; n <= 5; ++n) {
        auto a = truncate(s, n);
        auto b = truncate(s, n + 5);
        CHECK(std::abs(evaluate(a, z).value - evaluate(b, z).value) <= std::ldexp(1.0, -n + 1));
        CHECK(std::abs(s.stage_sum(z, n, n + 5)) <= std::ldexp(1.0, -n + 1));
    }
    CHECK(truncate(s, 3).tail_bound == doctest::Approx(0.125));
    CHECK_THROWS_AS(evaluate(truncate(s, 3), Complex(10, 0)), MathError);
}

TEST_CASE("four poles near the unit circle") {
    std::vector<PolePart> parts;
    Complex ik = 1;
    for (int k = 0; k < 4; ++k) {
        parts.push_back(simple(0.9 * ik));
        ik *= Complex(0, 1);
    }
    auto g = group_poles(parts, DomainSpec::disc(0, 1), 20);
    CHECK(g.stages.size() == 1);
    CHECK(g.stages.begin()->first == 10);
    auto s = assemble(g, 10);
    REQUIRE(s.stages.size() == 1);
    CHECK(s.stages[0].certified_bound <= std::ldexp(1.0, -10));
    for (const auto& p : s.parts) {
        const double rho = 0.5 * separation_radius(s, p);
        CHECK(verify_principal_part(s, p, rho, 256) <= 1e-6);
        CHECK_THROWS_AS(verify_principal_part(s, p, 2 * rho, 256), MathError);
    }
}

TEST_CASE("random configurations") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 6; ++trial) {
        auto cfg = testing::random_plane_config(rng, trial, 8);
        auto g = group_poles(cfg.parts, cfg.domain, cfg.n_max);
        auto s = assemble(g, g.last_stage());
        const auto targets = cfg.domain.targets();
        for (const auto& st : s.stages) {
            for (const auto& p : st.r.poles()) {
                CHECK(std::find(targets.begin(), targets.end(), p) != targets.end());
            }
            if (st.n < 2) {
                continue;
            }
            CHECK(st.certified_bound <= std::ldexp(1.0, -st.n));
            auto zs = exhaust(s.domain, st.n - 1).boundary_samples(240);
            CHECK(sampled_sup([&](Complex z) { return g.f(st.n, z) - st.r(z); }, zs) <= st.certified_bound);
        }
        for (const auto& p : s.parts) {
            const double rho = std::min(0.5, 0.2 * separation_radius(s, p));
            CHECK(verify_principal_part(s, p, rho, 256) <= 1e-6);
        }
    }
}

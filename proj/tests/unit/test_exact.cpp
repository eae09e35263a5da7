#include "doctest.h"
#include "random.hpp"

#include "mlcech/error.hpp"
#include "mlcech/exact/expansion.hpp"
#include "mlcech/exact/json.hpp"

using namespace mlcech;
using mlcech::testing::Rng;

namespace {

RationalFunction t() { return RationalFunction::variable(); }
RationalFunction c(long v) { return RationalFunction(GaussRational(v)); }
const GaussRational I(Rational(0), Rational(1));

} // namespace

TEST_CASE("gauss rational arithmetic and text") {
    GaussRational a(Rational(1, 2), Rational(-3, 4));
    CHECK(to_string(a) == "1/2-3/4i");
    CHECK(to_string(I) == "i");
    CHECK(parse_gauss_rational("1/2-3/4i") == a);
    CHECK(parse_gauss_rational("-i") == -I);
    CHECK(a * a.inverse() == GaussRational(1));
    CHECK(I * I == GaussRational(-1));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("010/08") == Rational(5, 4));
    CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
    CHECK_THROWS_AS(parse_gauss_rational("abc"), SchemaError);
}

TEST_CASE("conversion to double rounds to nearest") {
    CHECK(to_double(Rational(1, 5)) == 0.2);
    CHECK(to_double(Rational(-1, 10)) == -0.1);
    CHECK(to_double(Rational(2, 3)) == 2.0 / 3.0);
    CHECK(to_double(parse_rational("0.3")) == 0.3);
    CHECK(to_double(Rational(0)) == 0.0);
    CHECK(GaussRational(Rational(1, 5), Rational(-7, 10)).to_complex() == std::complex<double>(0.2, -0.7));
    // every double is its own nearest neighbour
    for (double x : {0.1, 1e-300, 123456.789, -5e17}) {
        CHECK(to_double(Rational(x)) == x);
    }
}

TEST_CASE("poly basics") {
    Poly p = Poly::from_roots({1, 2});
    CHECK(p == Poly({2, -3, 1}));
    CHECK(p.eval(3) == GaussRational(2));
    CHECK(p.shift(1) == Poly({0, -1, 1}));
    auto [q, r] = divmod(Poly::monomial(3), Poly::linear_root(2));
    CHECK(q == Poly({4, 2, 1}));
    CHECK(r == Poly(GaussRational(8)));
    CHECK(gcd(Poly::from_roots({1, 1, 2}), Poly::from_roots({1, 3})) == Poly::linear_root(1));
    auto sqf = squarefree_decomposition(Poly::from_roots({1, 1, 2, 3, 3, 3}));
    REQUIRE(sqf.size() == 3);
    CHECK(sqf[0] == Poly::linear_root(2));
    CHECK(sqf[1] == Poly::linear_root(1));
    CHECK(sqf[2] == Poly::linear_root(3));
    CHECK(Poly().degree() == Poly::kZeroDegree);
}

TEST_CASE("rational functions are canonical") {
    RationalFunction f(Poly({-2, 2}), Poly({-1, 0, 1}));  // 2(t-1)/((t-1)(t+1))
    CHECK(f.num() == Poly(GaussRational(2)));
    CHECK(f.den() == Poly({1, 1}));
    CHECK(f == c(2) / (t() + c(1)));
    CHECK(f.invert_variable() == c(2) * t() / (c(1) + t()));
    CHECK_THROWS_AS(f.eval(-1), MathError);
}

TEST_CASE("laurent_expand examples") {
    auto w = laurent_expand(c(1) / t(), 0, -2, 1);
    CHECK(w.coeff(-2) == GaussRational(0));
    CHECK(w.coeff(-1) == GaussRational(1));
    CHECK(w.coeff(0) == GaussRational(0));
    CHECK(w.coeff(1) == GaussRational(0));

    auto w2 = laurent_expand(c(1) / (t() * (t() - c(1))), 0, -1, 1);
    for (long n = -1; n <= 1; ++n) {
        CHECK(w2.coeff(n) == GaussRational(-1));
    }

    auto w3 = laurent_expand(t() * t(), Point::infinity(), -2, 0);
    CHECK(w3.coeff(-2) == GaussRational(1));
    CHECK(w3.coeff(-1) == GaussRational(0));
    CHECK(w3.coeff(0) == GaussRational(0));

    CHECK_THROWS_AS(laurent_expand(RationalFunction(), 0, 0, 1), MathError);
    CHECK_THROWS_AS(laurent_expand(t(), 0, 2, 1), MathError);
}

TEST_CASE("laurent_expand windows agree on overlap") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto sf = testing::random_split_function(rng);
        Point a = trial % 5 == 0 ? Point::infinity()
                                 : (sf.roots.empty() || trial % 2 ? Point(testing::small_gauss(rng)) : Point(sf.roots[0]));
        auto small = laurent_expand(sf.f, a, -4, 3);
        auto big = laurent_expand(sf.f, a, -4, 8);
        for (long n = -4; n <= 3; ++n) {
            CHECK(small.coeff(n) == big.coeff(n));
        }
    }
}

TEST_CASE("laurent window overflow") {
    LaurentWindow a(-1, 1);
    a.set(1, 1);
    CHECK_THROWS_AS(a.set(2, 1), WindowOverflow);
    a.set(2, 0);
    CHECK_THROWS_AS(multiply(a, a, -1, 1), WindowOverflow);
    CHECK(multiply(a, a, -2, 2).coeff(2) == GaussRational(1));
    CHECK_THROWS_AS(LaurentWindow::from_function(t() * t(), -1, 1), WindowOverflow);
    CHECK_THROWS_AS(LaurentWindow(2, 1), MathError);
}

TEST_CASE("residue_at examples") {
    CHECK(residue_at(c(1) / t(), 0) == GaussRational(1));
    CHECK(residue_at(c(1) / t(), Point::infinity()) == GaussRational(-1));
    CHECK(residue_at(c(1) / (t() * t() + c(1)), I) == GaussRational(Rational(0), Rational(-1, 2)));
    CHECK(residue_at(t(), 0) == GaussRational(0));
}

TEST_CASE("residue theorem on random split functions") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto sf = testing::random_split_function(rng, 4);
        GaussRational total = residue_at(sf.f, Point::infinity());
        for (const auto& a : sf.roots) {
            total += residue_at(sf.f, a);
        }
        CHECK(total.is_zero());
    }
}

TEST_CASE("partial_fractions examples") {
    auto pf = partial_fractions(c(1) / (t() * (t() - c(1))), {0, 1});
    CHECK(pf.polynomial.is_zero());
    REQUIRE(pf.parts.size() == 2);
    CHECK(pf.parts[0].pole() == Point(0));
    CHECK(pf.parts[0].coeff(1) == GaussRational(-1));
    CHECK(pf.parts[1].coeff(1) == GaussRational(1));

    auto pf2 = partial_fractions(t().pow(3) / (t() - c(2)), {2});
    CHECK(pf2.polynomial == Poly({4, 2, 1}));
    REQUIRE(pf2.parts.size() == 1);
    CHECK(pf2.parts[0].coeffs() == std::map<long, GaussRational>{{1, GaussRational(8)}});

    auto pf3 = partial_fractions(t() * t() + c(1), {});
    CHECK(pf3.polynomial == Poly({1, 0, 1}));
    CHECK(pf3.parts.empty());

    CHECK_THROWS_WITH_AS(partial_fractions(c(1) / (t() * t() + c(2)), {}), doctest::Contains("roots insufficient"), MathError);
}

TEST_CASE("partial_fractions reassembles exactly and matches laurent_expand") {
    Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        auto sf = testing::random_split_function(rng);
        auto pf = partial_fractions(sf.f, sf.roots);
        CHECK(reassemble(pf) == sf.f);
        for (const auto& part : pf.parts) {
            auto w = laurent_expand(sf.f, part.pole(), -part.order(), -1);
            for (long j = 1; j <= part.order(); ++j) {
                CHECK(w.coeff(-j) == part.coeff(j));
            }
        }
    }
}

TEST_CASE("divisor_of and order_at") {
    auto d1 = divisor_of(t());
    CHECK(d1.order(0) == 1);
    CHECK(d1.order(Point::infinity()) == -1);
    CHECK(d1.degree() == 0);

    auto d2 = divisor_of((t() - c(1)).pow(2) / t());
    CHECK(d2.order(1) == 2);
    CHECK(d2.order(0) == -1);
    CHECK(d2.order(Point::infinity()) == -1);
    CHECK(d2.degree() == 0);

    CHECK(divisor_of(c(5)).empty());
    CHECK_THROWS_AS(divisor_of(t() * t() + c(2)), MathError);
    CHECK(divisor_of(t() * t() + c(1), {I, -I}).degree() == 0);

    CHECK(order_at(t() * t(), 0) == 2);
    CHECK(order_at(c(1) / (t() - c(1)).pow(3), 1) == -3);
    CHECK(order_at(t() * t() + c(1), I) == 1);
    CHECK(order_at(t() * t() + c(1), Point::infinity()) == -2);
}

TEST_CASE("order is additive and principal divisors have degree zero") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        auto f = testing::random_split_function(rng);
        auto g = testing::random_split_function(rng);
        std::vector<Point> points{Point::infinity(), Point(testing::small_gauss(rng))};
        for (const auto& a : f.roots) {
            points.emplace_back(a);
        }
        for (const auto& a : points) {
            CHECK(order_at(f.f * g.f, a) == order_at(f.f, a) + order_at(g.f, a));
        }
        auto roots = f.roots;
        roots.insert(roots.end(), g.roots.begin(), g.roots.end());
        // numerators need not split; build a function whose numerator does
        auto h = RationalFunction(Poly::from_roots(g.roots)) / RationalFunction(f.f.den());
        CHECK(divisor_of(h, roots).degree() == 0);
    }
}

TEST_CASE("principal parts and divisors") {
    PrincipalPart p(I, {{1, GaussRational(1)}, {3, GaussRational(2)}, {2, GaussRational(0)}});
    CHECK(p.order() == 3);
    CHECK(p.coeff(2) == GaussRational(0));
    CHECK(p.to_function() == c(1) / (t() - RationalFunction(I)) + c(2) / (t() - RationalFunction(I)).pow(3));
    PrincipalPart q(Point::infinity(), {{2, GaussRational(1)}});
    CHECK(q.to_function() == t() * t());
    CHECK_THROWS_AS(PrincipalPart(0, {}), MathError);
    CHECK_THROWS_AS(PrincipalPart(0, {{0, GaussRational(1)}}), MathError);

    Divisor d({{Point(0), 2}, {Point::infinity(), -3}, {Point(1), 0}});
    CHECK(d.degree() == -1);
    CHECK(d.total_weight() == 5);
    CHECK(!d.is_effective());
    CHECK(d.reciprocal().order(Point::infinity()) == 2);
    CHECK(to_string(d) == "2[0] - 3[inf]");
}

TEST_CASE("json round trips") {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        GaussRational z = testing::small_gauss(rng);
        CHECK(json(z).get<GaussRational>() == z);
        auto sf = testing::random_split_function(rng);
        CHECK(json(sf.f).get<RationalFunction>() == sf.f);
    }
    CHECK(json(GaussRational(Rational(1, 2))).dump() == R"({"im":"0/1","re":"1/2"})");
    CHECK(json(Point::infinity()).get<Point>() == Point::infinity());
    PrincipalPart p(2, {{1, GaussRational(1)}, {2, I}});
    CHECK(principal_part_from_json(json(p)) == p);
    Divisor d({{Point(I), 2}, {Point::infinity(), -1}});
    CHECK(json(d).get<Divisor>() == d);
    CHECK_THROWS_AS(json("x/y").get<GaussRational>(), SchemaError);
}

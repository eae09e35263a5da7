#include "random.hpp"

#include "mlcech/cech/complex.hpp"
#include "mlcech/exact/expansion.hpp"
#include "mlcech/linalg/matrix.hpp"
#include "mlcech/p1/distribution.hpp"
#include "mlcech/p1/line_bundle.hpp"

#include <benchmark/benchmark.h>

using namespace mlcech;

static void BM_Rank(benchmark::State& state) {
    testing::Rng rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = testing::random_matrix(rng, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(linalg::rank(a));
    }
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32);

static void BM_Rref(benchmark::State& state) {
    testing::Rng rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = testing::random_matrix(rng, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(linalg::rref(a));
    }
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_CechRandom(benchmark::State& state) {
    testing::Rng rng(2);
    const auto nerve = testing::random_nerve(rng, 5, 4);
    const auto datum = testing::random_datum(rng, nerve, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cech::cohomology(cech::build_complex(nerve, datum)));
    }
}
BENCHMARK(BM_CechRandom);

static void BM_RiemannRoch(benchmark::State& state) {
    const Divisor d({{Point(0), 3}, {Point(1), -2}, {Point(GaussRational::i()), 3}, {Point::infinity(), 2}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(p1::riemann_roch_check(d));
    }
}
BENCHMARK(BM_RiemannRoch);

static void BM_MLObstruction(benchmark::State& state) {
    std::vector<PrincipalPart> parts;
    for (long k = 0; k < state.range(0); ++k) {
        parts.emplace_back(Point(GaussRational(Rational(k), Rational(k % 2))),
                           std::map<long, GaussRational>{{1, GaussRational(1)}, {3, GaussRational(Rational(1, 2))}});
    }
    const p1::MLDistribution mu(parts);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p1::ml_obstruction(mu));
    }
}
BENCHMARK(BM_MLObstruction)->Arg(2)->Arg(4)->Arg(6);

static void BM_PartialFractions(benchmark::State& state) {
    testing::Rng rng(3);
    const auto sf = testing::random_split_function(rng, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_fractions(sf.f, sf.roots));
    }
}
BENCHMARK(BM_PartialFractions);

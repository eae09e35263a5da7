#include "mlcech/plane/series.hpp"
#include "mlcech/torus/torus_ml.hpp"

#include <benchmark/benchmark.h>

using namespace mlcech;
using Complex = std::complex<double>;

static void BM_PolePush(benchmark::State& state) {
    const auto k = plane::exhaust(plane::DomainSpec::whole_plane(), static_cast<int>(state.range(0)));
    const plane::PolePart part{Complex(state.range(0) + 0.5, 0.3), {1.0, 0.5}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(plane::push_pole(part, k, plane::SpherePoint::infinity(), 1e-3));
    }
}
BENCHMARK(BM_PolePush)->Arg(1)->Arg(3)->Arg(5);

static void BM_PlaneAssemble(benchmark::State& state) {
    std::vector<plane::PolePart> parts;
    for (int k = 1; k <= 5; ++k) {
        parts.push_back({Complex(k, 0.2 * k), {1.0}});
    }
    const auto g = plane::group_poles(parts, plane::DomainSpec::whole_plane(), 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(plane::assemble(g, 6));
    }
}
BENCHMARK(BM_PlaneAssemble)->Unit(benchmark::kMillisecond);

static void BM_Wp(benchmark::State& state) {
    const torus::WeierstrassContext ctx(torus::Lattice(1.0, Complex(0.3, 1.1)));
    const Complex z(0.37, 0.41);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ctx.wp(z));
    }
}
BENCHMARK(BM_Wp);

static void BM_Zeta(benchmark::State& state) {
    const torus::WeierstrassContext ctx(torus::Lattice(1.0, Complex(0.3, 1.1)));
    const Complex z(0.37, 0.41);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ctx.zeta(z));
    }
}
BENCHMARK(BM_Zeta);

static void BM_TorusCheck(benchmark::State& state) {
    const torus::Lattice lat(1.0, Complex(0.3, 1.1));
    auto ctx = std::make_shared<const torus::WeierstrassContext>(lat);
    const torus::TorusDistribution mu(lat, {{0.2, {1.0, 0.0, 0.5}, {}}, {Complex(0.5, 0.5), {-1.0}, {}}});
    const auto f = torus::torus_solve(mu, ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(torus::check_periodicity(f, 50));
    }
}
BENCHMARK(BM_TorusCheck);

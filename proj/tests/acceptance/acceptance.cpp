// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include "plane_configs.hpp"
#include "random.hpp"
#include "torus_configs.hpp"

#include "mlcech/cech/complex.hpp"
#include "mlcech/error.hpp"
#include "mlcech/exact/expansion.hpp"
#include "mlcech/p1/distribution.hpp"
#include "mlcech/p1/line_bundle.hpp"
#include "mlcech/p1/tables.hpp"
#include "mlcech/plane/series.hpp"
#include "mlcech/torus/torus_ml.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace mlcech;
using testing::Rng;
using testing::uniform;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) {
        o.fail("runtime " + std::to_string(secs) + " s over the " + std::to_string(limit_s) + " s limit");
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %2d %-34s %8.3f s%s%s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.empty() ? "" : "  ",
                o.detail.c_str());
    std::fflush(stdout);
}

// 1
Outcome cech_random() {
    Outcome o;
    Rng rng(1001);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
        const auto nerve = testing::random_nerve(rng, n, 4);
        const auto datum = testing::random_datum(rng, nerve, 3);
        const auto cx = cech::build_complex(nerve, datum);
        for (std::size_t p = 0; p + 1 < cx.deltas.size(); ++p) {
            if (!(cx.deltas[p + 1] * cx.deltas[p]).is_zero()) {
                o.fail("delta o delta != 0 in trial " + std::to_string(trial));
            }
        }
        const auto ranks = cech::cohomology(cx).ranks;
        const auto other = testing::change_basis(rng, nerve, datum);
        if (cech::cohomology(cech::build_complex(nerve, other)).ranks != ranks) {
            o.fail("ranks changed under basis change in trial " + std::to_string(trial));
        }
    }
    return o;
}

// 2
Outcome circle_fixture() {
    Outcome o;
    using linalg::Matrix;
    cech::SheafDatum datum;
    datum.set_dim({0}, 1);
    datum.set_dim({1}, 1);
    datum.set_dim({0, 1}, 2);  // two components of the overlap
    datum.set_restriction({0}, {0, 1}, Matrix::from_rows({{1}, {1}}, 1));
    datum.set_restriction({1}, {0, 1}, Matrix::from_rows({{1}, {1}}, 1));
    const cech::Nerve nerve(2, {{0}, {1}, {0, 1}});
    const auto ranks = cech::cohomology(cech::build_complex(nerve, datum)).ranks;
    if (ranks != std::vector<std::size_t>{1, 1}) {
        o.fail("ranks differ from (1, 1)");
    }
    return o;
}

Divisor bounded_divisor(Rng& rng) {
    static const std::vector<Point> support{Point(0), Point(1), Point(-1), Point(GaussRational::i()), Point(2),
                                            Point::infinity()};
    for (;;) {
        Divisor d;
        for (const auto& p : support) {
            d.add(p, uniform(rng, -3, 3));
        }
        if (std::abs(d.degree()) <= 8) {
            return d;
        }
    }
}

std::pair<std::size_t, std::size_t> ranks_at(const Divisor& d, long window) {
    const auto cover = p1::od_cech_datum_at(d, window);
    const auto r = cech::cohomology(cech::build_complex(cover.nerve, cover.datum)).ranks;
    return {r.at(0), r.at(1)};
}

// 3
Outcome riemann_roch_sweep() {
    Outcome o;
    Rng rng(3003);
    for (int trial = 0; trial < 500; ++trial) {
        const Divisor d = bounded_divisor(rng);
        const auto policy = p1::TruncationPolicy::for_divisor(d);
        const auto r = p1::riemann_roch_check(d, policy);
        const long deg = d.degree();
        if (!r.holds || r.h0 - r.h1 != 1 + deg) {
            o.fail("h0 - h1 != 1 + deg D for " + to_string(d));
        }
        if (r.h0 != std::max(0L, deg + 1) || r.h1 != std::max(0L, -deg - 1)) {
            o.fail("ranks differ from the degree formula for " + to_string(d));
        }
        if (ranks_at(d, policy.window) != ranks_at(d, policy.window + 1)) {
            o.fail("M vs M+1 disagree for " + to_string(d));
        }
    }
    return o;
}

// 4
Outcome od_table() {
    Outcome o;
    for (long d = -10; d <= 10; ++d) {
        const Divisor div({{Point::infinity(), d}});
        const auto [h0, h1] = p1::od_cohomology(div, p1::TruncationPolicy::for_divisor(div));
        if (h0 != std::max(0L, d + 1) || h1 != std::max(0L, -d - 1)) {
            o.fail("row d = " + std::to_string(d));
        }
    }
    return o;
}

// 5
Outcome omega1() {
    Outcome o;
    if (p1::omega1_cech().ranks != std::vector<std::size_t>{0, 1}) {
        o.fail("ranks differ from (0, 1)");
    }
    return o;
}

p1::MLDistribution random_ml(Rng& rng, int trial) {
    const auto count = static_cast<std::size_t>(uniform(rng, 1, 6));
    const auto points = testing::distinct_points(rng, count);
    std::vector<PrincipalPart> parts;
    for (std::size_t k = 0; k < count; ++k) {
        std::map<long, GaussRational> coeffs;
        const long order = uniform(rng, 1, 4);
        for (long j = 1; j < order; ++j) {
            coeffs[j] = testing::small_gauss(rng);
        }
        coeffs[order] = testing::nonzero_gauss(rng);
        const bool at_infinity = k == 0 && trial % 2 == 0;
        parts.emplace_back(at_infinity ? Point::infinity() : Point(points[k]), coeffs);
    }
    return p1::MLDistribution(parts);
}

// 6
Outcome ml_p1() {
    Outcome o;
    Rng rng(6006);
    for (int trial = 0; trial < 100; ++trial) {
        const auto mu = random_ml(rng, trial);
        if (!p1::ml_obstruction(mu).class_zero) {
            o.fail("nonzero obstruction class in trial " + std::to_string(trial));
        }
        const auto f = p1::ml_solve(mu);
        for (const auto& part : mu.parts()) {
            const auto w = laurent_expand(f, part.pole(), -part.order(), -1);
            for (long j = 1; j <= part.order(); ++j) {
                if (!(w.coeff(-j) == part.coeff(j))) {
                    o.fail("principal part mismatch in trial " + std::to_string(trial));
                }
            }
        }
    }
    return o;
}

// 7
Outcome residues() {
    Outcome o;
    Rng rng(7007);
    for (int trial = 0; trial < 200; ++trial) {
        const auto sf = testing::random_split_function(rng, 4);
        GaussRational total = residue_at(sf.f, Point::infinity());
        for (const auto& a : sf.roots) {
            total += residue_at(sf.f, a);
        }
        if (!total.is_zero()) {
            o.fail("nonzero residue sum in trial " + std::to_string(trial));
        }
    }
    return o;
}

// 8
Outcome plane_constructor() {
    using namespace plane;
    Outcome o;
    std::mt19937_64 rng(8008);
    double worst_verify = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::string tag = " (config " + std::to_string(trial) + ")";
        const auto cfg = testing::random_plane_config(rng, trial, 20);
        const auto g = group_poles(cfg.parts, cfg.domain, cfg.n_max);
        const auto s = assemble(g, g.last_stage());
        const auto targets = cfg.domain.targets();
        for (const auto& st : s.stages) {
            for (const auto& p : st.r.poles()) {
                if (std::find(targets.begin(), targets.end(), p) == targets.end()) {
                    o.fail("(a) R_n has a pole outside E" + tag);
                }
            }
            if (st.n < 2) {
                continue;
            }
            const double budget = std::ldexp(1.0, -st.n);
            for (auto z : exhaust(s.domain, st.n - 1).boundary_samples(240)) {
                if (std::abs(g.f(st.n, z) - st.r(z)) > budget) {
                    o.fail("(b) sup |f_n - R_n| over 2^-n at stage " + std::to_string(st.n) + tag);
                    break;
                }
            }
        }
        for (const auto& p : s.parts) {
            const double rho = std::min(0.5, 0.2 * separation_radius(s, p));
            const double err = verify_principal_part(s, p, rho, 256);
            worst_verify = std::max(worst_verify, err);
            if (!(err <= 1e-6)) {
                o.fail("(c) principal part error " + std::to_string(err) + tag);
            }
        }
        for (int n = 1; n <= g.last_stage(); ++n) {
            const double bound = std::ldexp(1.0, -n + 1);
            for (auto z : exhaust(s.domain, n).boundary_samples(120)) {
                if (std::abs(s.stage_sum(z, n, n + 5)) > bound) {
                    o.fail("(d) Cauchy bound at N = " + std::to_string(n) + tag);
                    break;
                }
            }
        }
    }
    std::ostringstream d;
    d << "max principal-part error " << worst_verify;
    if (o.pass) {
        o.detail = d.str();
    }
    return o;
}

// 9
Outcome torus_criterion() {
    using namespace torus;
    Outcome o;
    Rng rng(9009);
    double worst_periodic = 0;
    double worst_coeff = 0;
    double least_defect = INFINITY;
    for (int trial = 0; trial < 100; ++trial) {
        const std::string tag = " (trial " + std::to_string(trial) + ")";
        const auto lat = testing::random_lattice(rng);
        const auto ctx = std::make_shared<const WeierstrassContext>(lat);
        const bool balanced = trial % 2 == 0;
        const auto mu = testing::random_torus_distribution(rng, lat, balanced, trial % 4 < 2);
        const auto test = residue_test(mu);
        bool solved = true;
        try {
            const auto f = torus_solve(mu, ctx);
            const double dev = check_periodicity(f, 50).max_deviation;
            const double ce = coefficient_error(f);
            worst_periodic = std::max(worst_periodic, dev);
            worst_coeff = std::max(worst_coeff, ce);
            if (!(dev <= 1e-6)) {
                o.fail("periodicity deviation " + std::to_string(dev) + tag);
            }
            if (!(ce <= 1e-5)) {
                o.fail("local coefficient error " + std::to_string(ce) + tag);
            }
        } catch (const MathError&) {
            solved = false;
            const double dev = check_periodicity(force_candidate(mu, ctx), 50).max_deviation;
            least_defect = std::min(least_defect, dev);
            if (!(dev >= 1e-3)) {
                o.fail("forced candidate is nearly periodic" + tag);
            }
        }
        if (solved != test.solvable || test.solvable != balanced) {
            o.fail("decision disagrees with the residue sum" + tag);
        }

        std::uniform_real_distribution<double> u(0.05, 0.95);
        const Complex z = u(rng) * lat.w1() + u(rng) * lat.w2();
        const Complex wp = ctx->wp(z);
        const Complex d = ctx->wp_derivative(z, 1);
        const Complex rhs = 4.0 * wp * wp * wp - ctx->g2() * wp - ctx->g3();
        if (!(std::abs(d * d - rhs) <= 1e-5 * std::max(1.0, std::abs(d * d)))) {
            o.fail("(wp')^2 identity" + tag);
        }
        const Complex legendre = ctx->eta1() * lat.w2() - ctx->eta2() * lat.w1() - Complex(0, 2 * std::numbers::pi);
        if (!(std::abs(legendre) <= 1e-6)) {
            o.fail("Legendre relation" + tag);
        }
    }
    if (o.pass) {
        std::ostringstream d;
        d << "max periodicity dev " << worst_periodic << ", max coeff err " << worst_coeff << ", min forced defect "
          << least_defect;
        o.detail = d.str();
    }
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    }
    return out + "'";
}

// 10
Outcome determinism() {
    Outcome o;
    namespace fs = std::filesystem;
    const fs::path dir(MLCECH_SCRATCH);
    fs::create_directories(dir);
    const std::string circle =
        R"({"n_opens":2,"faces":[[0],[1],[0,1]],"dims":[1,1,2],)"
        R"("restrictions":[{"from":[0],"to":[0,1],"matrix":[[1],[1]]},{"from":[1],"to":[0,1],"matrix":[[1],[1]]}]})";
    const std::vector<std::vector<std::string>> commands = {
        {"cech", "--input", circle},
        {"p1", "--divisor", R"({"inf":3,"0":-1,"i":2})", "--equivalent", R"({"1":4})", "--omega1"},
        {"rr-sweep", "--samples", "100", "--seed", "11"},
        {"ml-p1", "--parts", R"([{"pole":"0","coeffs":["1","1/2"]},{"pole":"inf","coeffs":["i"]}])"},
        {"plane-ml", "--domain", R"({"kind":"disc","radius":2})", "--poles",
         R"([{"a":1.2,"coeffs":{"1":1}},{"a":"-1.5+0.5i","coeffs":{"2":"1/3"}}])", "--grid", "-1:1:9,-1:1:9"},
        {"plane-ml", "--domain", R"({"kind":"plane"})", "--poles", R"([{"a":2,"coeffs":{"1":1}}])"},
        {"torus-ml", "--lattice", "1,0.3+1.1i", "--parts",
         R"([{"a":"0.2","coeffs":{"2":1}},{"a":"0.5+0.5i","coeffs":{"1":1,"3":"i"}},{"a":"0.7","coeffs":{"1":-1}}])",
         "--check"},
        {"torus-ml", "--lattice", "1,i", "--parts", R"([{"a":0,"coeffs":{"1":1}}])", "--check"},
        {"tables", "--n", "3"},
        {"--explain", "tables", "--n", "1"},
    };
    for (std::size_t k = 0; k < commands.size(); ++k) {
        std::string base = quote(MLCECH_BINARY);
        for (const auto& a : commands[k]) {
            base += " " + quote(a);
        }
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            const fs::path file = dir / ("run" + std::to_string(k) + "_" + std::to_string(run) + ".out");
            const int status = std::system((base + " > " + quote(file.string())).c_str());
            if (status != 0) {
                o.fail("command " + commands[k].front() + " exited with status " + std::to_string(status));
            }
            outputs[run] = slurp(file);
        }
        if (outputs[0].empty() || outputs[0] != outputs[1]) {
            o.fail("outputs differ for " + commands[k].front());
        }
    }
    return o;
}

} // namespace

int main() {
    report(1, "cech: random complexes", 10, cech_random);
    report(2, "cech: S^1 two-arc fixture", 0.1, circle_fixture);
    report(3, "p1: Riemann-Roch sweep", 60, riemann_roch_sweep);
    report(4, "p1: O(d) table", 0, od_table);
    report(5, "p1: Omega^1 ranks", 0, omega1);
    report(6, "p1: Mittag-Leffler", 30, ml_p1);
    report(7, "p1: global residue theorem", 0, residues);
    report(8, "plane: pole-pushing constructor", 300, plane_constructor);
    report(9, "torus: residue criterion", 120, torus_criterion);
    report(10, "cli: byte-reproducible reruns", 0, determinism);
    return failures == 0 ? 0 : 1;
}

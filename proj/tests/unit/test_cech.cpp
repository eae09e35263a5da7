#include "doctest.h"
#include "random.hpp"

#include "mlcech/cech/complex.hpp"
#include "mlcech/cech/json.hpp"
#include "mlcech/error.hpp"

using namespace mlcech;
using namespace mlcech::cech;
using linalg::Matrix;
using mlcech::testing::Rng;

namespace {

/// Constant sheaf on a cyclic chain of arcs; consecutive arcs meet in one
/// component, except that a two-arc cover meets in two.
std::pair<Nerve, SheafDatum> circle_cover(std::size_t arcs) {
    std::vector<Face> faces;
    for (std::size_t k = 0; k < arcs; ++k) {
        faces.push_back({k});
    }
    SheafDatum datum;
    for (std::size_t k = 0; k < arcs; ++k) {
        datum.set_dim({k}, 1);
    }
    if (arcs == 2) {
        faces.push_back({0, 1});
        datum.set_dim({0, 1}, 2);
        datum.set_restriction({0}, {0, 1}, Matrix::from_rows({{1}, {1}}, 1));
        datum.set_restriction({1}, {0, 1}, Matrix::from_rows({{1}, {1}}, 1));
    } else {
        for (std::size_t k = 0; k < arcs; ++k) {
            Face e{std::min(k, (k + 1) % arcs), std::max(k, (k + 1) % arcs)};
            faces.push_back(e);
            datum.set_dim(e, 1);
            datum.set_restriction({e[0]}, e, Matrix::identity(1));
            datum.set_restriction({e[1]}, e, Matrix::identity(1));
        }
    }
    return {Nerve(arcs, faces), datum};
}

} // namespace

TEST_CASE("circle two-arc cover") {
    auto [nerve, datum] = circle_cover(2);
    auto cx = build_complex(nerve, datum);
    // (a, b) -> (b - a, b - a)
    CHECK(cx.deltas[0] == Matrix::from_rows({{-1, 1}, {-1, 1}}, 2));
    auto report = cohomology(cx, true);
    CHECK(report.ranks == std::vector<std::size_t>{1, 1});
    REQUIRE(report.representatives);
    CHECK((*report.representatives)[1].size() == 1);
    CHECK(h0_equals_global_sections(nerve, datum, 1));
}

TEST_CASE("circle three-arc refinement has the same ranks") {
    auto [nerve, datum] = circle_cover(3);
    CHECK(cohomology(build_complex(nerve, datum)).ranks == std::vector<std::size_t>{1, 1});
}

TEST_CASE("one open cover") {
    SheafDatum datum;
    datum.set_dim({0}, 3);
    auto cx = build_complex(Nerve::single_open(), datum);
    for (const auto& d : cx.deltas) {
        CHECK(d.is_zero());
    }
    auto report = cohomology(cx);
    CHECK(report.ranks[0] == 3);
    for (std::size_t p = 1; p < report.ranks.size(); ++p) {
        CHECK(report.ranks[p] == 0);
    }
}

TEST_CASE("disconnected nerve") {
    Nerve nerve(2, {{0}, {1}});
    SheafDatum datum;
    datum.set_dim({0}, 1);
    datum.set_dim({1}, 1);
    CHECK(cohomology(build_complex(nerve, datum)).ranks[0] == 2);
    CHECK(h0_equals_global_sections(nerve, datum, 2));
    CHECK(!h0_equals_global_sections(nerve, datum, 1));
}

TEST_CASE("zero complex") {
    Nerve nerve(2, {{0}, {1}, {0, 1}});
    SheafDatum datum;
    datum.set_dim({0}, 0);
    datum.set_dim({1}, 0);
    datum.set_dim({0, 1}, 0);
    datum.set_restriction({0}, {0, 1}, Matrix(0, 0));
    datum.set_restriction({1}, {0, 1}, Matrix(0, 0));
    auto report = cohomology(build_complex(nerve, datum));
    for (auto r : report.ranks) {
        CHECK(r == 0);
    }
}

TEST_CASE("nerve validation") {
    CHECK_THROWS_AS(Nerve(2, {{0}, {0, 1}}), SchemaError);
    CHECK_THROWS_AS(Nerve(3, {{0}, {1}, {2}, {0, 1, 2}}), SchemaError);
    CHECK_THROWS_AS(Nerve(2, {{0}, {1}, {1, 0}}), SchemaError);
}

TEST_CASE("inconsistent composition is rejected") {
    Nerve nerve(3, {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
    SheafDatum datum;
    for (const auto& f : nerve.all_faces()) {
        datum.set_dim(f, 1);
    }
    for (const auto& f : nerve.all_faces()) {
        for (std::size_t j = 0; f.size() > 1 && j < f.size(); ++j) {
            datum.set_restriction(drop(f, j), f, Matrix::identity(1));
        }
    }
    CHECK_NOTHROW(build_complex(nerve, datum));
    datum.set_restriction({0, 1}, {0, 1, 2}, Matrix::from_rows({{2}}, 1));
    CHECK_THROWS_WITH_AS(build_complex(nerve, datum), doctest::Contains("inconsistent restriction composition"),
                         MathError);
}

TEST_CASE("random consistent data: square zero and basis invariance") {
    Rng rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
        Nerve nerve = testing::random_nerve(rng, n);
        SheafDatum datum = testing::random_datum(rng, nerve);
        auto cx = build_complex(nerve, datum);
        for (std::size_t p = 0; p + 1 < cx.deltas.size(); ++p) {
            CHECK((cx.deltas[p + 1] * cx.deltas[p]).is_zero());
        }
        auto ranks = cohomology(cx).ranks;
        auto other = testing::change_basis(rng, nerve, datum);
        CHECK(cohomology(build_complex(nerve, other)).ranks == ranks);
        // Euler characteristic
        long chi_cochains = 0;
        long chi_ranks = 0;
        for (std::size_t p = 0; p < ranks.size(); ++p) {
            const long sign = p % 2 ? -1 : 1;
            chi_cochains += sign * static_cast<long>(cx.dims[p]);
            chi_ranks += sign * static_cast<long>(ranks[p]);
        }
        CHECK(chi_cochains == chi_ranks);
    }
}

TEST_CASE("cover json round trip") {
    auto [nerve, datum] = circle_cover(2);
    json j = cover_to_json(nerve, datum);
    auto [n2, d2] = cover_from_json(j);
    CHECK(cover_to_json(n2, d2) == j);
    CHECK(report_to_json(cohomology(build_complex(n2, d2)))["ranks"] == json::array({1, 1}));
    json bad = j;
    bad["dims"] = json::array({1});
    CHECK_THROWS_AS(cover_from_json(bad), SchemaError);
}

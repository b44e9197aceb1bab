#include <catch2/catch_amalgamated.hpp>

#include "stacktri/build.hpp"
#include "stacktri/recognize.hpp"

using namespace stacktri;

TEST_CASE("lower bound edge counts", "[recognize]") {
    CHECK(lower_bound_edges(5, 3) == 10);
    CHECK(lower_bound_edges(9, 3) == 26);
    CHECK(lower_bound_edges(13, 3) == 42);
}

TEST_CASE("stacked sphere recognition", "[recognize]") {
    for (int d = 1; d <= 4; ++d) {
        auto r = is_stacked_sphere(standard_sphere(d));
        CHECK(r.verdict);
        REQUIRE(r.trace);
        CHECK(r.trace->steps.empty());
    }
    for (int d = 2; d <= 5; ++d)
        for (int m = 1; m <= 12; ++m) CHECK(is_stacked_sphere(boundary_N(d, m)).verdict);

    auto k = kuhnel(3);
    auto r = is_stacked_sphere(k);
    CHECK_FALSE(r.verdict);
    CHECK(r.decided_by_edge_count);
    CHECK(r.edges == 36);
    CHECK(r.lower_bound == 26);

    // a 2-sphere that is not stacked: the octahedron
    auto octahedron = join(join(standard_sphere(0), standard_sphere(0)).complex, standard_sphere(0)).complex;
    auto o = is_stacked_sphere(octahedron);
    CHECK_FALSE(o.verdict);
    CHECK_FALSE(o.decided_by_edge_count);
    REQUIRE(o.residual);
    CHECK(o.residual->num_vertices() == 6);

    CHECK_THROWS_AS(is_stacked_sphere(standard_ball(3)), TopologyError);
}

TEST_CASE("stacked certificate replays exactly", "[recognize]") {
    for (int d = 2; d <= 4; ++d)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto s = stacked_sphere(d, random_starring_trace(d, d + 2 + static_cast<int>(seed), seed));
            auto r = is_stacked_sphere(s);
            REQUIRE(r.verdict);
            REQUIRE(r.trace);
            CHECK(stacked_sphere(d, *r.trace) == s);
        }
}

TEST_CASE("collapse order does not matter for d >= 3", "[recognize]") {
    for (int d = 3; d <= 4; ++d)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto s = stacked_sphere(d, random_starring_trace(d, 14, 100 + seed));
            for (std::uint64_t order = 0; order < 5; ++order)
                CHECK(collapse_run(s, order).reached_standard_sphere);
        }
}

TEST_CASE("class K", "[recognize]") {
    for (int d = 2; d <= 4; ++d)
        CHECK(is_class_K(stacked_sphere(d, random_starring_trace(d, d + 8, 5))));
    for (int d = 2; d <= 5; ++d) CHECK(is_class_K(kuhnel(d)));
    for (const auto& p : enumerate_partitions(4)) CHECK(is_class_K(k2d4(3, p)));
    auto octahedron = join(join(standard_sphere(0), standard_sphere(0)).complex, standard_sphere(0)).complex;
    auto suspension = join(standard_sphere(0), octahedron).complex;
    CHECK_FALSE(is_class_K(suspension));
}

TEST_CASE("admissibility", "[recognize]") {
    for (int d = 2; d <= 5; ++d) {
        const int m = 2 * d + 3;
        CHECK(is_admissible(boundary_N(d, m), psi_0(d, m)).verdict);
    }
    auto n = boundary_N(3, 8);
    FacetBijection close({{9, 1}, {10, 2}, {11, 3}, {12, 4}});
    auto r = is_admissible(n, close);
    CHECK_FALSE(r.verdict);
    REQUIRE(r.violation);
    CHECK(r.violation->distance <= 2);
    CHECK(r.violation->path.front() == r.violation->x);
    CHECK(r.violation->path.back() == r.violation->image);

    auto two = disjoint_union(standard_sphere(2), standard_sphere(2));
    auto a = two.complex.facets().front();
    auto b = two.complex.facets().back();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace_back(a[i], b[(i + 1) % b.size()]);
    CHECK(is_admissible(two.complex, FacetBijection(pairs)).verdict);
}

TEST_CASE("admissible census", "[recognize]") {
    for (int d = 2; d <= 5; ++d) {
        auto count = [d](int m) {
            return enumerate_admissible(boundary_N(d, m), last_window_facet(d, m), first_window_facet(d)).size();
        };
        CHECK(count(2 * d + 2) == 0);
        CHECK(count(2 * d + 3) == 1);
        CHECK(count(2 * d + 4) == (std::size_t{1} << d));
    }
    auto only = enumerate_admissible(boundary_N(3, 9), last_window_facet(3, 9), first_window_facet(3));
    REQUIRE(only.size() == 1);
    CHECK(only.front() == psi_0(3, 9));
}

TEST_CASE("two-sidedness", "[recognize]") {
    const std::vector<Vertex> sphere{1, 2, 3, 4};
    auto r = is_two_sided(kuhnel(3), sphere);
    CHECK(r.verdict);
    CHECK(r.components == 2);
    CHECK_FALSE(r.positive.empty());
    CHECK_FALSE(r.negative.empty());

    auto klein = k2d4(2, Partition({1, 2}));
    const std::vector<Vertex> circle{1, 3, 6};
    auto one = is_two_sided(klein, circle);
    CHECK_FALSE(one.verdict);
    CHECK(one.components == 1);

    auto k = kuhnel(3);
    CHECK_THROWS_AS(is_two_sided(k, k.vertices()), TopologyError);
}

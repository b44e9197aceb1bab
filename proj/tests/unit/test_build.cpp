#include <catch2/catch_amalgamated.hpp>

#include "stacktri/build.hpp"
#include "stacktri/homology.hpp"
#include "stacktri/iso.hpp"
#include "stacktri/recognize.hpp"

using namespace stacktri;

TEST_CASE("standard objects", "[build]") {
    CHECK(standard_sphere(0) == SimplicialComplex{{1}, {2}});
    auto s3 = standard_sphere(3);
    CHECK(s3.num_facets() == 5);
    for (const auto& f : s3.facets()) CHECK(f.size() == 4);
    CHECK(standard_ball(3) == SimplicialComplex{{1, 2, 3, 4}});
    CHECK(cycle(9).num_facets() == 9);
    CHECK(automorphism_count(cycle(9)) == 18);
    CHECK_THROWS_AS(cycle(2), TopologyError);
}

TEST_CASE("starring and collapsing", "[build]") {
    auto s2 = standard_sphere(2);
    auto y = star_vertex(s2, {1, 2, 3}, 5);
    CHECK(y.num_facets() == 6);
    CHECK(is_normal_pseudomanifold(y));
    CHECK(collapse_vertex(y, 5) == s2);
    CHECK_THROWS_WITH(collapse_vertex(s2, 1), Catch::Matchers::ContainsSubstring("already minimal"));
    CHECK_THROWS_AS(star_vertex(s2, {1, 2}, 5), TopologyError);
    CHECK_THROWS_AS(star_vertex(s2, {1, 2, 3}, 4), TopologyError);

    auto k = kuhnel(3);
    CHECK_THROWS_WITH(collapse_vertex(k, 1), Catch::Matchers::ContainsSubstring("not collapsible"));
}

TEST_CASE("stacked spheres from traces", "[build]") {
    CHECK(stacked_sphere(3, {}) == standard_sphere(3));
    for (int d = 2; d <= 5; ++d)
        for (int n = d + 2; n <= d + 12; ++n) {
            auto s = stacked_sphere(d, random_starring_trace(d, n, static_cast<std::uint64_t>(31 * d + n)));
            CHECK(s.num_vertices() == static_cast<std::size_t>(n));
            CHECK(edge_graph(s).num_edges() == static_cast<std::size_t>(lower_bound_edges(n, d)));
            CHECK(is_normal_pseudomanifold(s));
        }
    StarringTrace bad;
    bad.steps.push_back({Simplex{1, 2, 9}, 6});
    CHECK_THROWS_WITH(stacked_sphere(2, bad), Catch::Matchers::ContainsSubstring("not replayable"));
}

TEST_CASE("rolling trace gives boundary_N", "[build]") {
    for (int d = 2; d <= 4; ++d)
        for (int m = 1; m <= 8; ++m) {
            StarringTrace trace;
            for (int j = 2; j <= m; ++j) {
                std::vector<Vertex> facet;
                for (int i = j; i <= j + d; ++i) facet.push_back(static_cast<Vertex>(i));
                trace.steps.push_back({Simplex(facet), static_cast<Vertex>(j + d + 1)});
            }
            CHECK(stacked_sphere(d, trace) == boundary_N(d, m));
        }
}

TEST_CASE("boundary_N", "[build]") {
    for (int d = 1; d <= 4; ++d) CHECK(boundary_N(d, 1) == standard_sphere(d));
    auto n = boundary_N(3, 9);
    CHECK(n.num_vertices() == 13);
    CHECK(edge_graph(n).num_edges() == 42);
    auto n10 = boundary_N(3, 10);
    CHECK(n10.has_facet({1, 2, 3, 4}));
    CHECK(n10.has_facet({11, 12, 13, 14}));
    CHECK(first_window_facet(3) == Simplex{1, 2, 3, 4});
    CHECK(last_window_facet(3, 10) == Simplex{11, 12, 13, 14});
}

TEST_CASE("facet bijections", "[build]") {
    FacetBijection psi({{11, 2}, {10, 1}});
    CHECK(psi.source() == Simplex{10, 11});
    CHECK(psi.target() == Simplex{1, 2});
    CHECK(psi.image(11) == 2);
    CHECK(psi.inverse().image(2) == 11);
    CHECK_THROWS_AS(FacetBijection({{1, 2}, {2, 3}}), TopologyError);
    CHECK_THROWS_AS(FacetBijection({{1, 3}, {2, 3}}), TopologyError);
}

TEST_CASE("handle addition", "[build]") {
    auto psi = psi_0(3, 9);
    CHECK(psi.pairs() == std::vector<std::pair<Vertex, Vertex>>{{10, 1}, {11, 2}, {12, 3}, {13, 4}});
    CHECK_THROWS_AS(psi_0(3, 8), TopologyError);
    for (int d = 2; d <= 5; ++d) {
        const int m = 2 * d + 3;
        auto k = handle_add(boundary_N(d, m), psi_0(d, m));
        CHECK(k.num_vertices() == static_cast<std::size_t>(m));
        CHECK(k == kuhnel(d));
    }
    auto n = boundary_N(3, 8);
    FacetBijection close({{9, 1}, {10, 2}, {11, 3}, {12, 4}});
    CHECK_THROWS_WITH(handle_add(n, close), Catch::Matchers::ContainsSubstring("not admissible"));
}

TEST_CASE("connected sums", "[build]") {
    for (int d = 1; d <= 4; ++d) {
        auto s = standard_sphere(d);
        auto f = s.facets().front();
        auto sum = connected_sum(s, s, f, f);
        CHECK(sum.num_vertices() == static_cast<std::size_t>(d + 3));
        auto suspension = join(standard_sphere(0), standard_sphere(d - 1)).complex;
        CHECK(complex_isomorphism(sum, suspension));
    }
    for (int d = 2; d <= 4; ++d) {
        auto a = stacked_sphere(d, random_starring_trace(d, d + 6, 1));
        auto b = stacked_sphere(d, random_starring_trace(d, d + 5, 2));
        auto sum = connected_sum(a, b, a.facets().back(), b.facets().front());
        CHECK(sum.num_vertices() == a.num_vertices() + b.num_vertices() - static_cast<std::size_t>(d + 1));
        CHECK(is_stacked_sphere(sum).verdict);
    }
}

TEST_CASE("handle deletion inverts addition", "[build]") {
    auto k = kuhnel(3);
    const std::vector<Vertex> sphere{1, 2, 3, 4};
    auto del = handle_delete(k, sphere);
    CHECK(del.complex.num_vertices() == 13);
    CHECK(is_stacked_sphere(del.complex).verdict);
    CHECK(complex_isomorphism(del.complex, boundary_N(3, 9)));
    CHECK(complex_isomorphism(handle_add(del.complex, del.psi), k));
    CHECK(connected_components(del.complex) <= 2);

    // not an induced standard sphere: {1,2,3,5} spans a facet
    const std::vector<Vertex> solid{1, 2, 3, 5};
    CHECK_THROWS_AS(handle_delete(k, solid), TopologyError);
}

TEST_CASE("handle deletion refuses one-sided spheres", "[build]") {
    auto klein = k2d4(2, Partition({1, 2}));
    const std::vector<Vertex> circle{1, 3, 6};
    CHECK_THROWS_WITH(handle_delete(klein, circle), Catch::Matchers::ContainsSubstring("not two-sided"));
}

TEST_CASE("k2d4 family", "[build]") {
    CHECK(pi_p(Partition({1, 1, 1, 1})) == Permutation::identity(4));
    CHECK(psi_p(3, Partition({4})).image(11) == 2);
    for (int d = 2; d <= 4; ++d)
        for (const auto& p : enumerate_partitions(d + 1)) {
            auto k = k2d4(d, p);
            CHECK(k.num_vertices() == static_cast<std::size_t>(2 * d + 4));
            CHECK(is_normal_pseudomanifold(k));
            CHECK(non_edge_graph(k).num_edges() == static_cast<std::size_t>(d + 2));
        }
}

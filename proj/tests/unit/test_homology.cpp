#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "stacktri/build.hpp"
#include "stacktri/homology.hpp"

using namespace stacktri;

using Betti = std::vector<std::size_t>;

TEST_CASE("bit matrix rank agrees across both reductions", "[homology]") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 90;
        const std::size_t cols = 1 + rng() % 90;
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 4 == 0) m.set(r, c);
        CHECK(m.rank() == m.rank_by_column_reduction());
        CHECK(m.rank() == m.transposed().rank());
    }
}

TEST_CASE("boundary of a boundary", "[homology]") {
    for (const auto& k : {standard_sphere(3), kuhnel(3), k2d4(3, Partition({2, 2})), standard_ball(4)})
        CHECK(chain_complex(k).boundary_squares_to_zero());
}

TEST_CASE("betti numbers", "[homology]") {
    for (int d = 1; d <= 4; ++d) {
        Betti sphere(static_cast<std::size_t>(d) + 1, 0);
        sphere.front() = sphere.back() = 1;
        CHECK(betti_z2(standard_sphere(d)) == sphere);
        Betti ball(static_cast<std::size_t>(d) + 1, 0);
        ball.front() = 1;
        CHECK(betti_z2(standard_ball(d)) == ball);
    }
    CHECK(betti_z2(kuhnel(2)) == Betti{1, 2, 1});
    CHECK(betti_z2(kuhnel(3)) == Betti{1, 1, 1, 1});
    CHECK(betti_z2(kuhnel(4)) == Betti{1, 1, 0, 1, 1});
    for (const auto& p : enumerate_partitions(4)) CHECK(betti_z2(k2d4(3, p)) == Betti{1, 1, 1, 1});
    CHECK(betti_z2(k2d4(2, Partition({1, 2}))) == Betti{1, 2, 1});
}

TEST_CASE("euler characteristic", "[homology]") {
    for (int d = 0; d <= 5; ++d) CHECK(euler_characteristic(standard_sphere(d)) == 1 + (d % 2 == 0 ? 1 : -1));
    CHECK(euler_characteristic(kuhnel(3)) == 0);
    CHECK(euler_characteristic(kuhnel(2)) == 0);
}

TEST_CASE("relative homology", "[homology]") {
    auto k = kuhnel(3);
    CHECK(relative_betti_z2(k, k) == Betti{0, 0, 0, 0});
    for (int d = 1; d <= 4; ++d) {
        Betti top(static_cast<std::size_t>(d) + 1, 0);
        top.back() = 1;
        CHECK(relative_betti_z2(standard_ball(d), boundary_complex(standard_ball(d))) == top);
    }
    CHECK_THROWS_AS(relative_betti_z2(standard_sphere(2), SimplicialComplex{{7, 8}}), TopologyError);

    // a vertex x whose link inside the larger complex is two points
    SimplicialComplex path{{1, 2}, {2, 3}};
    SimplicialComplex ends{{1}, {3}};
    auto rel = relative_betti_z2(path, ends);
    auto lk = betti_z2(link(path, {2}));
    CHECK(rel[1] == 1);
    CHECK(rel[1] == lk[0] - 1);
}

TEST_CASE("orientability", "[homology]") {
    for (int d = 1; d <= 4; ++d) CHECK(orientable(standard_sphere(d)).orientable);
    CHECK(orientable(kuhnel(2)).orientable);
    CHECK_FALSE(orientable(kuhnel(3)).orientable);
    CHECK(orientable(kuhnel(4)).orientable);
    CHECK_FALSE(orientable(k2d4(3, Partition({1, 1, 2}))).orientable);
    CHECK(orientable(k2d4(4, Partition({1, 2, 2}))).orientable);

    auto r = orientable(kuhnel(3));
    REQUIRE(r.obstruction.size() >= 2);
    for (std::size_t i = 0; i < r.obstruction.size(); ++i) {
        const auto& f = r.obstruction[i];
        const auto& g = r.obstruction[(i + 1) % r.obstruction.size()];
        CHECK(f.intersect(g).size() == f.size() - 1);
    }
}

TEST_CASE("orientation signs are coherent", "[homology]") {
    auto k = kuhnel(4);
    auto r = orientable(k);
    REQUIRE(r.orientable);
    REQUIRE(r.signs.size() == k.num_facets());
    const auto& facets = k.facets();
    for (std::size_t a = 0; a < facets.size(); ++a)
        for (std::size_t b = a + 1; b < facets.size(); ++b) {
            auto ridge = facets[a].intersect(facets[b]);
            if (ridge.size() != facets[a].size() - 1) continue;
            const auto i = static_cast<int>(std::find(facets[a].begin(), facets[a].end(), facets[a].minus(ridge)[0]) - facets[a].begin());
            const auto j = static_cast<int>(std::find(facets[b].begin(), facets[b].end(), facets[b].minus(ridge)[0]) - facets[b].begin());
            const int induced = ((i + j) % 2 == 0) ? 1 : -1;
            CHECK(r.signs[a] * induced == -r.signs[b]);
        }
}

TEST_CASE("H1 certificate", "[homology]") {
    CHECK(h1_certificate(kuhnel(3)).has_value());
    CHECK_FALSE(h1_certificate(standard_sphere(3)).has_value());
    for (const auto& p : enumerate_partitions(4)) CHECK(h1_certificate(k2d4(3, p)).has_value());

    auto k = kuhnel(3);
    auto cycle_edges = *h1_certificate(k);
    std::map<Vertex, int> degree;
    for (const auto& e : cycle_edges) {
        CHECK(k.has_face(e));
        for (Vertex v : e) ++degree[v];
    }
    for (auto [v, deg] : degree) CHECK(deg % 2 == 0);

    std::vector<Vertex> facet(k.facets().front().begin(), k.facets().front().end());
    auto c = complement(k, facet);
    CHECK(c.num_vertices() == 5);
    CHECK(betti_z2(c)[1] > 0);
}

TEST_CASE("alexander duality", "[homology]") {
    const std::vector<Vertex> one{1}, two{1, 2};
    auto r = alexander_check(standard_sphere(3), one, two);
    CHECK(r.holds);
    CHECK(r.inner == Betti{0, 0, 0, 0});

    for (int d : {3, 4}) {
        auto k = kuhnel(d);
        std::mt19937_64 rng(static_cast<std::uint64_t>(d));
        std::vector<Vertex> verts = k.vertices();
        for (int sample = 0; sample < 20; ++sample) {
            std::shuffle(verts.begin(), verts.end(), rng);
            const auto big = 2 + rng() % (verts.size() - 2);
            const auto small = 1 + rng() % (big - 1);
            std::vector<Vertex> outer(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(big));
            std::vector<Vertex> inner(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(small));
            std::sort(outer.begin(), outer.end());
            std::sort(inner.begin(), inner.end());
            CHECK(alexander_check(k, inner, outer).holds);
        }
    }
    const std::vector<Vertex> not_nested{1, 3};
    CHECK_THROWS_AS(alexander_check(kuhnel(3), not_nested, two), TopologyError);
    CHECK_THROWS_AS(alexander_check(standard_ball(3), one, two), TopologyError);
}

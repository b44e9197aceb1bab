#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "stacktri/build.hpp"
#include "stacktri/iso.hpp"
#include "stacktri/recognize.hpp"

using namespace stacktri;

namespace {

VertexMap shuffled_labels(const SimplicialComplex& k, std::uint64_t seed, Vertex offset) {
    std::vector<Vertex> targets;
    for (Vertex v : k.vertices()) targets.push_back(v + offset);
    std::mt19937_64 rng(seed);
    std::shuffle(targets.begin(), targets.end(), rng);
    VertexMap map;
    for (std::size_t i = 0; i < targets.size(); ++i) map[k.vertices()[i]] = targets[i];
    return map;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

}  // namespace

TEST_CASE("non-edge graphs", "[iso]") {
    auto k = non_edge_graph(kuhnel(3));
    CHECK(k.size() == 9);
    CHECK(k.num_edges() == 0);

    auto g = drop_isolated(non_edge_graph(k2d4(3, Partition({1, 3}))));
    const std::vector<int> leaves{1, 1, 3};
    CHECK(graph_isomorphism(g, star_forest(leaves)));
    const std::vector<int> wrong{1, 2, 2};
    CHECK_FALSE(graph_isomorphism(g, star_forest(wrong)));
}

TEST_CASE("witnesses replay under relabeling", "[iso]") {
    for (const auto& k : {kuhnel(3), k2d4(4, Partition({2, 3})), boundary_N(3, 9)}) {
        auto map = shuffled_labels(k, 11, 100);
        auto image = relabel(k, map);
        auto w = complex_isomorphism(k, image);
        REQUIRE(w);
        CHECK(relabel(k, *w.mapping) == image);
    }
}

TEST_CASE("refutations", "[iso]") {
    auto w = complex_isomorphism(k2d4(3, Partition({1, 3})), k2d4(3, Partition({2, 2})));
    CHECK_FALSE(w);
    CHECK(w.refutation == "non-edge graph profiles differ");
    CHECK(complex_isomorphism(kuhnel(3), boundary_N(3, 9)).refutation == "vertex counts differ");

    auto octahedron = join(join(standard_sphere(0), standard_sphere(0)).complex, standard_sphere(0)).complex;
    auto stacked6 = stacked_sphere(2, random_starring_trace(2, 6, 4));
    CHECK_FALSE(complex_isomorphism(octahedron, stacked6));
}

TEST_CASE("glued window complex is kuhnel", "[iso]") {
    for (int d = 2; d <= 4; ++d) {
        const int m = 2 * d + 3;
        CHECK(complex_isomorphism(handle_add(boundary_N(d, m), psi_0(d, m)), kuhnel(d)));
    }
}

TEST_CASE("automorphism counts", "[iso]") {
    for (int d = 0; d <= 4; ++d) CHECK(automorphism_count(standard_sphere(d)) == factorial(d + 2));
    for (int n = 3; n <= 9; ++n) CHECK(automorphism_count(cycle(n)) == static_cast<std::uint64_t>(2 * n));
    // brute-force oracle over all vertex permutations
    CHECK(automorphism_count(kuhnel(2)) == 42);
    CHECK(automorphism_count(kuhnel(3)) == 18);
    CHECK(automorphism_count(kuhnel(4)) == 22);

    for (const auto& k : {kuhnel(3), k2d4(3, Partition({1, 1, 2})), stacked_sphere(3, random_starring_trace(3, 10, 9))}) {
        const auto count = automorphism_count(k);
        CHECK(factorial(static_cast<int>(k.num_vertices())) % count == 0);
        CHECK(automorphism_count(relabel(k, shuffled_labels(k, 5, 40))) == count);
    }
    Graph path(std::vector<Vertex>{1, 2, 3});
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(graph_automorphism_count(path) == 2);
}

TEST_CASE("distinct partitions give distinct non-edge graphs", "[iso]") {
    for (int d = 1; d <= 6; ++d) {
        std::vector<Graph> graphs;
        for (const auto& p : enumerate_partitions(d + 1)) {
            std::vector<int> leaves{1};
            leaves.insert(leaves.end(), p.parts().begin(), p.parts().end());
            graphs.push_back(star_forest(leaves));
        }
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i + 1; j < graphs.size(); ++j) CHECK_FALSE(graph_isomorphism(graphs[i], graphs[j]));
    }
    for (int d = 3; d <= 4; ++d) {
        auto parts = enumerate_partitions(d + 1);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                CHECK_FALSE(complex_isomorphism(k2d4(d, parts[i]), k2d4(d, parts[j])));
    }
}

TEST_CASE("reconstruction from edge graphs", "[iso]") {
    for (int d = 2; d <= 4; ++d) {
        auto g = edge_graph(standard_sphere(d));
        CHECK(reconstruct_stacked(g, d) == standard_sphere(d));
    }
    CHECK_THROWS_WITH(reconstruct_stacked(edge_graph(kuhnel(3)), 3), "not a stacked-sphere edge graph");
    std::mt19937_64 rng(42);
    for (int i = 0; i < 60; ++i) {
        const int d = 2 + i % 3;
        const int n = d + 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(14 - d));
        auto s = stacked_sphere(d, random_starring_trace(d, n, rng()));
        auto back = reconstruct_stacked(edge_graph(s), d);
        CHECK(edge_graph(back).edge_labels() == edge_graph(s).edge_labels());
        CHECK(complex_isomorphism(back, s));
    }
}

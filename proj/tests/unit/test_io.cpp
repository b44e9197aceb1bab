#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "stacktri/build.hpp"
#include "stacktri/io.hpp"
#include "stacktri/iso.hpp"

using namespace stacktri;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "stacktri_io_tests";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("text form", "[io]") {
    auto k = standard_sphere(2);
    CHECK(to_text(k) == "dim 2 vertices 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
    CHECK(complex_from_text(to_text(k)) == k);
    CHECK(to_json(k) == "{\"dim\":2,\"facets\":[[1,2,3],[1,2,4],[1,3,4],[2,3,4]]}\n");
}

TEST_CASE("export and import round trip", "[io]") {
    for (const auto& k : {kuhnel(3), k2d4(3, Partition({1, 3})), cycle(9), standard_sphere(0)}) {
        auto text = scratch("k.cplx");
        auto js = scratch("k.json");
        export_complex(k, text);
        export_complex(k, js);
        CHECK(import_complex(text) == k);
        CHECK(import_complex(js) == k);
        CHECK(read_file(text) == to_text(k));
        export_complex(import_complex(text), text);
        CHECK(read_file(text) == to_text(k));
    }
}

TEST_CASE("facet file diagnostics", "[io]") {
    CHECK_THROWS_WITH(complex_from_text("dim 2 vertices 3\n3 2 1\n"), Catch::Matchers::ContainsSubstring("vertices not increasing"));
    try {
        complex_from_text("dim 2 vertices 4\n1 2 3\n\n2 1 4\n");
        FAIL("no error");
    } catch (const FormatError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_WITH(complex_from_text("dim 1 vertices 2\n1 2\n1 2\n"), Catch::Matchers::ContainsSubstring("duplicate facet"));
    CHECK_THROWS_WITH(complex_from_text("dim 2 vertices 3\n1 2 3\n1 2\n"), Catch::Matchers::ContainsSubstring("contained in"));
    CHECK_THROWS_WITH(complex_from_text("dim 1 vertices 3\n1 2 3\n"), Catch::Matchers::ContainsSubstring("dimension mismatch"));
    CHECK_THROWS_WITH(complex_from_text("dim 2 vertices 3\n1 2\n"), Catch::Matchers::ContainsSubstring("dimension mismatch"));
    CHECK_THROWS_WITH(complex_from_text("dim 1 vertices 5\n1 2\n"), Catch::Matchers::ContainsSubstring("vertex count"));
    CHECK_THROWS_WITH(complex_from_text("1 2 3\n"), Catch::Matchers::ContainsSubstring("header"));
    CHECK_THROWS_WITH(complex_from_text("dim 1 vertices 2\n1 x\n"), Catch::Matchers::ContainsSubstring("integer"));
    CHECK_THROWS_WITH(complex_from_json("{\"dim\":1,\"facets\":[[2,1]]}"), Catch::Matchers::ContainsSubstring("vertices not increasing"));
    CHECK_THROWS_AS(complex_from_json("{\"dim\":1"), FormatError);
    CHECK_THROWS_AS(import_complex(scratch("missing.cplx")), TopologyError);
}

TEST_CASE("graph files", "[io]") {
    auto g = graph_from_text("nodes 4\n1 2\n2 3\n");
    CHECK(g.size() == 4);
    CHECK(g.num_edges() == 2);
    CHECK(graph_to_text(g) == "nodes 4\n1 2\n2 3\n");

    auto n = non_edge_graph(k2d4(3, Partition({1, 3})));
    auto back = graph_from_text(graph_to_text(drop_isolated(n)));
    CHECK(back.edge_labels() == drop_isolated(n).edge_labels());
    CHECK(back.labels() == drop_isolated(n).labels());

    CHECK_THROWS_AS(graph_from_text("nodes 2\n1 3\n"), FormatError);
    CHECK_THROWS_AS(graph_from_text("nodes 2\n1 1\n"), FormatError);
    CHECK_THROWS_AS(graph_from_text("edges 2\n"), FormatError);
}

TEST_CASE("trace files", "[io]") {
    auto trace = random_starring_trace(3, 12, 7);
    auto back = trace_from_text(trace_to_text(trace));
    CHECK(stacked_sphere(3, back) == stacked_sphere(3, trace));

    auto parsed = trace_from_text("base 2 3 4 5\n2 3 4 | 9\n");
    CHECK(parsed.base == Simplex{2, 3, 4, 5});
    CHECK(stacked_sphere(2, parsed).num_vertices() == 5);
    CHECK_THROWS_AS(trace_from_text("1 2 3 4\n"), FormatError);
    CHECK_THROWS_AS(trace_from_text("1 2 3 | 4 5\n"), FormatError);
}

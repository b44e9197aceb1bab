// Command-line front end. Exit status: 0 success or verdict true, 1 verdict
// false, 2 usage or input error. Reports go to stdout as JSON unless --plain.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stacktri/build.hpp"
#include "stacktri/homology.hpp"
#include "stacktri/io.hpp"
#include "stacktri/iso.hpp"
#include "stacktri/partitions.hpp"
#include "stacktri/recognize.hpp"
#include "stacktri/suite.hpp"

using json = nlohmann::ordered_json;
using namespace stacktri;

namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool plain_output = false;

void emit(const json& report) {
    if (!plain_output) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : report.items())
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

std::vector<long long> parse_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("bad ") + what + " '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what);
    return out;
}

std::vector<Vertex> parse_vertices(const std::string& text) {
    std::vector<Vertex> out;
    for (auto v : parse_list(text, "vertex list")) {
        if (v < 0) throw UsageError("negative vertex label");
        out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    for (auto v : parse_list(text, "partition")) parts.push_back(static_cast<int>(v));
    try {
        return Partition(parts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

FacetBijection parse_map(const std::string& text) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("map entries look like x:y");
        auto x = parse_vertices(item.substr(0, colon));
        auto y = parse_vertices(item.substr(colon + 1));
        if (x.size() != 1 || y.size() != 1) throw UsageError("map entries look like x:y");
        pairs.emplace_back(x[0], y[0]);
    }
    return FacetBijection(pairs);
}

json facets_json(const std::vector<Simplex>& faces) {
    json out = json::array();
    for (const auto& f : faces) out.push_back(f.vertices());
    return out;
}

json summary(const SimplicialComplex& k) {
    return {{"dim", k.dim()}, {"vertices", k.num_vertices()}, {"facets", k.num_facets()}, {"f_vector", k.f_vector()}};
}

int verdict_code(bool verdict) { return verdict ? 0 : 1; }

struct Args {
    std::string kind;
    std::vector<std::string> files;
    int dim = -1;
    int m = -1;
    int n = -1;
    std::string partition, trace, out, map, vertices, complex, sub, inner, outer, graph, parity;
    int max_dim = 5;
    std::uint64_t seed = 0;
};

int require(int value, const char* flag) {
    if (value < 0) throw UsageError(std::string("missing ") + flag);
    return value;
}

const std::string& require(const std::string& value, const char* flag) {
    if (value.empty()) throw UsageError(std::string("missing ") + flag);
    return value;
}

const std::string& file_arg(const Args& a, std::size_t index) {
    if (a.files.size() <= index) throw UsageError("missing input file");
    return a.files[index];
}

// Writes to -o when given, otherwise prints the facet list.
int deliver(const SimplicialComplex& k, json report, const Args& a) {
    if (a.out.empty()) {
        std::cout << to_text(k);
        return 0;
    }
    export_complex(k, a.out);
    report["summary"] = summary(k);
    report["output"] = a.out;
    emit(report);
    return 0;
}

int run_build(const Args& a, json report) {
    report["kind"] = a.kind;
    SimplicialComplex k;
    if (a.kind == "sphere") k = standard_sphere(require(a.dim, "--dim"));
    else if (a.kind == "ball") k = standard_ball(require(a.dim, "--dim"));
    else if (a.kind == "cycle") k = cycle(require(a.n, "--n"));
    else if (a.kind == "boundary-n") k = boundary_N(require(a.dim, "--dim"), require(a.m, "--m"));
    else if (a.kind == "kuhnel") k = kuhnel(require(a.dim, "--dim"));
    else if (a.kind == "k2d4") k = k2d4(require(a.dim, "--dim"), parse_partition(require(a.partition, "--partition")));
    else if (a.kind == "stacked") {
        auto trace = trace_from_text(read_file(require(a.trace, "--trace")));
        int d = a.dim >= 0 ? a.dim : (trace.base.empty() ? -1 : trace.base.dim() - 1);
        if (d < 0 && !trace.steps.empty()) d = trace.steps.front().facet.dim();
        k = stacked_sphere(require(d, "--dim"), trace);
    } else {
        throw UsageError("unknown build kind '" + a.kind + "'");
    }
    return deliver(k, std::move(report), a);
}

int run_verify(const Args& a, json report) {
    report["check"] = a.kind;
    auto k = import_complex(file_arg(a, 0));
    bool verdict = false;
    if (a.kind == "stacked") {
        auto r = is_stacked_sphere(k);
        verdict = r.verdict;
        report["edges"] = r.edges;
        report["lower_bound"] = r.lower_bound;
        report["decided_by_edge_count"] = r.decided_by_edge_count;
        if (r.trace) report["trace"] = trace_to_text(*r.trace);
        if (r.residual) report["residual"] = facets_json(r.residual->facets());
    } else if (a.kind == "class-k") {
        verdict = is_class_K(k);
    } else if (a.kind == "admissible") {
        auto r = is_admissible(k, parse_map(require(a.map, "--map")));
        verdict = r.verdict;
        if (r.violation)
            report["violation"] = {{"x", r.violation->x},
                                   {"image", r.violation->image},
                                   {"distance", r.violation->distance},
                                   {"path", r.violation->path}};
    } else if (a.kind == "two-sided") {
        auto r = is_two_sided(k, parse_vertices(require(a.vertices, "--vertices")));
        verdict = r.verdict;
        report["components"] = r.components;
        report["positive"] = facets_json(r.positive);
        report["negative"] = facets_json(r.negative);
    } else if (a.kind == "pseudomanifold") {
        report["weak"] = is_weak_pseudomanifold(k);
        report["pseudomanifold"] = is_pseudomanifold(k);
        report["normal"] = verdict = is_normal_pseudomanifold(k);
    } else {
        throw UsageError("unknown verify check '" + a.kind + "'");
    }
    report["verdict"] = verdict;
    emit(report);
    return verdict_code(verdict);
}

int run_homology(const Args& a, json report) {
    report["query"] = a.kind;
    auto k = import_complex(require(a.complex, "--complex"));
    if (a.kind == "betti") {
        auto betti = betti_z2(k);
        report["betti"] = betti;
        if (betti.size() > 1 && betti[1] > 0)
            if (auto cycle = h1_certificate(k)) report["h1_cycle"] = facets_json(*cycle);
    } else if (a.kind == "relative") {
        auto l = import_complex(require(a.sub, "--sub"));
        report["betti"] = relative_betti_z2(k, l);
    } else if (a.kind == "euler") {
        report["euler"] = euler_characteristic(k);
    } else if (a.kind == "orientable") {
        auto r = orientable(k);
        report["verdict"] = r.orientable;
        if (!r.orientable) report["obstruction"] = facets_json(r.obstruction);
        emit(report);
        return verdict_code(r.orientable);
    } else if (a.kind == "alexander") {
        auto r = alexander_check(k, parse_vertices(require(a.inner, "--inner")),
                                 parse_vertices(require(a.outer, "--outer")));
        report["verdict"] = r.holds;
        report["inner"] = r.inner;
        report["outer"] = r.outer;
        emit(report);
        return verdict_code(r.holds);
    } else {
        throw UsageError("unknown homology query '" + a.kind + "'");
    }
    emit(report);
    return 0;
}

int run_iso(const Args& a, json report) {
    report["query"] = a.kind;
    if (a.kind == "test") {
        auto w = complex_isomorphism(import_complex(file_arg(a, 0)), import_complex(file_arg(a, 1)));
        report["verdict"] = static_cast<bool>(w);
        if (w) {
            json map = json::array();
            for (auto [x, y] : *w.mapping) map.push_back({x, y});
            report["mapping"] = map;
        } else {
            report["refutation"] = w.refutation;
        }
        emit(report);
        return verdict_code(static_cast<bool>(w));
    }
    if (a.kind == "auts") {
        report["automorphisms"] = automorphism_count(import_complex(file_arg(a, 0)));
    } else if (a.kind == "non-edge") {
        auto g = non_edge_graph(import_complex(file_arg(a, 0)));
        if (plain_output) {
            std::cout << graph_to_text(g);
            return 0;
        }
        report["non_edges"] = g.edge_labels();
    } else if (a.kind == "reconstruct") {
        auto g = graph_from_text(read_file(require(a.graph, "--graph")));
        return deliver(reconstruct_stacked(g, require(a.dim, "--dim")), std::move(report), a);
    } else {
        throw UsageError("unknown iso query '" + a.kind + "'");
    }
    emit(report);
    return 0;
}

int run_partitions(const Args& a, json report) {
    const int n = require(a.n, "<n>");
    if (a.kind == "count") {
        auto c = counts(n);
        report["n"] = n;
        report["total"] = c.total;
        report["even"] = c.even;
        report["odd"] = c.odd;
    } else if (a.kind == "list") {
        std::optional<Parity> only;
        if (a.parity == "even") only = Parity::even;
        else if (a.parity == "odd") only = Parity::odd;
        else if (!a.parity.empty()) throw UsageError("--parity is even or odd");
        json list = json::array();
        for (const auto& p : enumerate_partitions(n))
            if (!only || parity(p) == *only) list.push_back(p.parts());
        report["n"] = n;
        report["partitions"] = list;
    } else {
        throw UsageError("unknown partitions query '" + a.kind + "'");
    }
    emit(report);
    return 0;
}

int run_suite_command(const Args& a, json report) {
    SuiteOptions options;
    options.max_dim = a.max_dim;
    options.seed = a.seed;
    report["max_dim"] = a.max_dim;
    report["seed"] = a.seed;
    json checks = json::array();
    bool all = true;
    for (int id = 1; id <= criterion_count; ++id) {
        auto r = run_criterion(id, options);
        all = all && r.passed;
        checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                          {"seconds", r.seconds}});
    }
    report["checks"] = checks;
    report["passed"] = all;
    emit(report);
    return verdict_code(all);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stacked spheres, handles and sphere bundles over the circle"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--plain", plain_output, "key: value output instead of JSON");
    Args a;

    auto* build = app.add_subcommand("build", "construct a complex");
    build->add_option("kind", a.kind, "sphere|ball|cycle|boundary-n|kuhnel|k2d4|stacked")->required();
    build->add_option("--dim", a.dim);
    build->add_option("--m", a.m);
    build->add_option("--n", a.n, "cycle length");
    build->add_option("--partition", a.partition, "comma-separated parts, e.g. 1,3");
    build->add_option("--trace", a.trace, "starring trace file");
    build->add_option("-o,--output", a.out);

    auto* verify = app.add_subcommand("verify", "recognition predicates");
    verify->add_option("check", a.kind, "stacked|class-k|admissible|two-sided|pseudomanifold")->required();
    verify->add_option("file", a.files)->required();
    verify->add_option("--map", a.map, "facet bijection x:y,...");
    verify->add_option("--vertices", a.vertices, "vertex set of the sphere");

    auto* homology = app.add_subcommand("homology", "Z2 homology and orientability");
    homology->add_option("query", a.kind, "betti|relative|euler|orientable|alexander")->required();
    homology->add_option("--complex", a.complex);
    homology->add_option("--sub", a.sub, "subcomplex for relative homology");
    homology->add_option("--inner", a.inner, "vertices of L");
    homology->add_option("--outer", a.outer, "vertices of L'");

    auto* iso = app.add_subcommand("iso", "isomorphism and edge graphs");
    iso->add_option("query", a.kind, "test|auts|non-edge|reconstruct")->required();
    iso->add_option("files", a.files);
    iso->add_option("--graph", a.graph);
    iso->add_option("--dim", a.dim);
    iso->add_option("-o,--output", a.out);

    auto* parts = app.add_subcommand("partitions", "integer partitions by parity");
    parts->add_option("query", a.kind, "count|list")->required();
    parts->add_option("n", a.n)->required();
    parts->add_option("--parity", a.parity);

    auto* suite = app.add_subcommand("paper-suite", "run the acceptance battery");
    suite->add_option("--max-dim", a.max_dim);
    suite->add_option("--seed", a.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    json report;
    std::string echo;
    for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);
    report["command"] = echo;

    try {
        if (*build) return run_build(a, report);
        if (*verify) return run_verify(a, report);
        if (*homology) return run_homology(a, report);
        if (*iso) return run_iso(a, report);
        if (*parts) return run_partitions(a, report);
        return run_suite_command(a, report);
    } catch (const FormatError& e) {
        report["error"] = e.what();
        if (e.line()) report["line"] = e.line();
        emit(report);
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        report["error"] = e.what();
        emit(report);
        std::cerr << "error: " << e.what() << '\n';
    }
    return 2;
}

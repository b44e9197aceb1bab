#include "stacktri/recognize.hpp"

#include <algorithm>
#include <random>

namespace stacktri {

std::int64_t lower_bound_edges(std::int64_t n, int d) {
    return n * (d + 1) - static_cast<std::int64_t>(d + 2) * (d + 1) / 2;
}

namespace {

void require_normal(const SimplicialComplex& k) {
    if (k.empty()) throw TopologyError("empty complex");
    if (!k.is_pure()) throw TopologyError("not pure");
    if (!is_normal_pseudomanifold(k)) throw TopologyError("not a normal pseudomanifold");
}

std::vector<Vertex> collapsible_vertices(const SimplicialComplex& k) {
    std::vector<Vertex> out;
    if (static_cast<int>(k.num_vertices()) <= k.dim() + 2) return out;
    Graph g = edge_graph(k);
    for (Graph::Node n = 0; n < g.size(); ++n) {
        if (static_cast<int>(g.degree(n)) != k.dim() + 1) continue;
        Simplex neighbors;
        for (Graph::Node m : g.neighbors(n)) neighbors = neighbors.with(g.label(m));
        if (!k.has_face(neighbors)) out.push_back(g.label(n));
    }
    return out;
}

}  // namespace

CollapseRun collapse_run(const SimplicialComplex& k, std::optional<std::uint64_t> seed) {
    std::mt19937_64 rng(seed.value_or(0));
    CollapseRun run;
    SimplicialComplex current = k;
    std::vector<StarringStep> reversed;
    while (true) {
        auto candidates = collapsible_vertices(current);
        if (candidates.empty()) break;
        Vertex v = seed ? candidates[rng() % candidates.size()] : candidates.front();
        SimplicialComplex next = collapse_vertex(current, v);
        reversed.push_back({Simplex(link(current, Simplex{v}).vertices()), v});
        current = std::move(next);
    }
    run.reached_standard_sphere =
        static_cast<int>(current.num_vertices()) == current.dim() + 2 &&
        static_cast<int>(current.num_facets()) == current.dim() + 2 && current.is_pure();
    if (run.reached_standard_sphere) run.trace.base = Simplex(current.vertices());
    run.trace.steps.assign(reversed.rbegin(), reversed.rend());
    run.residual = std::move(current);
    return run;
}

StackedReport is_stacked_sphere(const SimplicialComplex& k) {
    require_normal(k);
    const int d = k.dim();
    StackedReport report;
    report.edges = static_cast<std::int64_t>(faces(k, 1).size());
    report.lower_bound = lower_bound_edges(static_cast<std::int64_t>(k.num_vertices()), d);

    // Edge-count equality characterizes stacked spheres only from d = 3 on.
    if (d >= 3 && report.edges != report.lower_bound) {
        report.decided_by_edge_count = true;
        return report;
    }
    CollapseRun run = collapse_run(k);
    report.verdict = run.reached_standard_sphere;
    if (report.verdict)
        report.trace = std::move(run.trace);
    else
        report.residual = std::move(run.residual);
    if (d >= 3 && !report.verdict)
        throw std::logic_error("edge count meets the lower bound but collapse failed");
    return report;
}

bool is_class_K(const SimplicialComplex& k) {
    require_normal(k);
    if (k.dim() < 2) throw TopologyError("class K needs dimension >= 2");
    return std::all_of(k.vertices().begin(), k.vertices().end(), [&](Vertex v) {
        return is_stacked_sphere(link(k, Simplex{v})).verdict;
    });
}

AdmissibilityReport is_admissible(const SimplicialComplex& k, const FacetBijection& psi) {
    if (!k.has_facet(psi.source())) throw TopologyError("source is not a facet: " + psi.source().to_string());
    if (!k.has_facet(psi.target())) throw TopologyError("target is not a facet: " + psi.target().to_string());
    Graph g = edge_graph(k);
    AdmissibilityReport report{true, std::nullopt};
    for (auto [x, y] : psi.pairs()) {
        auto from = *g.find(x);
        auto to = *g.find(y);
        int dist = g.distances_from(from)[to];
        if (dist >= 0 && dist < 3) {
            AdmissibilityViolation v{x, y, dist, {}};
            for (auto n : g.shortest_path(from, to)) v.path.push_back(g.label(n));
            report.verdict = false;
            report.violation = std::move(v);
            return report;
        }
    }
    return report;
}

std::vector<FacetBijection> enumerate_admissible(const SimplicialComplex& k, const Simplex& s1,
                                                 const Simplex& s2) {
    if (!k.has_facet(s1)) throw TopologyError("not a facet: " + s1.to_string());
    if (!k.has_facet(s2)) throw TopologyError("not a facet: " + s2.to_string());
    std::vector<FacetBijection> out;
    if (!s1.is_disjoint_from(s2) || s1.size() != s2.size()) return out;

    Graph g = edge_graph(k);
    // far[i][j]: s1[i] and s2[j] are at distance >= 3
    std::vector<std::vector<bool>> far(s1.size(), std::vector<bool>(s2.size()));
    for (std::size_t i = 0; i < s1.size(); ++i) {
        auto dist = g.distances_from(*g.find(s1[i]));
        for (std::size_t j = 0; j < s2.size(); ++j) {
            int dd = dist[*g.find(s2[j])];
            far[i][j] = dd < 0 || dd >= 3;
        }
    }
    std::vector<std::size_t> choice(s1.size());
    std::vector<bool> used(s2.size(), false);
    auto search = [&](auto&& self, std::size_t i) -> void {
        if (i == s1.size()) {
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (std::size_t a = 0; a < s1.size(); ++a) pairs.emplace_back(s1[a], s2[choice[a]]);
            out.emplace_back(std::move(pairs));
            return;
        }
        for (std::size_t j = 0; j < s2.size(); ++j) {
            if (used[j] || !far[i][j]) continue;
            used[j] = true;
            choice[i] = j;
            self(self, i + 1);
            used[j] = false;
        }
    };
    search(search, 0);
    return out;
}

TwoSidedReport is_two_sided(const SimplicialComplex& k, std::span<const Vertex> s) {
    CrossingGraph g = one_end_graph(k, s);
    TwoSidedReport report;
    report.components = g.graph.component_count();
    report.verdict = report.components == 2;
    auto ids = g.graph.component_ids();
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        (ids[i] == 0 ? report.positive : report.negative).push_back(g.edges[i]);
    return report;
}

}  // namespace stacktri

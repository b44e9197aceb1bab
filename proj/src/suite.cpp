#include "stacktri/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "stacktri/build.hpp"
#include "stacktri/homology.hpp"
#include "stacktri/iso.hpp"
#include "stacktri/partitions.hpp"
#include "stacktri/recognize.hpp"

namespace stacktri {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return splitmix(splitmix(splitmix(seed) ^ a) ^ b);
}

std::int64_t edge_count(const SimplicialComplex& k) { return static_cast<std::int64_t>(edge_graph(k).num_edges()); }

template <class T>
std::string join(const std::vector<T>& xs) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    out << ')';
    return out.str();
}

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    return static_cast<bool>(complex_isomorphism(a, b));
}

struct Outcome {
    bool passed = true;
    std::vector<std::string> notes;

    void fail(std::string why) {
        passed = false;
        if (notes.size() < 6) notes.push_back(std::move(why));
    }
    void note(std::string what) { notes.push_back(std::move(what)); }
    std::string detail() const {
        std::string out;
        for (std::size_t i = 0; i < notes.size(); ++i) out += (i ? "; " : "") + notes[i];
        return out;
    }
};

int capped(int hi, const SuiteOptions& o) { return std::min(hi, o.max_dim); }

std::vector<SimplicialComplex> edge_law_spheres(int d, const SuiteOptions& o) {
    std::vector<SimplicialComplex> out;
    for (int n = d + 2; n <= d + 12; ++n)
        out.push_back(stacked_sphere(d, random_starring_trace(d, n, derive(o.seed, 1, static_cast<std::uint64_t>(d * 100 + n)))));
    return out;
}

struct ReconstructionCase {
    int d;
    SimplicialComplex sphere;
};

std::vector<ReconstructionCase> reconstruction_cases(const SuiteOptions& o) {
    std::vector<ReconstructionCase> out;
    const int top = capped(4, o);
    if (top < 2) return out;
    std::mt19937_64 rng(derive(o.seed, 12));
    for (int i = 0; i < 100; ++i) {
        const int d = 2 + i % (top - 1);
        std::uniform_int_distribution<int> size(d + 2, 15);
        const int n = size(rng);
        out.push_back({d, stacked_sphere(d, random_starring_trace(d, n, rng()))});
    }
    return out;
}

// First vertex set (lexicographically) spanning an induced boundary of a
// d-simplex that is two-sided.
std::optional<std::vector<Vertex>> two_sided_standard_sphere(const SimplicialComplex& k) {
    const int d = k.dim();
    const auto& verts = k.vertices();
    const std::size_t size = static_cast<std::size_t>(d) + 1;
    if (verts.size() < size) return std::nullopt;
    std::vector<bool> pick(verts.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
        std::vector<Vertex> w;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (pick[i]) w.push_back(verts[i]);
        Simplex s(w);
        if (k.has_face(s)) continue;
        bool all_ridges = true;
        for (std::size_t i = 0; i < s.size() && all_ridges; ++i) all_ridges = k.has_face(s.without_index(i));
        if (!all_ridges) continue;
        if (is_two_sided(k, w).verdict) return w;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return std::nullopt;
}

struct Deletion {
    std::vector<Vertex> sphere;
    HandleDeletion result;
};

std::optional<Deletion> kuhnel3_deletion() {
    auto k = kuhnel(3);
    auto w = two_sided_standard_sphere(k);
    if (!w) return std::nullopt;
    return Deletion{*w, handle_delete(k, *w)};
}

// --- criteria ---------------------------------------------------------------

Outcome edge_law(const SuiteOptions& o) {
    Outcome out;
    std::size_t checked = 0;
    for (int d = 2; d <= capped(5, o); ++d)
        for (const auto& s : edge_law_spheres(d, o)) {
            ++checked;
            const auto n = static_cast<std::int64_t>(s.num_vertices());
            if (edge_count(s) != lower_bound_edges(n, d))
                out.fail("d=" + std::to_string(d) + " n=" + std::to_string(n) + ": " + std::to_string(edge_count(s)) +
                         " edges");
        }
    out.note(std::to_string(checked) + " stacked spheres");
    return out;
}

Outcome lower_bound(const SuiteOptions& o) {
    Outcome out;
    const auto corpus = suite_corpus(o);
    std::size_t tight = 0;
    for (const auto& entry : corpus) {
        const auto& k = entry.complex;
        const int d = k.dim();
        if (!is_normal_pseudomanifold(k)) {
            out.fail(entry.name + " is not a normal pseudomanifold");
            continue;
        }
        const auto e = edge_count(k);
        const auto bound = lower_bound_edges(static_cast<std::int64_t>(k.num_vertices()), d);
        if (e < bound) out.fail(entry.name + ": " + std::to_string(e) + " < " + std::to_string(bound));
        if (d >= 3 && (e == bound) != entry.stacked)
            out.fail(entry.name + ": equality " + (e == bound ? "holds" : "fails") + " but stacked=" +
                     (entry.stacked ? "true" : "false"));
        if (d >= 3 && e == bound) ++tight;
    }
    out.note(std::to_string(corpus.size()) + " complexes, " + std::to_string(tight) + " tight in d>=3");
    return out;
}

Outcome admissibility_census(const SuiteOptions& o) {
    Outcome out;
    for (int d = 2; d <= capped(5, o); ++d) {
        std::vector<std::size_t> found;
        for (int m = 2 * d + 2; m <= 2 * d + 4; ++m) {
            auto k = boundary_N(d, m);
            auto maps = enumerate_admissible(k, last_window_facet(d, m), first_window_facet(d));
            found.push_back(maps.size());
        }
        const std::vector<std::size_t> expected{0, 1, std::size_t{1} << d};
        if (found != expected) out.fail("d=" + std::to_string(d) + " got " + join(found) + " want " + join(expected));
        else out.note("d=" + std::to_string(d) + " " + join(found));
    }
    return out;
}

Outcome kuhnel_identity(const SuiteOptions& o) {
    Outcome out;
    auto glued = handle_add(boundary_N(3, 9), psi_0(3, 9));
    if (!isomorphic(glued, kuhnel(3))) out.fail("d=3 glued complex not isomorphic to kuhnel(3)");
    const auto f = glued.f_vector();
    const auto b = betti_z2(glued);
    const bool orient = orientable(glued).orientable;
    if (f != decltype(f){9, 36, 54, 27}) out.fail("f-vector " + join(f));
    if (b != decltype(b){1, 1, 1, 1}) out.fail("betti " + join(b));
    if (orient) out.fail("orientable");
    out.note("f=" + join(f) + " betti=" + join(b) + " orientable=" + (orient ? "true" : "false"));
    for (int d : {2, 4}) {
        if (d > o.max_dim) continue;
        const int m = 2 * d + 3;
        if (!isomorphic(handle_add(boundary_N(d, m), psi_0(d, m)), kuhnel(d)))
            out.fail("d=" + std::to_string(d) + " glued complex not isomorphic to kuhnel");
        else out.note("d=" + std::to_string(d) + " isomorphic");
    }
    return out;
}

Outcome handle_round_trip(const SuiteOptions&) {
    Outcome out;
    auto del = kuhnel3_deletion();
    if (!del) {
        out.fail("no two-sided induced standard 2-sphere in kuhnel(3)");
        return out;
    }
    const auto& opened = del->result.complex;
    out.note("sphere " + join(del->sphere));
    if (opened.num_vertices() != 13) out.fail(std::to_string(opened.num_vertices()) + " vertices after deletion");
    if (!is_stacked_sphere(opened).verdict) out.fail("deleted complex not stacked");
    if (!isomorphic(opened, boundary_N(3, 9))) out.fail("deleted complex not isomorphic to boundary_N(3,9)");
    if (!isomorphic(handle_add(opened, del->result.psi), kuhnel(3))) out.fail("re-added handle not kuhnel(3)");
    return out;
}

Outcome partition_orientability(const SuiteOptions& o) {
    Outcome out;
    for (int d : {3, 4}) {
        if (d > o.max_dim) continue;
        std::string row = "d=" + std::to_string(d);
        for (const auto& p : enumerate_partitions(d + 1)) {
            const bool orient = orientable(k2d4(d, p)).orientable;
            const bool even = parity(p) == Parity::even;
            row += " " + p.to_string() + (orient ? ":orientable" : ":non-orientable");
            if (orient != even) out.fail("d=" + std::to_string(d) + " p=" + p.to_string() + " parity " + to_string(parity(p)));
        }
        out.note(row);
    }
    return out;
}

Outcome non_edge_structure(const SuiteOptions& o) {
    Outcome out;
    for (int d : {3, 4}) {
        if (d > o.max_dim) continue;
        std::vector<Graph> graphs;
        const auto parts = enumerate_partitions(d + 1);
        for (const auto& p : parts) {
            auto g = non_edge_graph(k2d4(d, p));
            if (g.num_edges() != static_cast<std::size_t>(d + 2))
                out.fail("d=" + std::to_string(d) + " p=" + p.to_string() + ": " + std::to_string(g.num_edges()) +
                         " non-edges");
            std::vector<int> leaves{1};
            leaves.insert(leaves.end(), p.parts().begin(), p.parts().end());
            auto reduced = drop_isolated(g);
            if (!graph_isomorphism(reduced, star_forest(leaves)))
                out.fail("d=" + std::to_string(d) + " p=" + p.to_string() + ": not a star forest");
            graphs.push_back(std::move(reduced));
        }
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i + 1; j < graphs.size(); ++j)
                if (graph_isomorphism(graphs[i], graphs[j]))
                    out.fail("d=" + std::to_string(d) + " " + parts[i].to_string() + " ~ " + parts[j].to_string());
        out.note("d=" + std::to_string(d) + " " + std::to_string(parts.size()) + " partitions");
    }
    return out;
}

Outcome automorphisms(const SuiteOptions& o) {
    Outcome out;
    for (int d = 2; d <= capped(4, o); ++d) {
        const auto count = automorphism_count(kuhnel(d));
        const auto expected = static_cast<std::uint64_t>(4 * d + 6);
        if (count != expected)
            out.fail("d=" + std::to_string(d) + ": " + std::to_string(count) + " (want " + std::to_string(expected) + ")");
        else out.note("d=" + std::to_string(d) + ": " + std::to_string(count));
    }
    return out;
}

Outcome alexander_audit(const SuiteOptions& o) {
    Outcome out;
    for (int d : {3, 4}) {
        if (d > o.max_dim) continue;
        auto k = kuhnel(d);
        std::vector<Vertex> verts = k.vertices();
        std::mt19937_64 rng(derive(o.seed, 9, static_cast<std::uint64_t>(d)));
        const int n = static_cast<int>(verts.size());
        int holds = 0;
        for (int sample = 0; sample < 50; ++sample) {
            std::uniform_int_distribution<int> outer_size(2, n - 1);
            const int big = outer_size(rng);
            std::uniform_int_distribution<int> inner_size(1, big - 1);
            const int small = inner_size(rng);
            std::shuffle(verts.begin(), verts.end(), rng);
            std::vector<Vertex> outer(verts.begin(), verts.begin() + big);
            std::vector<Vertex> inner(verts.begin(), verts.begin() + small);
            std::sort(outer.begin(), outer.end());
            std::sort(inner.begin(), inner.end());
            auto report = alexander_check(k, inner, outer);
            if (report.holds) ++holds;
            else out.fail("d=" + std::to_string(d) + " L=" + join(inner) + " L'=" + join(outer));
        }
        out.note("d=" + std::to_string(d) + " " + std::to_string(holds) + "/50");
    }
    return out;
}

Outcome partition_counts(const SuiteOptions&) {
    Outcome out;
    const auto p10 = enumerate_partitions(10).size();
    if (p10 != 42) out.fail("P(10)=" + std::to_string(p10));
    std::vector<PartitionCounts> table(61);
    for (int n = 1; n <= 60; ++n) {
        table[static_cast<std::size_t>(n)] = counts(n);
        if (table[static_cast<std::size_t>(n)].total != partition_count_pentagonal(n))
            out.fail("pentagonal mismatch at n=" + std::to_string(n));
    }
    for (int n = 2; n <= 40; ++n) {
        const auto& c = table[static_cast<std::size_t>(n)];
        if (c.even + c.odd != c.total) out.fail("P0+P1 != P at n=" + std::to_string(n));
        if (2 * std::min(c.even, c.odd) < table[static_cast<std::size_t>(n - 1)].total)
            out.fail("min(P0,P1) < P(n-1)/2 at n=" + std::to_string(n));
    }
    const double ratio = static_cast<double>(table[50].even) / static_cast<double>(table[50].total);
    if (ratio < 0.45 || ratio > 0.55) out.fail("P0(50)/P(50)=" + std::to_string(ratio));
    out.note("P(10)=" + std::to_string(p10) + " P0(50)/P(50)=" + std::to_string(ratio));
    return out;
}

Outcome class_k(const SuiteOptions& o) {
    Outcome out;
    std::size_t checked = 0;
    for (int d = 2; d <= capped(4, o); ++d) {
        ++checked;
        if (!is_class_K(kuhnel(d))) out.fail("kuhnel(" + std::to_string(d) + ")");
        for (const auto& p : enumerate_partitions(d + 1)) {
            ++checked;
            if (!is_class_K(k2d4(d, p))) out.fail("k2d4(" + std::to_string(d) + "," + p.to_string() + ")");
        }
    }
    out.note(std::to_string(checked) + " complexes");
    return out;
}

Outcome reconstruction(const SuiteOptions& o) {
    Outcome out;
    const auto cases = reconstruction_cases(o);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        try {
            if (isomorphic(reconstruct_stacked(edge_graph(c.sphere), c.d), c.sphere)) ++ok;
            else out.fail("case " + std::to_string(i) + " not isomorphic");
        } catch (const TopologyError& e) {
            out.fail("case " + std::to_string(i) + ": " + e.what());
        }
    }
    out.note(std::to_string(ok) + "/" + std::to_string(cases.size()) + " reconstructed");
    return out;
}

struct Criterion {
    const char* name;
    std::function<Outcome(const SuiteOptions&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> table{
        {"stacked edge-count law", edge_law},
        {"lower bound inequality", lower_bound},
        {"admissibility census", admissibility_census},
        {"kuhnel(3) from boundary_N(3,9)", kuhnel_identity},
        {"handle deletion round trip", handle_round_trip},
        {"partition parity orientability", partition_orientability},
        {"non-edge star forests", non_edge_structure},
        {"kuhnel automorphism count 4d+6", automorphisms},
        {"alexander duality audit", alexander_audit},
        {"partition counts", partition_counts},
        {"class K membership", class_k},
        {"edge graph reconstruction", reconstruction},
    };
    return table;
}

}  // namespace

std::vector<CorpusEntry> suite_corpus(const SuiteOptions& o) {
    std::vector<CorpusEntry> corpus;
    for (int d = 2; d <= capped(5, o); ++d) {
        auto spheres = edge_law_spheres(d, o);
        for (auto& s : spheres) {
            auto name = "stacked(" + std::to_string(d) + "," + std::to_string(s.num_vertices()) + ")";
            corpus.push_back({name, std::move(s), true});
        }
        for (int m = 2 * d + 2; m <= 2 * d + 4; ++m)
            corpus.push_back({"boundary_N(" + std::to_string(d) + "," + std::to_string(m) + ")", boundary_N(d, m), true});
    }
    for (int d = 2; d <= capped(4, o); ++d) {
        corpus.push_back({"kuhnel(" + std::to_string(d) + ")", kuhnel(d), false});
        for (const auto& p : enumerate_partitions(d + 1))
            corpus.push_back({"k2d4(" + std::to_string(d) + "," + p.to_string() + ")", k2d4(d, p), false});
    }
    if (o.max_dim >= 3)
        if (auto del = kuhnel3_deletion()) corpus.push_back({"kuhnel(3) cut open", del->result.complex, true});
    for (auto& c : reconstruction_cases(o))
        corpus.push_back({"reconstruction sphere d=" + std::to_string(c.d), std::move(c.sphere), true});
    return corpus;
}

CheckResult run_criterion(int id, const SuiteOptions& options) {
    if (id < 1 || id > criterion_count) throw std::out_of_range("criterion id " + std::to_string(id));
    const auto& c = criteria()[static_cast<std::size_t>(id - 1)];
    CheckResult result;
    result.id = id;
    result.name = c.name;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto outcome = c.run(options);
        result.passed = outcome.passed;
        result.detail = outcome.detail();
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
    std::vector<CheckResult> results;
    for (int id = 1; id <= criterion_count; ++id) results.push_back(run_criterion(id, options));
    return results;
}

}  // namespace stacktri

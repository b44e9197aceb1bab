#include "stacktri/build.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "stacktri/recognize.hpp"

namespace stacktri {

// ---------------------------------------------------------------------------
// FacetBijection

FacetBijection::FacetBijection(std::vector<std::pair<Vertex, Vertex>> pairs)
    : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    std::vector<Vertex> src, dst;
    for (auto [a, b] : pairs_) {
        src.push_back(a);
        dst.push_back(b);
    }
    source_ = Simplex(src);  // throws on repeated source
    target_ = Simplex(dst);  // throws on repeated target
    if (!source_.is_disjoint_from(target_))
        throw TopologyError("facet bijection between overlapping sets");
}

Vertex FacetBijection::image(Vertex x) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(x, Vertex{0}));
    if (it == pairs_.end() || it->first != x)
        throw TopologyError("vertex " + std::to_string(x) + " not in bijection source");
    return it->second;
}

FacetBijection FacetBijection::inverse() const {
    std::vector<std::pair<Vertex, Vertex>> inv;
    for (auto [a, b] : pairs_) inv.emplace_back(b, a);
    return FacetBijection(std::move(inv));
}

std::string FacetBijection::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        out << (i ? ", " : "") << pairs_[i].first << "->" << pairs_[i].second;
    out << '}';
    return out.str();
}

// ---------------------------------------------------------------------------
// Standard objects

namespace {

Simplex range_simplex(Vertex first, int count) {
    std::vector<Vertex> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) v[i] = first + static_cast<Vertex>(i);
    return Simplex(std::move(v));
}

std::vector<Simplex> ridges_of(const Simplex& f) {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f.without_index(i));
    return out;
}

}  // namespace

SimplicialComplex standard_sphere(int d, Vertex first) {
    if (d < 0) throw TopologyError("standard sphere needs d >= 0");
    return SimplicialComplex(ridges_of(range_simplex(first, d + 2)));
}

SimplicialComplex standard_ball(int d, Vertex first) {
    if (d < 0) throw TopologyError("standard ball needs d >= 0");
    return SimplicialComplex({range_simplex(first, d + 1)});
}

SimplicialComplex cycle(int n, Vertex first) {
    if (n < 3) throw TopologyError("cycle needs n >= 3");
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back(Simplex{first + static_cast<Vertex>(i),
                                first + static_cast<Vertex>((i + 1) % n)});
    return SimplicialComplex(std::move(edges));
}

// ---------------------------------------------------------------------------
// Starring and collapsing

SimplicialComplex star_vertex(const SimplicialComplex& k, const Simplex& facet, Vertex v) {
    if (!k.has_facet(facet)) throw TopologyError("not a facet: " + facet.to_string());
    if (k.has_vertex(v)) throw TopologyError("vertex " + std::to_string(v) + " already present");
    std::vector<Simplex> out;
    for (const auto& f : k.facets())
        if (f != facet) out.push_back(f);
    for (const auto& r : ridges_of(facet)) out.push_back(r.with(v));
    return SimplicialComplex(std::move(out));
}

SimplicialComplex collapse_vertex(const SimplicialComplex& k, Vertex v) {
    if (!k.has_vertex(v)) throw TopologyError("vertex " + std::to_string(v) + " not in complex");
    if (static_cast<int>(k.num_vertices()) <= k.dim() + 2) throw TopologyError("already minimal");
    SimplicialComplex lk = link(k, Simplex{v});
    if (static_cast<int>(lk.num_vertices()) != k.dim() + 1)
        throw TopologyError("vertex not collapsible: degree " + std::to_string(lk.num_vertices()));
    Simplex neighbors(lk.vertices());
    if (k.has_face(neighbors))
        throw TopologyError("vertex not collapsible: neighbor set already a face");
    std::vector<Simplex> out;
    for (const auto& f : k.facets())
        if (!f.contains(v)) out.push_back(f);
    out.push_back(neighbors);
    SimplicialComplex result(std::move(out));
    if (result.num_facets() + lk.num_facets() != k.num_facets() + 1)
        throw TopologyError("vertex not collapsible: result has facet containment");
    return result;
}

SimplicialComplex stacked_sphere(int d, const StarringTrace& trace) {
    if (d < 1) throw TopologyError("stacked sphere needs d >= 1");
    Simplex base = trace.base.empty() ? range_simplex(1, d + 2) : trace.base;
    if (static_cast<int>(base.size()) != d + 2)
        throw TopologyError("trace base must have d+2 vertices");
    SimplicialComplex k(ridges_of(base));
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        try {
            k = star_vertex(k, trace.steps[i].facet, trace.steps[i].new_vertex);
        } catch (const TopologyError& e) {
            throw TopologyError("trace step " + std::to_string(i) + " not replayable: " + e.what());
        }
    }
    return k;
}

StarringTrace random_starring_trace(int d, int n, std::uint64_t seed) {
    if (n < d + 2) throw TopologyError("stacked d-sphere needs at least d+2 vertices");
    std::mt19937_64 rng(seed);
    StarringTrace trace;
    SimplicialComplex k = standard_sphere(d);
    for (int v = d + 3; v <= n; ++v) {
        const auto& facet = k.facets()[rng() % k.num_facets()];
        trace.steps.push_back({facet, static_cast<Vertex>(v)});
        k = star_vertex(k, facet, static_cast<Vertex>(v));
    }
    return trace;
}

// ---------------------------------------------------------------------------
// Boundary complexes

SimplicialComplex boundary_complex(const SimplicialComplex& k) {
    if (k.empty() || !k.is_pure()) throw TopologyError("not pure");
    std::map<Simplex, int> count;
    for (const auto& f : k.facets())
        for (const auto& r : ridges_of(f)) ++count[r];
    std::vector<Simplex> out;
    for (const auto& [ridge, c] : count)
        if (c == 1) out.push_back(ridge);
    return SimplicialComplex(std::move(out));
}

SimplicialComplex boundary_N(int d, int m) {
    if (d < 1) throw TopologyError("boundary_N needs d >= 1");
    if (m < 1) throw TopologyError("boundary_N needs m >= 1");
    std::vector<Simplex> windows;
    for (int n = 1; n <= m; ++n) windows.push_back(range_simplex(static_cast<Vertex>(n), d + 2));
    return boundary_complex(SimplicialComplex(std::move(windows)));
}

Simplex first_window_facet(int d) { return range_simplex(1, d + 1); }

Simplex last_window_facet(int d, int m) { return range_simplex(static_cast<Vertex>(m + 1), d + 1); }

// ---------------------------------------------------------------------------
// Handle addition, connected sum

SimplicialComplex handle_add(const SimplicialComplex& k, const FacetBijection& psi) {
    AdmissibilityReport report = is_admissible(k, psi);
    if (!report.verdict) {
        std::string what = "not admissible: pair " + std::to_string(report.violation->x) + "->" +
                           std::to_string(report.violation->image) + " at distance " +
                           std::to_string(report.violation->distance);
        throw TopologyError(what);
    }
    VertexMap identify;
    for (auto [a, b] : psi.pairs()) identify[a] = b;
    std::vector<Simplex> out;
    for (const auto& f : k.facets())
        if (f != psi.source() && f != psi.target()) out.push_back(map_simplex(identify, f));
    SimplicialComplex result(out);
    if (result.num_facets() != out.size())
        throw std::logic_error("handle addition merged facets despite admissibility");
    return result;
}

DisjointUnion disjoint_union(const SimplicialComplex& x, const SimplicialComplex& y) {
    DisjointUnion u;
    SimplicialComplex other = y;
    bool collide = std::any_of(y.vertices().begin(), y.vertices().end(),
                               [&](Vertex v) { return x.has_vertex(v); });
    if (collide) {
        Vertex next = x.vertices().back() + 1;
        for (Vertex v : y.vertices()) u.relabeling[v] = next++;
        other = relabel(y, u.relabeling);
    }
    std::vector<Simplex> facets = x.facets();
    facets.insert(facets.end(), other.facets().begin(), other.facets().end());
    u.complex = SimplicialComplex(std::move(facets));
    return u;
}

SimplicialComplex connected_sum(const SimplicialComplex& x1, const SimplicialComplex& x2,
                                const Simplex& s1, const Simplex& s2,
                                std::optional<FacetBijection> map) {
    if (x1.dim() != x2.dim()) throw TopologyError("dimension mismatch");
    if (!x1.has_facet(s1)) throw TopologyError("not a facet of the first complex: " + s1.to_string());
    if (!x2.has_facet(s2)) throw TopologyError("not a facet of the second complex: " + s2.to_string());
    if (map && (map->source() != s1 || map->target() != s2))
        throw TopologyError("bijection does not match the given facets");

    DisjointUnion u = disjoint_union(x1, x2);
    auto moved = [&](Vertex b) {
        auto it = u.relabeling.find(b);
        return it == u.relabeling.end() ? b : it->second;
    };
    std::vector<std::pair<Vertex, Vertex>> pairs;
    if (map) {
        for (auto [a, b] : map->pairs()) pairs.emplace_back(a, moved(b));
    } else {
        for (std::size_t i = 0; i < s1.size(); ++i) pairs.emplace_back(s1[i], moved(s2[i]));
    }
    return handle_add(u.complex, FacetBijection(std::move(pairs)));
}

// ---------------------------------------------------------------------------
// Handle deletion

HandleDeletion handle_delete(const SimplicialComplex& x, std::span<const Vertex> sphere) {
    const int d = x.dim();
    Simplex w(std::vector<Vertex>(sphere.begin(), sphere.end()));
    if (static_cast<int>(w.size()) != d + 1)
        throw TopologyError("handle deletion needs d+1 sphere vertices");
    SimplicialComplex s = induced(x, w.vertices());
    if (s != SimplicialComplex(ridges_of(w)))
        throw TopologyError("induced subcomplex is not a standard (d-1)-sphere");

    TwoSidedReport sides = is_two_sided(x, w.vertices());
    if (!sides.verdict) throw TopologyError("not two-sided (combinatorially)");

    // component (0 or 1) of each crossing edge
    std::map<Simplex, std::size_t> side;
    for (const auto& e : sides.positive) side[e] = 0;
    for (const auto& e : sides.negative) side[e] = 1;

    const Vertex offset = x.vertices().back() + 1;
    HandleDeletion out;
    for (Vertex v : w) {
        out.plus[v] = v + offset;
        out.minus[v] = v + 2 * offset;
    }
    std::vector<Simplex> facets{map_simplex(out.plus, w), map_simplex(out.minus, w)};
    for (const auto& f : x.facets()) {
        Simplex inside = f.intersect(w);
        if (inside.empty()) {
            facets.push_back(f);
            continue;
        }
        Simplex outside = f.minus(w);
        std::optional<std::size_t> facet_side;
        for (Vertex a : inside)
            for (Vertex b : outside) {
                std::size_t c = side.at(Simplex{a, b});
                if (facet_side && *facet_side != c)
                    throw std::logic_error("facet " + f.to_string() + " meets both sides");
                facet_side = c;
            }
        const VertexMap& lift = *facet_side == 0 ? out.plus : out.minus;
        facets.push_back(outside.unite(map_simplex(lift, inside)));
    }
    out.complex = SimplicialComplex(std::move(facets));

    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v : w) pairs.emplace_back(out.plus.at(v), out.minus.at(v));
    out.psi = FacetBijection(std::move(pairs));
    return out;
}

// ---------------------------------------------------------------------------
// Kuehnel complexes and the partition family

SimplicialComplex kuhnel(int d) {
    if (d < 2) throw TopologyError("kuhnel needs d >= 2");
    const int m = 2 * d + 3;
    std::vector<Simplex> windows;
    for (int n = 0; n < m; ++n) {
        std::vector<Vertex> w;
        for (int j = 0; j < d + 2; ++j) w.push_back(static_cast<Vertex>((n + j) % m + 1));
        windows.emplace_back(std::move(w));
    }
    return boundary_complex(SimplicialComplex(std::move(windows)));
}

FacetBijection psi_0(int d, int m) {
    if (m < 2 * d + 3) throw TopologyError("no admissible bijection exists for m <= 2d+2");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 1; i <= d + 1; ++i)
        pairs.emplace_back(static_cast<Vertex>(m + i), static_cast<Vertex>(i));
    return FacetBijection(std::move(pairs));
}

FacetBijection psi_p(int d, const Partition& p) {
    if (p.n() != d + 1) throw TopologyError("partition must sum to d+1");
    Permutation pi = pi_p(p);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 1; i <= d + 1; ++i)
        pairs.emplace_back(static_cast<Vertex>(2 * d + 4 + i), static_cast<Vertex>(pi(i)));
    return FacetBijection(std::move(pairs));
}

SimplicialComplex k2d4(int d, const Partition& p) {
    if (d < 2) throw TopologyError("k2d4 needs d >= 2");
    return handle_add(boundary_N(d, 2 * d + 4), psi_p(d, p));
}

}  // namespace stacktri

#include "stacktri/iso.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "stacktri/build.hpp"

namespace stacktri {

Graph non_edge_graph(const SimplicialComplex& k) { return edge_graph(k).complement(); }

Graph star_forest(std::span<const int> leaves) {
    Graph g;
    Vertex next = 1;
    for (int b : leaves) {
        auto center = g.add_node(next++);
        for (int i = 0; i < b; ++i) g.add_edge(center, g.add_node(next++));
    }
    return g;
}

Graph drop_isolated(const Graph& g) {
    Graph out = g;
    for (std::size_t n = out.size(); n-- > 0;)
        if (out.degree(n) == 0) out = out.without_node(n);
    return out;
}

namespace {

using Mask = std::uint64_t;

// Face structure over vertex indices 0..n-1, faces as bit masks.
struct Structure {
    std::size_t n = 0;
    std::unordered_set<Mask> faces;
    std::vector<std::vector<Mask>> faces_at;  // faces containing each vertex
    std::vector<std::vector<std::size_t>> signature;
    std::vector<std::vector<bool>> adjacent;

    void finish() {
        faces_at.assign(n, {});
        signature.assign(n, {});
        adjacent.assign(n, std::vector<bool>(n, false));
        for (Mask f : faces) {
            const auto size = static_cast<std::size_t>(std::popcount(f));
            for (std::size_t v = 0; v < n; ++v)
                if (f & (Mask{1} << v)) {
                    faces_at[v].push_back(f);
                    if (signature[v].size() < size) signature[v].resize(size, 0);
                    ++signature[v][size - 1];
                }
            if (size == 2) {
                auto a = static_cast<std::size_t>(std::countr_zero(f));
                auto b = static_cast<std::size_t>(63 - std::countl_zero(f));
                adjacent[a][b] = adjacent[b][a] = true;
            }
        }
    }
};

Structure structure_of(const SimplicialComplex& k) {
    if (k.num_vertices() > 64) throw TopologyError("isomorphism search limited to 64 vertices");
    Structure s;
    s.n = k.num_vertices();
    const auto& verts = k.vertices();
    auto index = [&](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    for (const auto& f : k.facets()) {
        Mask m = 0;
        for (Vertex v : f) m |= Mask{1} << index(v);
        // every nonempty subset of the facet
        for (Mask sub = m; sub; sub = (sub - 1) & m) s.faces.insert(sub);
    }
    s.finish();
    return s;
}

Structure structure_of(const Graph& g) {
    if (g.size() > 64) throw TopologyError("isomorphism search limited to 64 nodes");
    Structure s;
    s.n = g.size();
    for (std::size_t v = 0; v < g.size(); ++v) {
        s.faces.insert(Mask{1} << v);
        for (auto w : g.neighbors(v))
            if (v < w) s.faces.insert((Mask{1} << v) | (Mask{1} << w));
    }
    s.finish();
    return s;
}

std::string profile_mismatch(const Structure& a, const Structure& b) {
    if (a.n != b.n) return "vertex counts differ";
    std::vector<std::size_t> fa, fb;
    for (Mask f : a.faces) {
        auto k = static_cast<std::size_t>(std::popcount(f));
        if (fa.size() < k) fa.resize(k, 0);
        ++fa[k - 1];
    }
    for (Mask f : b.faces) {
        auto k = static_cast<std::size_t>(std::popcount(f));
        if (fb.size() < k) fb.resize(k, 0);
        ++fb[k - 1];
    }
    if (fa != fb) return "f-vectors differ";
    // component sizes of the non-edge graphs
    auto non_edge_profile = [](const Structure& s) {
        Graph g(std::vector<Vertex>(s.n, 0));
        for (std::size_t x = 0; x < s.n; ++x)
            for (std::size_t y = x + 1; y < s.n; ++y)
                if (!s.adjacent[x][y]) g.add_edge(x, y);
        auto ids = g.component_ids();
        std::vector<std::pair<std::size_t, std::size_t>> comps(g.component_count());
        for (std::size_t v = 0; v < s.n; ++v) {
            ++comps[ids[v]].first;
            comps[ids[v]].second += g.degree(v);
        }
        std::sort(comps.begin(), comps.end());
        return comps;
    };
    if (non_edge_profile(a) != non_edge_profile(b)) return "non-edge graph profiles differ";

    auto sa = a.signature, sb = b.signature;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return "vertex star profiles differ";
    return {};
}

// Enumerates face-preserving bijections a -> b; `on_match` returns false to
// stop the search.
void search_isomorphisms(const Structure& a, const Structure& b,
                         const std::function<bool(const std::vector<std::size_t>&)>& on_match) {
    const std::size_t n = a.n;
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> image(n, unset);
    std::vector<bool> used(n, false);
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    // most edges into the already ordered set first, ties by index
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = unset, best_links = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (placed[v]) continue;
            std::size_t links = 0;
            for (auto u : order) links += a.adjacent[v][u];
            if (best == unset || links > best_links) {
                best = v;
                best_links = links;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }

    Mask domain = 0, range = 0;
    bool stop = false;
    auto consistent = [&](std::size_t v, std::size_t w) {
        if (a.signature[v] != b.signature[w]) return false;
        for (auto u : order) {
            if (image[u] == unset) break;
            if (a.adjacent[v][u] != b.adjacent[w][image[u]]) return false;
        }
        const Mask da = domain | (Mask{1} << v);
        const Mask rb = range | (Mask{1} << w);
        std::size_t count_a = 0, count_b = 0;
        for (Mask f : a.faces_at[v]) {
            if ((f & ~da) != 0) continue;
            ++count_a;
            Mask g = 0;
            for (Mask rest = f; rest; rest &= rest - 1) {
                auto x = static_cast<std::size_t>(std::countr_zero(rest));
                g |= Mask{1} << (x == v ? w : image[x]);
            }
            if (!b.faces.contains(g)) return false;
        }
        for (Mask f : b.faces_at[w])
            if ((f & ~rb) == 0) ++count_b;
        return count_a == count_b;
    };
    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (stop) return;
        if (depth == n) {
            if (!on_match(image)) stop = true;
            return;
        }
        const std::size_t v = order[depth];
        for (std::size_t w = 0; w < n && !stop; ++w) {
            if (used[w] || !consistent(v, w)) continue;
            image[v] = w;
            used[w] = true;
            domain |= Mask{1} << v;
            range |= Mask{1} << w;
            self(self, depth + 1);
            domain &= ~(Mask{1} << v);
            range &= ~(Mask{1} << w);
            used[w] = false;
            image[v] = unset;
        }
    };
    recurse(recurse, 0);
}

}  // namespace

IsoWitness complex_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b) {
    IsoWitness witness;
    Structure sa = structure_of(a);
    Structure sb = structure_of(b);
    if (auto why = profile_mismatch(sa, sb); !why.empty()) {
        witness.refutation = why;
        return witness;
    }
    search_isomorphisms(sa, sb, [&](const std::vector<std::size_t>& image) {
        VertexMap map;
        for (std::size_t v = 0; v < image.size(); ++v) map[a.vertices()[v]] = b.vertices()[image[v]];
        if (relabel(a, map) != b) throw std::logic_error("isomorphism witness fails replay");
        witness.mapping = std::move(map);
        return false;
    });
    if (!witness.mapping) witness.refutation = "exhaustive search found no face-preserving bijection";
    return witness;
}

std::uint64_t automorphism_count(const SimplicialComplex& k) {
    Structure s = structure_of(k);
    std::uint64_t count = 0;
    search_isomorphisms(s, s, [&](const std::vector<std::size_t>&) {
        ++count;
        return true;
    });
    return count;
}

std::optional<std::vector<Graph::Node>> graph_isomorphism(const Graph& a, const Graph& b) {
    Structure sa = structure_of(a);
    Structure sb = structure_of(b);
    if (!profile_mismatch(sa, sb).empty()) return std::nullopt;
    std::optional<std::vector<Graph::Node>> out;
    search_isomorphisms(sa, sb, [&](const std::vector<std::size_t>& image) {
        out = image;
        return false;
    });
    return out;
}

std::uint64_t graph_automorphism_count(const Graph& g) {
    Structure s = structure_of(g);
    std::uint64_t count = 0;
    search_isomorphisms(s, s, [&](const std::vector<std::size_t>&) {
        ++count;
        return true;
    });
    return count;
}

SimplicialComplex reconstruct_stacked(const Graph& g, int d) {
    static const std::string failure = "not a stacked-sphere edge graph";
    if (d < 2) throw TopologyError("reconstruction needs d >= 2");
    if (g.size() > 64) throw TopologyError("reconstruction limited to 64 nodes");
    if (static_cast<int>(g.size()) < d + 2) throw TopologyError(failure);

    const std::size_t n = g.size();
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> removed;  // node, neighbors
    std::set<Mask> dead;
    std::optional<SimplicialComplex> result;

    auto rebuild = [&](Mask alive) -> std::optional<SimplicialComplex> {
        std::vector<Vertex> base;
        for (std::size_t v = 0; v < n; ++v)
            if (alive & (Mask{1} << v)) base.push_back(g.label(v));
        StarringTrace trace;
        trace.base = Simplex(base);
        for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
            std::vector<Vertex> facet;
            for (auto m : it->second) facet.push_back(g.label(m));
            trace.steps.push_back({Simplex(facet), g.label(it->first)});
        }
        try {
            return stacked_sphere(d, trace);
        } catch (const TopologyError&) {
            return std::nullopt;
        }
    };

    auto search = [&](auto&& self, Mask alive) -> bool {
        const auto count = static_cast<std::size_t>(std::popcount(alive));
        std::vector<std::size_t> nodes;
        for (std::size_t v = 0; v < n; ++v)
            if (alive & (Mask{1} << v)) nodes.push_back(v);
        if (count == static_cast<std::size_t>(d + 2)) {
            if (!g.is_clique(nodes)) return false;
            result = rebuild(alive);
            return result.has_value();
        }
        if (dead.contains(alive)) return false;
        for (std::size_t v : nodes) {
            std::vector<std::size_t> nbrs;
            for (auto m : g.neighbors(v))
                if (alive & (Mask{1} << m)) nbrs.push_back(m);
            if (static_cast<int>(nbrs.size()) != d + 1 || !g.is_clique(nbrs)) continue;
            removed.emplace_back(v, nbrs);
            if (self(self, alive & ~(Mask{1} << v))) return true;
            removed.pop_back();
            // Independent removals commute for d >= 3; one failed branch is final.
            if (d >= 3) break;
        }
        dead.insert(alive);
        return false;
    };
    Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    if (!search(search, all)) throw TopologyError(failure);

    if (edge_graph(*result).edge_labels() != g.edge_labels()) throw TopologyError(failure);
    return *result;
}

}  // namespace stacktri

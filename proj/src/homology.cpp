#include "stacktri/homology.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <unordered_map>

namespace stacktri {

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * ((cols + 63) / 64), 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_per_row() + c / 64] >> (c % 64)) & 1U;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    Word& w = bits_[r * words_per_row() + c / 64];
    const Word mask = Word{1} << (c % 64);
    w = value ? (w | mask) : (w & ~mask);
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
    bits_[r * words_per_row() + c / 64] ^= Word{1} << (c % 64);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("BitMatrix dimension mismatch");
    BitMatrix out(rows_, rhs.cols_);
    const std::size_t wpr = rhs.words_per_row();
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(r, k))
                for (std::size_t w = 0; w < wpr; ++w)
                    out.bits_[r * wpr + w] ^= rhs.bits_[k * wpr + w];
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
}

std::size_t BitMatrix::rank() const {
    std::vector<Word> m = bits_;
    const std::size_t wpr = words_per_row();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        const std::size_t word = c / 64;
        const Word mask = Word{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < rows_ && !(m[pivot * wpr + word] & mask)) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            std::swap_ranges(m.begin() + pivot * wpr, m.begin() + (pivot + 1) * wpr, m.begin() + rank * wpr);
        for (std::size_t r = rank + 1; r < rows_; ++r)
            if (m[r * wpr + word] & mask)
                for (std::size_t w = word; w < wpr; ++w) m[r * wpr + w] ^= m[rank * wpr + w];
        ++rank;
    }
    return rank;
}

std::size_t BitMatrix::rank_by_column_reduction() const {
    // Columns as bit vectors over rows; low(col) = largest row index set.
    BitMatrix t = transposed();
    const std::size_t wpr = t.words_per_row();
    auto low = [&](std::size_t col) -> std::ptrdiff_t {
        for (std::size_t w = wpr; w-- > 0;) {
            Word x = t.bits_[col * wpr + w];
            if (x) return static_cast<std::ptrdiff_t>(w * 64 + 63 - std::countl_zero(x));
        }
        return -1;
    };
    std::unordered_map<std::ptrdiff_t, std::size_t> owner;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < t.rows_; ++col) {
        for (std::ptrdiff_t l = low(col); l >= 0; l = low(col)) {
            auto it = owner.find(l);
            if (it == owner.end()) {
                owner.emplace(l, col);
                ++rank;
                break;
            }
            for (std::size_t w = 0; w < wpr; ++w) t.bits_[col * wpr + w] ^= t.bits_[it->second * wpr + w];
        }
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Chain complexes

namespace {

// Span of GF(2) vectors keyed by their lowest set bit.
class Gf2Span {
public:
    using Vec = std::vector<std::uint64_t>;

    explicit Gf2Span(std::size_t bits) : words_((bits + 63) / 64) {}

    Vec zero() const { return Vec(words_, 0); }

    Vec reduce(Vec v) const {
        for (auto p = lowest(v); p >= 0; p = lowest(v)) {
            auto it = rows_.find(p);
            if (it == rows_.end()) break;
            for (std::size_t w = 0; w < words_; ++w) v[w] ^= it->second[w];
        }
        return v;
    }

    bool contains(const Vec& v) const { return lowest(reduce(v)) < 0; }

    bool insert(const Vec& v) {
        Vec r = reduce(v);
        auto p = lowest(r);
        if (p < 0) return false;
        rows_.emplace(p, std::move(r));
        return true;
    }

    static std::ptrdiff_t lowest(const Vec& v) {
        for (std::size_t w = 0; w < v.size(); ++w)
            if (v[w]) return static_cast<std::ptrdiff_t>(w * 64 + std::countr_zero(v[w]));
        return -1;
    }

private:
    std::size_t words_;
    std::map<std::ptrdiff_t, Vec> rows_;
};

Gf2ChainComplex build_chains(std::vector<std::vector<Simplex>> bases) {
    Gf2ChainComplex c;
    c.bases = std::move(bases);
    for (std::size_t k = 0; k < c.bases.size(); ++k) {
        if (k == 0) {
            c.boundaries.emplace_back(0, c.bases[0].size());
            continue;
        }
        const auto& rows = c.bases[k - 1];
        BitMatrix m(rows.size(), c.bases[k].size());
        for (std::size_t col = 0; col < c.bases[k].size(); ++col) {
            const Simplex& s = c.bases[k][col];
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto it = std::lower_bound(rows.begin(), rows.end(), s.without_index(i));
                if (it != rows.end() && *it == s.without_index(i))
                    m.set(static_cast<std::size_t>(it - rows.begin()), col);
            }
        }
        c.boundaries.push_back(std::move(m));
    }
    return c;
}

SimplicialComplex induced_or_empty(const SimplicialComplex& x, std::span<const Vertex> vs) {
    if (vs.empty()) return {};
    return induced(x, vs);
}

std::vector<Vertex> others(const SimplicialComplex& x, std::span<const Vertex> vs) {
    Simplex s(std::vector<Vertex>(vs.begin(), vs.end()));
    std::vector<Vertex> out;
    for (Vertex v : x.vertices())
        if (!s.contains(v)) out.push_back(v);
    return out;
}

}  // namespace

bool Gf2ChainComplex::boundary_squares_to_zero() const {
    for (std::size_t k = 2; k < boundaries.size(); ++k)
        if (!(boundaries[k - 1] * boundaries[k]).is_zero()) return false;
    return true;
}

Gf2ChainComplex chain_complex(const SimplicialComplex& k) { return build_chains(all_faces(k)); }

Gf2ChainComplex relative_chain_complex(const SimplicialComplex& k, const SimplicialComplex& l) {
    for (const auto& f : l.facets())
        if (!k.has_face(f)) throw TopologyError("not a subcomplex: " + f.to_string() + " missing");
    auto bases = all_faces(k);
    for (auto& level : bases)
        std::erase_if(level, [&](const Simplex& s) { return l.has_face(s); });
    return build_chains(std::move(bases));
}

std::vector<std::size_t> betti_numbers(const Gf2ChainComplex& c) {
    const std::size_t top = c.bases.size();
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t k = 1; k < top; ++k) ranks[k] = c.boundaries[k].rank();
    std::vector<std::size_t> betti(top);
    for (std::size_t k = 0; k < top; ++k) betti[k] = c.bases[k].size() - ranks[k] - ranks[k + 1];
    return betti;
}

std::vector<std::size_t> betti_z2(const SimplicialComplex& k) {
    return betti_numbers(chain_complex(k));
}

std::vector<std::size_t> relative_betti_z2(const SimplicialComplex& k, const SimplicialComplex& l) {
    return betti_numbers(relative_chain_complex(k, l));
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
    std::int64_t chi = 0;
    auto f = k.f_vector();
    for (std::size_t i = 0; i < f.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[i]);
    return chi;
}

// ---------------------------------------------------------------------------
// Orientation

OrientationReport orientable(const SimplicialComplex& k) {
    if (k.empty()) throw TopologyError("empty complex");
    if (k.dim() < 1) throw TopologyError("orientation needs dimension >= 1");
    if (!is_weak_pseudomanifold(k)) throw TopologyError("not a weak pseudomanifold");

    const auto& facets = k.facets();
    // ridge -> (facet, position of the vertex opposite the ridge)
    std::map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>> ridges;
    for (std::size_t f = 0; f < facets.size(); ++f)
        for (std::size_t i = 0; i < facets[f].size(); ++i)
            ridges[facets[f].without_index(i)].emplace_back(f, i);

    struct Step {
        std::size_t facet;
        std::size_t position;
        std::size_t their_position;
    };
    std::vector<std::vector<Step>> adjacent(facets.size());
    for (const auto& [ridge, owners] : ridges) {
        const auto [f, i] = owners[0];
        const auto [g, j] = owners[1];
        adjacent[f].push_back({g, i, j});
        adjacent[g].push_back({f, j, i});
    }

    OrientationReport report;
    report.signs.assign(facets.size(), 0);
    std::vector<std::size_t> parent(facets.size());
    std::vector<std::size_t> component(facets.size());
    report.orientable = true;

    auto path_to_root = [&](std::size_t f) {
        std::vector<std::size_t> path{f};
        while (parent[path.back()] != path.back()) path.push_back(parent[path.back()]);
        return path;
    };

    for (std::size_t root = 0; root < facets.size(); ++root) {
        if (report.signs[root] != 0) continue;
        const std::size_t comp = report.component_orientable.size();
        report.component_orientable.push_back(true);
        report.signs[root] = 1;
        parent[root] = root;
        component[root] = comp;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t f = queue.front();
            queue.pop_front();
            for (const Step& s : adjacent[f]) {
                // coherent: sign_f (-1)^i = -sign_g (-1)^j
                int required = -report.signs[f] * (((s.position + s.their_position) % 2) ? -1 : 1);
                if (report.signs[s.facet] == 0) {
                    report.signs[s.facet] = required;
                    parent[s.facet] = f;
                    component[s.facet] = comp;
                    queue.push_back(s.facet);
                } else if (report.signs[s.facet] != required) {
                    report.component_orientable[comp] = false;
                    if (report.orientable) {
                        report.orientable = false;
                        auto a = path_to_root(f);
                        auto b = path_to_root(s.facet);
                        while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
                            a.pop_back();
                            b.pop_back();
                        }
                        // a and b now end at their lowest common ancestor
                        for (std::size_t x : a) report.obstruction.push_back(facets[x]);
                        for (std::size_t i = b.size() - 1; i-- > 0;) report.obstruction.push_back(facets[b[i]]);
                    }
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Certificates and duality

std::optional<std::vector<Simplex>> h1_certificate(const SimplicialComplex& k) {
    if (k.dim() < 1) return std::nullopt;
    const auto edges = faces(k, 1);
    const auto triangles = faces(k, 2);
    auto edge_index = [&](Vertex a, Vertex b) {
        Simplex e{a, b};
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };

    Gf2Span boundaries(edges.size());
    for (const auto& t : triangles) {
        auto v = boundaries.zero();
        for (std::size_t i = 0; i < 3; ++i) {
            std::size_t e = edge_index(t.without_index(i)[0], t.without_index(i)[1]);
            v[e / 64] ^= std::uint64_t{1} << (e % 64);
        }
        boundaries.insert(v);
    }

    // Fundamental cycles of a BFS forest span the cycle space.
    Graph g = edge_graph(k);
    constexpr auto unset = static_cast<Graph::Node>(-1);
    std::vector<Graph::Node> parent(g.size(), unset);
    std::vector<std::size_t> depth(g.size(), 0);
    for (Graph::Node root = 0; root < g.size(); ++root) {
        if (parent[root] != unset) continue;
        parent[root] = root;
        std::deque<Graph::Node> queue{root};
        while (!queue.empty()) {
            auto n = queue.front();
            queue.pop_front();
            for (auto m : g.neighbors(n))
                if (parent[m] == unset) {
                    parent[m] = n;
                    depth[m] = depth[n] + 1;
                    queue.push_back(m);
                }
        }
    }
    for (Graph::Node a = 0; a < g.size(); ++a)
        for (Graph::Node b : g.neighbors(a)) {
            if (b < a || parent[a] == b || parent[b] == a) continue;
            std::vector<Simplex> cycle{Simplex{g.label(a), g.label(b)}};
            Graph::Node x = a, y = b;
            while (x != y) {
                if (depth[x] >= depth[y]) {
                    cycle.push_back(Simplex{g.label(x), g.label(parent[x])});
                    x = parent[x];
                } else {
                    cycle.push_back(Simplex{g.label(y), g.label(parent[y])});
                    y = parent[y];
                }
            }
            auto v = boundaries.zero();
            for (const auto& e : cycle) {
                std::size_t i = edge_index(e[0], e[1]);
                v[i / 64] ^= std::uint64_t{1} << (i % 64);
            }
            if (!boundaries.contains(v)) {
                std::sort(cycle.begin(), cycle.end());
                return cycle;
            }
        }
    return std::nullopt;
}

bool looks_like_closed_manifold(const SimplicialComplex& k) {
    if (k.empty() || !k.is_pure() || k.dim() < 1) return false;
    if (!is_weak_pseudomanifold(k)) return false;
    std::vector<std::size_t> sphere(static_cast<std::size_t>(k.dim()), 0);
    sphere.front() += 1;
    sphere.back() += 1;
    return std::all_of(k.vertices().begin(), k.vertices().end(), [&](Vertex v) {
        return betti_z2(link(k, Simplex{v})) == sphere;
    });
}

AlexanderReport alexander_check(const SimplicialComplex& x, std::span<const Vertex> inner,
                                std::span<const Vertex> outer) {
    if (!looks_like_closed_manifold(x)) throw TopologyError("not a closed manifold (Z2 link test)");
    Simplex in(std::vector<Vertex>(inner.begin(), inner.end()));
    Simplex out(std::vector<Vertex>(outer.begin(), outer.end()));
    if (!in.is_subset_of(out)) throw TopologyError("inner vertex set not contained in outer set");
    for (Vertex v : out)
        if (!x.has_vertex(v)) throw TopologyError("vertex " + std::to_string(v) + " not in complex");

    const int d = x.dim();
    auto l = induced_or_empty(x, in.vertices());
    auto l_outer = induced_or_empty(x, out.vertices());
    auto r = induced_or_empty(x, others(x, in.vertices()));
    auto r_inner = induced_or_empty(x, others(x, out.vertices()));

    auto pad = [d](std::vector<std::size_t> b) {
        b.resize(static_cast<std::size_t>(d) + 1, 0);
        return b;
    };
    auto left = pad(relative_betti_z2(l_outer, l));
    auto right = pad(relative_betti_z2(r, r_inner));

    AlexanderReport report;
    for (int j = 0; j <= d; ++j) report.inner.push_back(left[static_cast<std::size_t>(d - j)]);
    report.outer = right;
    report.holds = report.inner == report.outer;
    return report;
}

}  // namespace stacktri

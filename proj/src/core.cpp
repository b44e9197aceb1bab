#include "stacktri/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace stacktri {

// ---------------------------------------------------------------------------
// Simplex

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::vector<Vertex>(vertices)) {}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw TopologyError("duplicate vertex in simplex");
}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

bool Simplex::is_disjoint_from(const Simplex& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a; else ++b;
    }
    return true;
}

Simplex Simplex::without(Vertex v) const {
    Simplex out;
    out.vertices_.reserve(vertices_.size());
    for (Vertex u : vertices_)
        if (u != v) out.vertices_.push_back(u);
    return out;
}

Simplex Simplex::with(Vertex v) const {
    Simplex out = *this;
    auto it = std::lower_bound(out.vertices_.begin(), out.vertices_.end(), v);
    if (it == out.vertices_.end() || *it != v) out.vertices_.insert(it, v);
    return out;
}

Simplex Simplex::without_index(std::size_t i) const {
    Simplex out = *this;
    out.vertices_.erase(out.vertices_.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

Simplex Simplex::minus(const Simplex& other) const {
    Simplex out;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out.vertices_));
    return out;
}

Simplex Simplex::unite(const Simplex& other) const {
    Simplex out;
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                   other.vertices_.end(), std::back_inserter(out.vertices_));
    return out;
}

Simplex Simplex::intersect(const Simplex& other) const {
    Simplex out;
    std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                          other.vertices_.end(), std::back_inserter(out.vertices_));
    return out;
}

std::string Simplex::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vertices_.size(); ++i) out << (i ? "," : "") << vertices_[i];
    out << '}';
    return out.str();
}

Simplex map_simplex(const VertexMap& map, const Simplex& s) {
    std::vector<Vertex> image;
    image.reserve(s.size());
    for (Vertex v : s) {
        auto it = map.find(v);
        image.push_back(it == map.end() ? v : it->second);
    }
    return Simplex(std::move(image));
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex(std::vector<Simplex> faces) {
    std::erase_if(faces, [](const Simplex& s) { return s.empty(); });
    std::sort(faces.begin(), faces.end(),
              [](const Simplex& a, const Simplex& b) {
                  return a.size() != b.size() ? a.size() > b.size() : a < b;
              });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    for (auto& face : faces) {
        bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
            return f.size() > face.size() && face.is_subset_of(f);
        });
        if (!covered) facets_.push_back(std::move(face));
    }
    std::sort(facets_.begin(), facets_.end());

    std::set<Vertex> verts;
    for (const auto& f : facets_) {
        verts.insert(f.begin(), f.end());
        dim_ = std::max(dim_, f.dim());
    }
    vertices_.assign(verts.begin(), verts.end());
    pure_ = std::all_of(facets_.begin(), facets_.end(),
                        [this](const Simplex& f) { return f.dim() == dim_; });
}

SimplicialComplex::SimplicialComplex(std::initializer_list<Simplex> faces)
    : SimplicialComplex(std::vector<Simplex>(faces)) {}

bool SimplicialComplex::has_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::has_face(const Simplex& s) const {
    if (s.empty()) return !facets_.empty();
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Simplex& f) { return s.is_subset_of(f); });
}

bool SimplicialComplex::has_facet(const Simplex& s) const {
    return std::binary_search(facets_.begin(), facets_.end(), s);
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& level : all_faces(*this)) f.push_back(level.size());
    return f;
}

SimplicialComplex relabel(const SimplicialComplex& k, const VertexMap& map) {
    std::vector<Simplex> facets;
    facets.reserve(k.num_facets());
    for (const auto& f : k.facets()) facets.push_back(map_simplex(map, f));
    return SimplicialComplex(std::move(facets));
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::vector<Vertex> labels)
    : labels_(std::move(labels)), adjacency_(labels_.size()) {}

std::optional<Graph::Node> Graph::find(Vertex label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Node>(it - labels_.begin());
}

Graph::Node Graph::add_node(Vertex label) {
    labels_.push_back(label);
    adjacency_.emplace_back();
    return labels_.size() - 1;
}

void Graph::add_edge(Node a, Node b) {
    if (a == b) throw TopologyError("graph loop");
    auto& na = adjacency_.at(a);
    auto it = std::lower_bound(na.begin(), na.end(), b);
    if (it != na.end() && *it == b) return;
    na.insert(it, b);
    auto& nb = adjacency_.at(b);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++edge_count_;
}

bool Graph::adjacent(Node a, Node b) const {
    const auto& na = adjacency_[a];
    return std::binary_search(na.begin(), na.end(), b);
}

std::vector<std::size_t> Graph::component_ids() const {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> id(size(), unset);
    std::size_t next = 0;
    for (Node start = 0; start < size(); ++start) {
        if (id[start] != unset) continue;
        std::deque<Node> queue{start};
        id[start] = next;
        while (!queue.empty()) {
            Node n = queue.front();
            queue.pop_front();
            for (Node m : adjacency_[n])
                if (id[m] == unset) {
                    id[m] = next;
                    queue.push_back(m);
                }
        }
        ++next;
    }
    return id;
}

std::size_t Graph::component_count() const {
    auto ids = component_ids();
    return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

bool Graph::is_connected() const { return component_count() == 1; }

bool Graph::is_regular(std::size_t k) const {
    return std::all_of(adjacency_.begin(), adjacency_.end(),
                       [k](const auto& nbrs) { return nbrs.size() == k; });
}

bool Graph::is_clique(std::span<const Node> nodes) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (!adjacent(nodes[i], nodes[j])) return false;
    return true;
}

std::vector<int> Graph::distances_from(Node source) const {
    std::vector<int> dist(size(), -1);
    std::deque<Node> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Node n = queue.front();
        queue.pop_front();
        for (Node m : adjacency_[n])
            if (dist[m] < 0) {
                dist[m] = dist[n] + 1;
                queue.push_back(m);
            }
    }
    return dist;
}

std::vector<Graph::Node> Graph::shortest_path(Node from, Node to) const {
    constexpr auto unset = static_cast<Node>(-1);
    std::vector<Node> parent(size(), unset);
    std::deque<Node> queue{from};
    parent[from] = from;
    while (!queue.empty() && parent[to] == unset) {
        Node n = queue.front();
        queue.pop_front();
        for (Node m : adjacency_[n])
            if (parent[m] == unset) {
                parent[m] = n;
                queue.push_back(m);
            }
    }
    if (parent[to] == unset) return {};
    std::vector<Node> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

Graph Graph::complement() const {
    Graph out(labels_);
    for (Node a = 0; a < size(); ++a)
        for (Node b = a + 1; b < size(); ++b)
            if (!adjacent(a, b)) out.add_edge(a, b);
    return out;
}

Graph Graph::without_node(Node n) const {
    Graph out;
    std::vector<Node> remap(size());
    for (Node a = 0; a < size(); ++a)
        if (a != n) remap[a] = out.add_node(labels_[a]);
    for (Node a = 0; a < size(); ++a)
        for (Node b : adjacency_[a])
            if (a < b && a != n && b != n) out.add_edge(remap[a], remap[b]);
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_labels() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Node a = 0; a < size(); ++a)
        for (Node b : adjacency_[a])
            if (a < b) out.emplace_back(std::min(labels_[a], labels_[b]),
                                        std::max(labels_[a], labels_[b]));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Faces, links, stars

namespace {

void require_nonempty(const SimplicialComplex& k) {
    if (k.empty()) throw TopologyError("empty complex");
}

void require_pure(const SimplicialComplex& k) {
    require_nonempty(k);
    if (!k.is_pure()) throw TopologyError("not pure");
}

void require_face(const SimplicialComplex& k, const Simplex& s) {
    if (s.empty() || !k.has_face(s)) throw TopologyError("not a face: " + s.to_string());
}

// Visits every (size)-subset of f.
template <class Fn>
void for_each_subset(const Simplex& f, std::size_t size, Fn&& fn) {
    const auto& v = f.vertices();
    if (size > v.size()) return;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Vertex> buf(size);
    while (true) {
        for (std::size_t i = 0; i < size; ++i) buf[i] = v[idx[i]];
        fn(Simplex(buf));
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == v.size() - size + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<Simplex> faces(const SimplicialComplex& k, int dim) {
    if (dim < 0 || dim > k.dim()) return {};
    std::set<Simplex> out;
    for (const auto& f : k.facets())
        for_each_subset(f, static_cast<std::size_t>(dim) + 1,
                        [&](Simplex s) { out.insert(std::move(s)); });
    return {out.begin(), out.end()};
}

std::vector<std::vector<Simplex>> all_faces(const SimplicialComplex& k) {
    std::vector<std::vector<Simplex>> out;
    for (int d = 0; d <= k.dim(); ++d) out.push_back(faces(k, d));
    return out;
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& s) {
    require_face(k, s);
    std::vector<Simplex> out;
    for (const auto& f : k.facets())
        if (s.is_subset_of(f)) out.push_back(f.minus(s));
    return SimplicialComplex(std::move(out));
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& s) {
    require_face(k, s);
    std::vector<Simplex> out;
    for (const auto& f : k.facets())
        if (s.is_subset_of(f)) out.push_back(f);
    return SimplicialComplex(std::move(out));
}

std::size_t degree(const SimplicialComplex& k, const Simplex& s) {
    return link(k, s).num_vertices();
}

SimplicialComplex induced(const SimplicialComplex& k, std::span<const Vertex> vertex_set) {
    if (vertex_set.empty()) throw TopologyError("empty vertex set");
    Simplex u(std::vector<Vertex>(vertex_set.begin(), vertex_set.end()));
    for (Vertex v : u)
        if (!k.has_vertex(v)) throw TopologyError("vertex " + std::to_string(v) + " not in complex");
    std::vector<Simplex> out;
    for (const auto& f : k.facets()) out.push_back(f.intersect(u));
    return SimplicialComplex(std::move(out));
}

SimplicialComplex complement(const SimplicialComplex& k, std::span<const Vertex> removed) {
    if (removed.empty()) throw TopologyError("empty vertex set");
    Simplex y(std::vector<Vertex>(removed.begin(), removed.end()));
    std::vector<Vertex> rest;
    for (Vertex v : k.vertices())
        if (!y.contains(v)) rest.push_back(v);
    if (rest.empty()) throw TopologyError("empty complement");
    return induced(k, rest);
}

Graph edge_graph(const SimplicialComplex& k) {
    Graph g(k.vertices());
    auto index = [&](Vertex v) {
        return static_cast<Graph::Node>(
            std::lower_bound(k.vertices().begin(), k.vertices().end(), v) - k.vertices().begin());
    };
    for (const auto& f : k.facets())
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) g.add_edge(index(f[i]), index(f[j]));
    return g;
}

Graph facet_adjacency(const SimplicialComplex& k) {
    require_pure(k);
    std::vector<Vertex> labels(k.num_facets());
    std::iota(labels.begin(), labels.end(), Vertex{0});
    Graph g(std::move(labels));
    std::map<Simplex, std::vector<std::size_t>> ridges;
    for (std::size_t i = 0; i < k.num_facets(); ++i) {
        const auto& f = k.facets()[i];
        for (std::size_t j = 0; j < f.size(); ++j) ridges[f.without_index(j)].push_back(i);
    }
    for (const auto& [ridge, owners] : ridges) {
        if (ridge.empty()) continue;
        for (std::size_t a = 0; a < owners.size(); ++a)
            for (std::size_t b = a + 1; b < owners.size(); ++b) g.add_edge(owners[a], owners[b]);
    }
    return g;
}

bool is_connected(const SimplicialComplex& k) { return connected_components(k) == 1; }

std::size_t connected_components(const SimplicialComplex& k) {
    return edge_graph(k).component_count();
}

namespace {

bool is_standard_zero_sphere(const SimplicialComplex& k) {
    return k.dim() == 0 && k.num_facets() == 2;
}

}  // namespace

bool is_weak_pseudomanifold(const SimplicialComplex& k) {
    require_pure(k);
    if (k.dim() == 0) return is_standard_zero_sphere(k);
    std::map<Simplex, int> count;
    for (const auto& f : k.facets())
        for (std::size_t j = 0; j < f.size(); ++j) ++count[f.without_index(j)];
    return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
}

bool is_pseudomanifold(const SimplicialComplex& k) {
    if (!is_weak_pseudomanifold(k)) return false;
    return k.dim() == 0 || facet_adjacency(k).is_connected();
}

bool is_normal_pseudomanifold(const SimplicialComplex& k) {
    if (!is_weak_pseudomanifold(k)) return false;
    if (k.dim() == 0) return true;
    if (!is_connected(k)) return false;
    for (int j = 0; j <= k.dim() - 2; ++j)
        for (const auto& s : faces(k, j))
            if (!is_connected(link(k, s))) return false;
    if (!facet_adjacency(k).is_connected())
        throw std::logic_error("normal pseudomanifold with disconnected facet graph");
    return true;
}

JoinResult join(const SimplicialComplex& x, const SimplicialComplex& y) {
    JoinResult result;
    SimplicialComplex other = y;
    bool collide = std::any_of(y.vertices().begin(), y.vertices().end(),
                               [&](Vertex v) { return x.has_vertex(v); });
    if (collide) {
        Vertex next = x.vertices().empty() ? 0 : x.vertices().back() + 1;
        for (Vertex v : y.vertices()) result.relabeling[v] = next++;
        other = relabel(y, result.relabeling);
    }
    if (x.empty() || other.empty()) {
        result.complex = x.empty() ? other : x;
        return result;
    }
    std::vector<Simplex> facets;
    for (const auto& a : x.facets())
        for (const auto& b : other.facets()) facets.push_back(a.unite(b));
    result.complex = SimplicialComplex(std::move(facets));
    return result;
}

CrossingGraph crossing_edge_graph(const SimplicialComplex& k, std::span<const Vertex> a) {
    Simplex inside(std::vector<Vertex>(a.begin(), a.end()));
    CrossingGraph out;
    for (const auto& e : faces(k, 1))
        if (inside.contains(e[0]) != inside.contains(e[1])) out.edges.push_back(e);
    std::vector<Vertex> labels(out.edges.size());
    std::iota(labels.begin(), labels.end(), Vertex{0});
    out.graph = Graph(std::move(labels));
    for (std::size_t i = 0; i < out.edges.size(); ++i)
        for (std::size_t j = i + 1; j < out.edges.size(); ++j) {
            Simplex u = out.edges[i].unite(out.edges[j]);
            if (u.size() == 3 && k.has_face(u)) out.graph.add_edge(i, j);
        }
    return out;
}

CrossingGraph one_end_graph(const SimplicialComplex& k, std::span<const Vertex> a) {
    static const std::string violated = "hypothesis of the crossing-edge lemma violated: ";
    require_pure(k);
    if (k.dim() < 2) throw TopologyError(violated + "dimension below 2");
    if (!is_normal_pseudomanifold(k)) throw TopologyError(violated + "complex not normal");
    SimplicialComplex sub = induced(k, a);
    if (sub.dim() != k.dim() - 1 || !sub.is_pure() || !is_normal_pseudomanifold(sub))
        throw TopologyError(violated + "induced subcomplex is not a codimension-one normal pseudomanifold");
    CrossingGraph g = crossing_edge_graph(k, a);
    std::size_t c = g.graph.component_count();
    if (c < 1 || c > 2) throw std::logic_error("crossing-edge graph with " + std::to_string(c) + " components");
    return g;
}

}  // namespace stacktri

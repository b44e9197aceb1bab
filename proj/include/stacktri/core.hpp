#pragma once

// Facet-list simplicial complexes and the basic operations on them: faces,
// links, stars, induced subcomplexes, simplicial complements, edge graphs and
// the pseudomanifold predicates.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stacktri {

using Vertex = std::uint32_t;
using VertexMap = std::map<Vertex, Vertex>;

/// Raised when an operation's precondition on its input complex fails.
class TopologyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A face: strictly increasing list of vertex labels.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<Vertex> vertices);
    /// Sorts the input; throws TopologyError on duplicate labels.
    explicit Simplex(std::vector<Vertex> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(Vertex v) const;
    bool is_subset_of(const Simplex& other) const;
    bool is_disjoint_from(const Simplex& other) const;

    Simplex without(Vertex v) const;
    Simplex with(Vertex v) const;
    Simplex without_index(std::size_t i) const;
    Simplex minus(const Simplex& other) const;
    Simplex unite(const Simplex& other) const;
    Simplex intersect(const Simplex& other) const;

    std::string to_string() const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    std::vector<Vertex> vertices_;
};

Simplex map_simplex(const VertexMap& map, const Simplex& s);

/// Simplicial complex stored by its facets; lower faces are implicit.
///
/// Facets are kept sorted lexicographically. The constructor accepts any
/// list of faces and keeps only the maximal ones, so the result never has a
/// facet contained in another one.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    explicit SimplicialComplex(std::vector<Simplex> faces);
    SimplicialComplex(std::initializer_list<Simplex> faces);

    const std::vector<Simplex>& facets() const { return facets_; }
    std::size_t num_facets() const { return facets_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t num_vertices() const { return vertices_.size(); }

    /// -1 for the empty complex.
    int dim() const { return dim_; }
    bool empty() const { return facets_.empty(); }
    bool is_pure() const { return pure_; }

    bool has_vertex(Vertex v) const;
    bool has_face(const Simplex& s) const;
    bool has_facet(const Simplex& s) const;

    /// f_k for 0 <= k <= dim.
    std::vector<std::size_t> f_vector() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facets_ == b.facets_;
    }

private:
    std::vector<Simplex> facets_;
    std::vector<Vertex> vertices_;
    int dim_ = -1;
    bool pure_ = true;
};

SimplicialComplex relabel(const SimplicialComplex& k, const VertexMap& map);

/// Undirected simple graph on nodes 0..size()-1. Each node carries an
/// integer label: a vertex for edge graphs, a facet or edge index otherwise.
class Graph {
public:
    using Node = std::size_t;

    Graph() = default;
    explicit Graph(std::vector<Vertex> labels);

    std::size_t size() const { return labels_.size(); }
    std::size_t num_edges() const { return edge_count_; }
    const std::vector<Vertex>& labels() const { return labels_; }
    Vertex label(Node n) const { return labels_[n]; }
    std::optional<Node> find(Vertex label) const;

    Node add_node(Vertex label);
    /// No-op if the edge exists; throws on a loop.
    void add_edge(Node a, Node b);
    bool adjacent(Node a, Node b) const;
    const std::vector<Node>& neighbors(Node n) const { return adjacency_[n]; }
    std::size_t degree(Node n) const { return adjacency_[n].size(); }

    /// Component id per node, ids numbered from 0 in order of first node.
    std::vector<std::size_t> component_ids() const;
    std::size_t component_count() const;
    bool is_connected() const;
    bool is_regular(std::size_t k) const;
    bool is_clique(std::span<const Node> nodes) const;

    /// BFS distances; -1 for unreachable nodes.
    std::vector<int> distances_from(Node source) const;
    /// Empty when unreachable.
    std::vector<Node> shortest_path(Node from, Node to) const;

    Graph complement() const;
    Graph without_node(Node n) const;
    /// Edges as label pairs, each with first < second.
    std::vector<std::pair<Vertex, Vertex>> edge_labels() const;

private:
    std::vector<Vertex> labels_;
    std::vector<std::vector<Node>> adjacency_;
    std::size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Faces, links, stars, subcomplexes

/// All k-faces, sorted and deduplicated. Empty if k is out of range.
std::vector<Simplex> faces(const SimplicialComplex& k, int dim);
/// Every face grouped by dimension, index 0 holding the vertices.
std::vector<std::vector<Simplex>> all_faces(const SimplicialComplex& k);

SimplicialComplex link(const SimplicialComplex& k, const Simplex& s);
SimplicialComplex star(const SimplicialComplex& k, const Simplex& s);
/// Number of vertices of the link.
std::size_t degree(const SimplicialComplex& k, const Simplex& s);

SimplicialComplex induced(const SimplicialComplex& k, std::span<const Vertex> vertex_set);
SimplicialComplex complement(const SimplicialComplex& k, std::span<const Vertex> removed);

Graph edge_graph(const SimplicialComplex& k);
/// Nodes are facets (label = index into k.facets()), adjacent when they
/// share a ridge.
Graph facet_adjacency(const SimplicialComplex& k);

/// Connectivity of the edge graph; a 0-dimensional complex is connected iff
/// it has a single vertex.
bool is_connected(const SimplicialComplex& k);
std::size_t connected_components(const SimplicialComplex& k);

bool is_weak_pseudomanifold(const SimplicialComplex& k);
bool is_pseudomanifold(const SimplicialComplex& k);
bool is_normal_pseudomanifold(const SimplicialComplex& k);

struct JoinResult {
    SimplicialComplex complex;
    /// Relabeling applied to the second operand; empty if none was needed.
    VertexMap relabeling;
};

JoinResult join(const SimplicialComplex& x, const SimplicialComplex& y);

/// Graph on the edges with exactly one end in A; two such edges are adjacent
/// when their union is a triangle of the complex.
struct CrossingGraph {
    std::vector<Simplex> edges;
    Graph graph;  ///< node label = index into edges
};

/// Builds the crossing-edge graph without checking any hypothesis.
CrossingGraph crossing_edge_graph(const SimplicialComplex& k, std::span<const Vertex> a);

/// Same graph, but requires k to be a normal pseudomanifold of dimension >= 2
/// and k[A] a normal pseudomanifold of dimension dim(k) - 1. Under these
/// hypotheses the graph has one or two components.
CrossingGraph one_end_graph(const SimplicialComplex& k, std::span<const Vertex> a);

}  // namespace stacktri

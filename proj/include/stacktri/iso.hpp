#pragma once

// Isomorphism of complexes and graphs by backtracking, automorphism counts,
// non-edge graphs, and reconstruction of a stacked sphere from its edge graph.

#include <cstdint>
#include <optional>
#include <string>

#include "stacktri/core.hpp"

namespace stacktri {

/// Vertex pairs that are not edges, on all of V(K).
Graph non_edge_graph(const SimplicialComplex& k);

/// Disjoint union of the stars K_{1,b} for b in `leaves`, nodes labeled 1..n.
Graph star_forest(std::span<const int> leaves);

/// Copy of g without its isolated nodes.
Graph drop_isolated(const Graph& g);

/// Either a vertex bijection carrying facets onto facets, or the invariant
/// that rules one out.
struct IsoWitness {
    std::optional<VertexMap> mapping;
    std::string refutation;

    explicit operator bool() const { return mapping.has_value(); }
};

IsoWitness complex_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b);
std::uint64_t automorphism_count(const SimplicialComplex& k);

/// Node-index bijection preserving adjacency.
std::optional<std::vector<Graph::Node>> graph_isomorphism(const Graph& a, const Graph& b);
std::uint64_t graph_automorphism_count(const Graph& g);

/// Strips degree-(d+1) nodes with clique neighborhoods down to K_{d+2},
/// then re-stars them in reverse. Throws TopologyError("not a stacked-sphere
/// edge graph") when no removal order reaches K_{d+2}.
SimplicialComplex reconstruct_stacked(const Graph& g, int d);

}  // namespace stacktri

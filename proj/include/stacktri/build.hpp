#pragma once

// Explicit constructions: standard spheres and balls, starring and
// collapsing, stacked spheres, the boundary complexes of the "consecutive
// integers" (d+1)-complexes, handle addition and deletion, connected sums,
// Kuehnel's (2d+3)-vertex complexes and the (2d+4)-vertex family indexed by
// partitions of d+1.

#include <cstdint>
#include <optional>
#include <vector>

#include "stacktri/core.hpp"
#include "stacktri/partitions.hpp"

namespace stacktri {

/// Bijection between two disjoint facets, stored as sorted (source, target)
/// pairs.
class FacetBijection {
public:
    FacetBijection() = default;
    /// Throws TopologyError unless the pairs form a bijection between two
    /// disjoint vertex sets of equal size.
    explicit FacetBijection(std::vector<std::pair<Vertex, Vertex>> pairs);

    const Simplex& source() const { return source_; }
    const Simplex& target() const { return target_; }
    const std::vector<std::pair<Vertex, Vertex>>& pairs() const { return pairs_; }
    Vertex image(Vertex x) const;

    FacetBijection inverse() const;
    std::string to_string() const;

    friend bool operator==(const FacetBijection&, const FacetBijection&) = default;

private:
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    Simplex source_;
    Simplex target_;
};

struct StarringStep {
    Simplex facet;
    Vertex new_vertex = 0;
    friend bool operator==(const StarringStep&, const StarringStep&) = default;
};

/// Replay recipe for a stacked sphere. An empty base means {1, ..., d+2}.
struct StarringTrace {
    Simplex base;
    std::vector<StarringStep> steps;
};

SimplicialComplex standard_sphere(int d, Vertex first = 1);
SimplicialComplex standard_ball(int d, Vertex first = 1);
SimplicialComplex cycle(int n, Vertex first = 1);

SimplicialComplex star_vertex(const SimplicialComplex& k, const Simplex& facet, Vertex v);
SimplicialComplex collapse_vertex(const SimplicialComplex& k, Vertex v);

SimplicialComplex stacked_sphere(int d, const StarringTrace& trace);
/// Starring trace of n - d - 2 steps, each into a uniformly chosen facet.
StarringTrace random_starring_trace(int d, int n, std::uint64_t seed);

/// Ridges lying in exactly one facet of a pure complex, closed downward.
SimplicialComplex boundary_complex(const SimplicialComplex& k);

/// Boundary of the pure (d+1)-complex on {1, ..., m+d+1} whose facets are
/// the windows of d+2 consecutive integers.
SimplicialComplex boundary_N(int d, int m);
/// {1, ..., d+1} and {m+1, ..., m+d+1}.
Simplex first_window_facet(int d);
Simplex last_window_facet(int d, int m);

/// Removes the two facets and identifies each source vertex with its image;
/// the surviving labels are those of the target facet. Throws TopologyError
/// listing an offending pair when the bijection is not admissible.
SimplicialComplex handle_add(const SimplicialComplex& k, const FacetBijection& psi);

struct DisjointUnion {
    SimplicialComplex complex;
    VertexMap relabeling;  ///< applied to the second operand
};

DisjointUnion disjoint_union(const SimplicialComplex& x, const SimplicialComplex& y);

/// Identifies s1 in x1 with s2 in x2. Without a map the i-th smallest vertex
/// of s1 goes to the i-th smallest of s2. x2 is relabeled on collision.
SimplicialComplex connected_sum(const SimplicialComplex& x1, const SimplicialComplex& x2,
                                const Simplex& s1, const Simplex& s2,
                                std::optional<FacetBijection> map = std::nullopt);

struct HandleDeletion {
    SimplicialComplex complex;
    /// W+ -> W-; handle_add(complex, psi) is isomorphic to the input.
    FacetBijection psi;
    VertexMap plus;   ///< w -> f+(w)
    VertexMap minus;  ///< w -> f-(w)
};

/// Cuts a normal pseudomanifold open along an induced two-sided standard
/// (d-1)-sphere S, capping both sides with the new facets W+ and W-.
HandleDeletion handle_delete(const SimplicialComplex& x, std::span<const Vertex> sphere);

/// Kuehnel's K^d_{2d+3} on vertices 1..2d+3 (residues mod 2d+3).
SimplicialComplex kuhnel(int d);

/// m+i -> i for 1 <= i <= d+1, from the last window facet to the first.
FacetBijection psi_0(int d, int m);
/// (2d+4+i) -> pi_p(i).
FacetBijection psi_p(int d, const Partition& p);
/// (2d+4)-vertex complex obtained from boundary_N(d, 2d+4) with psi_p.
SimplicialComplex k2d4(int d, const Partition& p);

}  // namespace stacktri

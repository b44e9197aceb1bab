#pragma once

// Decision procedures: stacked spheres, the class of normal pseudomanifolds
// with stacked vertex links, admissibility of facet bijections, and the
// crossing-edge criterion for two-sidedness.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stacktri/build.hpp"
#include "stacktri/core.hpp"

namespace stacktri {

/// n(d+1) - C(d+2, 2).
std::int64_t lower_bound_edges(std::int64_t n, int d);

/// Result of collapsing degree-(d+1) vertices until none is collapsible.
struct CollapseRun {
    /// Starring trace that rebuilds the input from the final complex; only
    /// a replay certificate when `residual` is a standard sphere.
    StarringTrace trace;
    SimplicialComplex residual;
    bool reached_standard_sphere = false;
};

/// Greedy collapse. With no seed the smallest collapsible label goes first;
/// with a seed the choice among collapsible vertices is random.
CollapseRun collapse_run(const SimplicialComplex& k, std::optional<std::uint64_t> seed = std::nullopt);

struct StackedReport {
    bool verdict = false;
    std::int64_t edges = 0;
    std::int64_t lower_bound = 0;
    /// True when d >= 3 and the edge count alone settled a negative verdict.
    bool decided_by_edge_count = false;
    /// Replays to the input via stacked_sphere(dim, trace) when verdict holds.
    std::optional<StarringTrace> trace;
    /// Where the collapse got stuck, for a negative verdict decided by collapse.
    std::optional<SimplicialComplex> residual;
};

/// Requires a pure normal pseudomanifold.
StackedReport is_stacked_sphere(const SimplicialComplex& k);

/// Every vertex link is a stacked sphere. Requires a normal pseudomanifold
/// of dimension >= 2.
bool is_class_K(const SimplicialComplex& k);

struct AdmissibilityViolation {
    Vertex x = 0;
    Vertex image = 0;
    int distance = 0;
    std::vector<Vertex> path;  ///< shortest edge path from x to its image
};

struct AdmissibilityReport {
    bool verdict = false;
    std::optional<AdmissibilityViolation> violation;
};

/// Every x sits at edge-graph distance >= 3 from psi(x). Source and target
/// must be facets of k.
AdmissibilityReport is_admissible(const SimplicialComplex& k, const FacetBijection& psi);

/// All admissible bijections s1 -> s2 in lexicographic order of their maps.
std::vector<FacetBijection> enumerate_admissible(const SimplicialComplex& k, const Simplex& s1,
                                                 const Simplex& s2);

struct TwoSidedReport {
    bool verdict = false;
    std::size_t components = 0;
    /// Crossing edges split by component of the crossing-edge graph; the
    /// component holding the smallest crossing edge is `positive`.
    std::vector<Simplex> positive;
    std::vector<Simplex> negative;
};

/// Two-sided iff the crossing-edge graph of S has exactly two components.
TwoSidedReport is_two_sided(const SimplicialComplex& k, std::span<const Vertex> s);

}  // namespace stacktri

#pragma once

// Simplicial homology with Z2 coefficients (absolute and relative), Euler
// characteristic, orientability by coherent facet orientation, the Alexander
// duality check for nested induced subcomplexes, and a nonbounding 1-cycle
// as a certificate of a nontrivial fundamental group.

#include <cstdint>
#include <optional>
#include <vector>

#include "stacktri/core.hpp"

namespace stacktri {

/// Dense GF(2) matrix with bit-packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c);

    BitMatrix transposed() const;
    BitMatrix operator*(const BitMatrix& rhs) const;
    bool is_zero() const;

    /// Row echelon form by forward elimination, pivot columns left to right.
    std::size_t rank() const;
    /// Column reduction on the "lowest one" of each column, right to left
    /// additions only; an independent route to the same rank.
    std::size_t rank_by_column_reduction() const;

private:
    using Word = std::uint64_t;
    std::size_t words_per_row() const { return (cols_ + 63) / 64; }
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Word> bits_;
};

/// Chain complex of a pair (K, L) over GF(2); L empty gives absolute chains.
struct Gf2ChainComplex {
    /// bases[k]: the k-faces of K not in L, sorted.
    std::vector<std::vector<Simplex>> bases;
    /// boundaries[k] maps C_k -> C_{k-1}: rows = bases[k-1], cols = bases[k].
    /// boundaries[0] is the 0 x |bases[0]| zero map.
    std::vector<BitMatrix> boundaries;

    bool boundary_squares_to_zero() const;
};

Gf2ChainComplex chain_complex(const SimplicialComplex& k);
/// Throws TopologyError unless L is a subcomplex of K.
Gf2ChainComplex relative_chain_complex(const SimplicialComplex& k, const SimplicialComplex& l);

/// Betti numbers in degrees 0..top from a chain complex.
std::vector<std::size_t> betti_numbers(const Gf2ChainComplex& c);
std::vector<std::size_t> betti_z2(const SimplicialComplex& k);
/// Indices 0..dim K.
std::vector<std::size_t> relative_betti_z2(const SimplicialComplex& k, const SimplicialComplex& l);

std::int64_t euler_characteristic(const SimplicialComplex& k);

/// Facet signs relative to the increasing vertex order; the sign of facet i
/// is signs[i] where i indexes k.facets().
struct OrientationReport {
    bool orientable = false;
    std::vector<int> signs;
    /// Facet-adjacency components, each with its own verdict.
    std::vector<bool> component_orientable;
    /// Closed walk of adjacent facets along which the orientation flips.
    std::vector<Simplex> obstruction;
};

/// Propagates facet orientations along a BFS tree of the facet adjacency
/// graph and checks every adjacency. Requires a weak pseudomanifold.
OrientationReport orientable(const SimplicialComplex& k);

/// Edges of a 1-cycle that is not a boundary, if beta_1 > 0.
std::optional<std::vector<Simplex>> h1_certificate(const SimplicialComplex& k);

/// Weak pseudomanifold whose vertex links have the Z2 Betti numbers of a
/// (d-1)-sphere.
bool looks_like_closed_manifold(const SimplicialComplex& k);

struct AlexanderReport {
    bool holds = false;
    /// H_{d-j}(L', L), indexed by j.
    std::vector<std::size_t> inner;
    /// H_j(R, R'), indexed by j.
    std::vector<std::size_t> outer;
};

/// Compares H_{d-j}(L', L) with H_j(R, R') for induced L on `inner` inside L'
/// on `outer`, R and R' their simplicial complements. Either vertex set may
/// be empty or all of V(X).
AlexanderReport alexander_check(const SimplicialComplex& x, std::span<const Vertex> inner,
                                std::span<const Vertex> outer);

}  // namespace stacktri

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cocyc/gf2.hpp"
#include "cocyc/pyramid.hpp"

namespace cocyc {

/// Cell complex of one object at one level: 2-cells are the object's faces
/// (its primal vertices), 1-cells the edges around them, 0-cells the dual
/// vertices at their ends.
struct BoundaryComplex {
    int level = 0;
    int object = -1;
    std::vector<VertexId> cells2;  // sorted
    std::vector<EdgeId> cells1;    // sorted
    std::vector<FaceId> cells0;    // sorted
    gf2::Matrix d1;                // cells0 x cells1
    gf2::Matrix d2;                // cells1 x cells2

    /// Row/column of an edge; throws std::out_of_range for an edge not in the complex.
    std::size_t edge_index(EdgeId e) const;
    gf2::Vector cochain(const std::vector<EdgeId>& edges) const;
};

BoundaryComplex boundary_complex(const Pyramid& p, int object, int level);

/// Every face boundary meets c an even number of times.
bool is_cocycle(const BoundaryComplex& k, const std::vector<EdgeId>& c);

/// c + c2 is a coboundary. Throws std::invalid_argument if either is not a cocycle.
bool are_cohomologous(const BoundaryComplex& k, const std::vector<EdgeId>& c, const std::vector<EdgeId>& c2);

/// Base cracks between the object and one of its holes.
std::vector<EdgeId> hole_cycle(const Pyramid& p, int object, int hole);

int blocking_parity(const std::vector<EdgeId>& c, const std::vector<EdgeId>& g);

/// (b0, b1) from ranks of the boundary matrices.
std::pair<std::size_t, std::size_t> betti(const BoundaryComplex& k);

/// Independent modulo coboundaries and as many as b1.
bool basis_independent(const BoundaryComplex& k, const std::vector<std::vector<EdgeId>>& basis);

/// Cocycle of a foreground path from a pixel next to the hole to a pixel next
/// to the outside: one crack into the hole, the cracks between consecutive
/// path pixels, one crack to the outside. Path entries are base vertex ids.
/// Throws std::invalid_argument for a malformed path.
std::vector<EdgeId> rag_path_cocycle(const Pyramid& p, int object, int hole, const std::vector<VertexId>& path);

/// A simple object path between a random pixel next to the hole and a random
/// pixel next to the outside (shortest path under random weights).
std::vector<VertexId> random_rag_path(const Pyramid& p, int object, int hole, std::uint64_t seed);

/// g plus the boundaries of a random set of faces of the complex.
std::vector<EdgeId> random_homologous_cycle(const BoundaryComplex& k, const std::vector<EdgeId>& g, std::uint64_t seed);

/// d1 * g = 0.
bool is_cycle(const BoundaryComplex& k, const std::vector<EdgeId>& g);

}  // namespace cocyc

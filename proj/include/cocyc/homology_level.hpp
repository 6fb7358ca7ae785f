#pragma once

#include <vector>

#include "cocyc/pyramid.hpp"
#include "cocyc/types.hpp"

namespace cocyc {

enum class LoopKind { Hole, Outer };

struct HomologyLoop {
    EdgeId edge = kNone;  // top-level edge, identical to its base crack id
    LoopKind kind = LoopKind::Outer;
    int hole = -1;  // hole index for LoopKind::Hole
};

/// The object's face in the top boundary graph after contracting a spanning
/// tree of its closure: one dual vertex carrying one self-loop per hole and
/// one for the outer boundary.
struct HomologyLevel {
    int object = -1;
    VertexId top_vertex = kNone;
    FaceId base_vertex = kNone;           // top-level dual vertex the tree contracts to
    std::vector<EdgeId> closure_edges;    // sorted
    std::vector<EdgeId> spanning_tree;    // in contraction order
    std::vector<HomologyLoop> loops;      // holes by index, then the outer loop

    int hole_count() const { return static_cast<int>(loops.size()) - 1; }
    EdgeId hole_loop(int i) const { return loops.at(static_cast<std::size_t>(i)).edge; }
    EdgeId outer_loop() const { return loops.back().edge; }
};

/// The pair {alpha_i, beta} of K^H edges representing hole i.
struct TopCocycle {
    int hole = 0;
    EdgeId alpha = kNone;
    EdgeId beta = kNone;
};

/// Throws std::invalid_argument if the object is not a single top vertex.
HomologyLevel build_homology_level(const Pyramid& p, int object);

std::vector<TopCocycle> cocycle_basis(const HomologyLevel& h);

/// Parity of the cochain on the boundary of the object face in K^H, where
/// every loop is traversed on both of its sides.
int face_boundary_parity(const HomologyLevel& h, const TopCocycle& t);

}  // namespace cocyc

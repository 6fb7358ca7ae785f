#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cocyc/types.hpp"

namespace cocyc {

/// One pyramid level: the primal region adjacency graph G_k and its dual
/// boundary graph, stored as a single combinatorial map.
///
/// Each edge e carries darts 2e and 2e+1. `sigma` permutes the darts around
/// their primal vertex (clockwise on screen); the dual vertices are the orbits
/// of phi = sigma o opposite, i.e. the faces of the primal graph. Dual edge e
/// is the same id as primal edge e, and the dual face of primal vertex v is
/// bounded by the darts in v's sigma-orbit. Self-loops and parallel edges are
/// allowed in both graphs.
///
/// Instances are immutable snapshots; they are produced by CombinatorialMap.
class LevelPair {
public:
    LevelPair() = default;

    const std::vector<VertexId>& primal_vertices() const { return vertices_; }
    const std::vector<EdgeId>& primal_edges() const { return edges_; }
    const std::vector<EdgeId>& dual_edges() const { return dual_edges_; }
    const std::vector<FaceId>& dual_vertices() const { return faces_; }

    bool has_edge(EdgeId e) const;
    bool has_vertex(VertexId v) const;

    DartId sigma(DartId d) const { return sigma_[local(d)]; }
    DartId phi(DartId d) const { return sigma(opposite(d)); }
    VertexId vertex_of(DartId d) const { return vertex_[local(d)]; }
    FaceId face_of(DartId d) const { return face_[local(d)]; }

    /// Some dart of v, or kNone for an isolated vertex.
    DartId first_dart(VertexId v) const;

    /// The sigma-orbit of v: the edge-ends around the primal vertex, which are
    /// also the boundary of v's dual face. A self-loop appears twice.
    std::vector<DartId> darts_around(VertexId v) const;
    /// The phi-orbit containing dart f: the edge-ends around a dual vertex.
    std::vector<DartId> darts_around_face(FaceId f) const;

    std::pair<VertexId, VertexId> primal_endpoints(EdgeId e) const {
        return {vertex_of(dart_of(e, 0)), vertex_of(dart_of(e, 1))};
    }
    std::pair<FaceId, FaceId> dual_endpoints(EdgeId e) const {
        return {face_of(dart_of(e, 0)), face_of(dart_of(e, 1))};
    }
    bool is_primal_self_loop(EdgeId e) const {
        auto [u, v] = primal_endpoints(e);
        return u == v;
    }

    std::size_t primal_degree(VertexId v) const { return darts_around(v).size(); }
    std::size_t dual_degree(FaceId f) const { return darts_around_face(f).size(); }

    /// Copy with dual edge `e` dropped but the primal left intact. Only useful
    /// for exercising consistency checks.
    LevelPair without_dual_edge(EdgeId e) const;

private:
    friend class CombinatorialMap;

    std::size_t local(DartId d) const;

    std::vector<EdgeId> edges_;       // sorted
    std::vector<EdgeId> dual_edges_;  // sorted; bijection with edges_ by id
    std::vector<VertexId> vertices_;  // sorted
    std::vector<DartId> first_dart_;  // parallel to vertices_
    std::vector<FaceId> faces_;       // sorted
    // Per local dart (2 * index in edges_ + side):
    std::vector<DartId> sigma_;
    std::vector<VertexId> vertex_;
    std::vector<FaceId> face_;
};

/// Mutable full-size combinatorial map used while building one level. Darts are
/// addressed by global id; arrays are sized for the base level.
class CombinatorialMap {
public:
    explicit CombinatorialMap(std::size_t edge_capacity);
    static CombinatorialMap from_level(const LevelPair& level, std::size_t edge_capacity);

    /// Declares the cyclic order of darts around vertex v. Used to build the
    /// base level.
    void set_rotation(VertexId v, std::span<const DartId> darts);

    bool alive(EdgeId e) const { return alive_[static_cast<std::size_t>(e)] != 0; }
    DartId sigma(DartId d) const { return next_[static_cast<std::size_t>(d)]; }
    DartId phi(DartId d) const { return sigma(opposite(d)); }
    DartId sigma_inverse(DartId d) const { return prev_[static_cast<std::size_t>(d)]; }

    /// Length of the phi-orbit of d, counting no further than `limit`.
    int face_length_upto(DartId d, int limit) const;

    /// Contracts primal edge e (removal in the dual). The caller guarantees e
    /// is not a primal self-loop.
    void contract(EdgeId e);
    /// Removes primal edge e (contraction in the dual).
    void remove(EdgeId e);

    /// Freezes the current map. `vertex_of_dart` gives the primal vertex id of
    /// every alive dart; `vertices` lists all alive vertex ids (isolated ones
    /// included).
    LevelPair snapshot(std::span<const VertexId> vertex_of_dart, std::vector<VertexId> vertices) const;

    std::size_t edge_capacity() const { return alive_.size(); }

private:
    void link(DartId a, DartId b) {
        next_[static_cast<std::size_t>(a)] = b;
        prev_[static_cast<std::size_t>(b)] = a;
    }
    void unlink(DartId d);

    std::vector<DartId> next_;
    std::vector<DartId> prev_;
    std::vector<std::uint8_t> alive_;
};

/// V - E + F on both graphs plus bijection and orbit consistency.
bool euler_check(const LevelPair& level);

}  // namespace cocyc

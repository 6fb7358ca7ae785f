#include "cocyc/level_pair.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cocyc {

namespace {

template <class T>
std::ptrdiff_t find_sorted(const std::vector<T>& v, T x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) return -1;
    return it - v.begin();
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

}  // namespace

bool LevelPair::has_edge(EdgeId e) const { return find_sorted(edges_, e) >= 0; }

bool LevelPair::has_vertex(VertexId v) const { return find_sorted(vertices_, v) >= 0; }

std::size_t LevelPair::local(DartId d) const {
    const auto i = find_sorted(edges_, edge_of(d));
    if (i < 0) throw ContractViolation("LevelPair: edge " + std::to_string(edge_of(d)) + " not at this level");
    return static_cast<std::size_t>(2 * i + (d & 1));
}

DartId LevelPair::first_dart(VertexId v) const {
    const auto i = find_sorted(vertices_, v);
    if (i < 0) throw ContractViolation("LevelPair: vertex " + std::to_string(v) + " not at this level");
    return first_dart_[static_cast<std::size_t>(i)];
}

std::vector<DartId> LevelPair::darts_around(VertexId v) const {
    std::vector<DartId> out;
    const DartId start = first_dart(v);
    if (start == kNone) return out;
    DartId d = start;
    do {
        out.push_back(d);
        d = sigma(d);
    } while (d != start);
    return out;
}

std::vector<DartId> LevelPair::darts_around_face(FaceId f) const {
    std::vector<DartId> out;
    DartId d = f;
    do {
        out.push_back(d);
        d = phi(d);
    } while (d != f);
    return out;
}

LevelPair LevelPair::without_dual_edge(EdgeId e) const {
    LevelPair copy = *this;
    auto it = std::lower_bound(copy.dual_edges_.begin(), copy.dual_edges_.end(), e);
    if (it != copy.dual_edges_.end() && *it == e) copy.dual_edges_.erase(it);
    return copy;
}

CombinatorialMap::CombinatorialMap(std::size_t edge_capacity)
    : next_(2 * edge_capacity, kNone), prev_(2 * edge_capacity, kNone), alive_(edge_capacity, 0) {}

CombinatorialMap CombinatorialMap::from_level(const LevelPair& level, std::size_t edge_capacity) {
    CombinatorialMap m(edge_capacity);
    for (EdgeId e : level.primal_edges()) {
        m.alive_[static_cast<std::size_t>(e)] = 1;
        for (int side = 0; side < 2; ++side) {
            const DartId d = dart_of(e, side);
            m.link(d, level.sigma(d));
        }
    }
    return m;
}

void CombinatorialMap::set_rotation(VertexId, std::span<const DartId> darts) {
    for (std::size_t i = 0; i < darts.size(); ++i) {
        alive_[static_cast<std::size_t>(edge_of(darts[i]))] = 1;
        link(darts[i], darts[(i + 1) % darts.size()]);
    }
}

int CombinatorialMap::face_length_upto(DartId d, int limit) const {
    int n = 0;
    DartId x = d;
    do {
        ++n;
        x = phi(x);
    } while (x != d && n < limit);
    return n;
}

void CombinatorialMap::unlink(DartId d) {
    const auto i = static_cast<std::size_t>(d);
    if (next_[i] != d) link(prev_[i], next_[i]);
    next_[i] = prev_[i] = kNone;
}

void CombinatorialMap::contract(EdgeId e) {
    const DartId d = dart_of(e, 0);
    const DartId o = dart_of(e, 1);
    if (!alive(e)) throw ContractViolation("contract: edge " + std::to_string(e) + " is not alive");
    const DartId dn = sigma(d);
    const DartId dp = prev_[static_cast<std::size_t>(d)];
    const DartId on = sigma(o);
    const DartId op = prev_[static_cast<std::size_t>(o)];
    if (dn == o || on == d) throw ContractViolation("contract: edge " + std::to_string(e) + " is a self-loop");
    if (dn == d || on == o) {
        // One endpoint has no other edge; the merged rotation is the other one.
        unlink(d);
        unlink(o);
    } else {
        link(dp, on);
        link(op, dn);
        next_[static_cast<std::size_t>(d)] = prev_[static_cast<std::size_t>(d)] = kNone;
        next_[static_cast<std::size_t>(o)] = prev_[static_cast<std::size_t>(o)] = kNone;
    }
    alive_[static_cast<std::size_t>(e)] = 0;
}

void CombinatorialMap::remove(EdgeId e) {
    if (!alive(e)) throw ContractViolation("remove: edge " + std::to_string(e) + " is not alive");
    unlink(dart_of(e, 0));
    unlink(dart_of(e, 1));
    alive_[static_cast<std::size_t>(e)] = 0;
}

LevelPair CombinatorialMap::snapshot(std::span<const VertexId> vertex_of_dart,
                                     std::vector<VertexId> vertices) const {
    LevelPair out;
    for (std::size_t e = 0; e < alive_.size(); ++e)
        if (alive_[e]) out.edges_.push_back(static_cast<EdgeId>(e));
    out.dual_edges_ = out.edges_;
    std::sort(vertices.begin(), vertices.end());
    out.vertices_ = std::move(vertices);
    out.first_dart_.assign(out.vertices_.size(), kNone);

    const std::size_t n = 2 * out.edges_.size();
    out.sigma_.resize(n);
    out.vertex_.resize(n);
    out.face_.assign(n, kNone);
    for (std::size_t i = 0; i < n; ++i) {
        const DartId d = dart_of(out.edges_[i / 2], static_cast<int>(i % 2));
        out.sigma_[i] = sigma(d);
        const VertexId v = vertex_of_dart[static_cast<std::size_t>(d)];
        out.vertex_[i] = v;
        const auto vi = find_sorted(out.vertices_, v);
        if (vi < 0) throw ContractViolation("snapshot: dart " + std::to_string(d) + " has unknown vertex");
        if (out.first_dart_[static_cast<std::size_t>(vi)] == kNone) out.first_dart_[static_cast<std::size_t>(vi)] = d;
    }
    // Darts are visited in increasing id order, so each face is named by the
    // smallest dart of its orbit.
    for (std::size_t i = 0; i < n; ++i) {
        if (out.face_[i] != kNone) continue;
        const DartId start = dart_of(out.edges_[i / 2], static_cast<int>(i % 2));
        DartId d = start;
        do {
            out.face_[out.local(d)] = start;
            d = phi(d);
        } while (d != start);
        out.faces_.push_back(start);
    }
    return out;
}

bool euler_check(const LevelPair& level) {
    const auto& edges = level.primal_edges();
    if (edges != level.dual_edges()) return false;
    const auto& vertices = level.primal_vertices();
    if (vertices.empty()) return false;

    const std::size_t V = vertices.size();
    const std::size_t E = edges.size();
    const std::size_t F = E == 0 ? 1 : level.dual_vertices().size();

    // Orbit consistency: sigma stays on one vertex, phi stays on one face.
    std::size_t sigma_orbits = 0;
    for (EdgeId e : edges) {
        for (int side = 0; side < 2; ++side) {
            const DartId d = dart_of(e, side);
            const DartId s = level.sigma(d);
            if (!level.has_edge(edge_of(s))) return false;
            if (level.vertex_of(s) != level.vertex_of(d)) return false;
            if (level.face_of(level.phi(d)) != level.face_of(d)) return false;
        }
    }
    for (VertexId v : vertices) {
        const DartId f = level.first_dart(v);
        if (f == kNone) {
            if (V != 1) return false;  // isolated vertex in a larger graph
            continue;
        }
        ++sigma_orbits;
    }
    std::size_t dart_count_by_vertex = 0;
    for (VertexId v : vertices)
        if (level.first_dart(v) != kNone) dart_count_by_vertex += level.darts_around(v).size();
    if (dart_count_by_vertex != 2 * E) return false;
    if (E > 0 && sigma_orbits != V) return false;

    // Connectivity of both graphs.
    UnionFind primal(V);
    std::size_t primal_parts = V;
    const auto& faces = level.dual_vertices();
    UnionFind dual(std::max<std::size_t>(faces.size(), 1));
    std::size_t dual_parts = std::max<std::size_t>(faces.size(), 1);
    for (EdgeId e : edges) {
        auto [a, b] = level.primal_endpoints(e);
        const auto ia = static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), a) - vertices.begin());
        const auto ib = static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), b) - vertices.begin());
        if (primal.unite(ia, ib)) --primal_parts;
        auto [f, g] = level.dual_endpoints(e);
        const auto jf = static_cast<std::size_t>(std::lower_bound(faces.begin(), faces.end(), f) - faces.begin());
        const auto jg = static_cast<std::size_t>(std::lower_bound(faces.begin(), faces.end(), g) - faces.begin());
        if (dual.unite(jf, jg)) --dual_parts;
    }
    if (primal_parts != 1 || dual_parts != 1) return false;

    // Primal: V - E + F; dual: F - E + V with the faces of the dual being the
    // primal vertices (sigma orbits), checked above.
    const auto chi = static_cast<long long>(V) - static_cast<long long>(E) + static_cast<long long>(F);
    return chi == 2;
}

}  // namespace cocyc

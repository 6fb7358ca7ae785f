#include "cocyc/downproject.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace cocyc {

namespace {

bool contains(const std::vector<EdgeId>& sorted, EdgeId e) { return std::binary_search(sorted.begin(), sorted.end(), e); }

// Object vertices touched by the cocycle, with the number of cocycle edge-ends
// around each.
std::unordered_map<VertexId, int> face_counts(const Pyramid& p, const LevelPair& level, const Cocycle& c) {
    std::unordered_map<VertexId, int> count;
    for (EdgeId e : c.edges) {
        if (!level.has_edge(e))
            throw ContractViolation("cocycle edge " + std::to_string(e) + " not at level " + std::to_string(c.level));
        for (int side = 0; side < 2; ++side) {
            const VertexId v = level.vertex_of(dart_of(e, side));
            if (p.object_of_vertex(v) == c.object) ++count[v];
        }
    }
    return count;
}

}  // namespace

bool satisfies_cocycle_condition(const Pyramid& p, const Cocycle& c) {
    for (const auto& [v, n] : face_counts(p, p.level(c.level), c))
        if (n % 2 != 0) return false;
    return true;
}

Cocycle down_project_level(const Pyramid& p, const Cocycle& a, ProjectionWork* work) {
    if (a.level < 1 || a.level > p.height())
        throw ContractViolation("down_project_level: level " + std::to_string(a.level) + " has nothing below");
    if (!satisfies_cocycle_condition(p, a))
        throw ContractViolation("down_project_level: input is not a cocycle at level " + std::to_string(a.level));

    const LevelPair& upper = p.level(a.level);
    const LevelPair& lower = p.level(a.level - 1);
    const LevelStep& step = p.log().step(a.level - 1);

    Cocycle out{a.level - 1, a.object, a.hole, {}};
    // A^s: every surviving edge is its own pre-image.
    for (EdgeId e : a.edges) out.edges.push_back(p.log().preimage(a.level, e));
    std::sort(out.edges.begin(), out.edges.end());
    const std::vector<EdgeId> survivors = out.edges;

    // Only kernels of the object whose root carries a cocycle edge can have a
    // nonzero labelling.
    std::vector<VertexId> roots;
    for (EdgeId e : a.edges)
        for (int side = 0; side < 2; ++side) {
            const VertexId v = upper.vertex_of(dart_of(e, side));
            if (p.object_of_vertex(v) == a.object) roots.push_back(v);
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    std::unordered_map<VertexId, long long> label;
    for (VertexId r : roots) {
        const ContractionKernel* kernel = step.kernel_rooted_at(r);
        if (kernel == nullptr) continue;
        label.clear();
        for (VertexId v : kernel->vertices()) {
            long long n = 0;
            for (DartId d : lower.darts_around(v)) {
                if (work) ++work->visits;
                if (contains(survivors, edge_of(d))) ++n;
            }
            label[v] = n;
        }
        // Leaves first, so a child's label is final before it is read.
        for (const auto& ke : kernel->tree_edges) {
            const long long child = label[ke.child];
            label[ke.parent] += child;
            if (child % 2 != 0) out.edges.push_back(ke.edge);
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    if (!satisfies_cocycle_condition(p, out))
        throw ContractViolation("down_project_level: result is not a cocycle at level " + std::to_string(out.level));
    return out;
}

Cocycle down_project_to_base(const Pyramid& p, const TopCocycle& t, const HomologyLevel& h, ProjectionWork* work,
                             std::vector<Cocycle>* trail) {
    Cocycle c{p.height(), h.object, t.hole, {t.alpha, t.beta}};
    std::sort(c.edges.begin(), c.edges.end());
    if (trail) trail->push_back(c);
    while (c.level > 0) {
        c = down_project_level(p, c, work);
        if (trail) trail->push_back(c);
    }
    return c;
}

}  // namespace cocyc

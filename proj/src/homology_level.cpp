#include "cocyc/homology_level.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cocyc {

HomologyLevel build_homology_level(const Pyramid& p, int object) {
    if (object < 0 || static_cast<std::size_t>(object) >= p.objects().size())
        throw std::invalid_argument("unknown object " + std::to_string(object));
    const auto& obj = p.objects()[static_cast<std::size_t>(object)];
    const PixelMap& pm = p.pixel_map();

    HomologyLevel h;
    h.object = object;
    h.top_vertex = p.top_vertex_of(pm.pixel_to_vertex(obj.pixels.front()));
    for (const Pixel px : obj.pixels)
        if (p.top_vertex_of(pm.pixel_to_vertex(px)) != h.top_vertex)
            throw std::invalid_argument("object " + std::to_string(object) + " is not a single top region");

    const LevelPair& top = p.top();
    for (DartId d : top.darts_around(h.top_vertex)) h.closure_edges.push_back(edge_of(d));
    std::sort(h.closure_edges.begin(), h.closure_edges.end());
    h.closure_edges.erase(std::unique(h.closure_edges.begin(), h.closure_edges.end()), h.closure_edges.end());

    // Kruskal from the top of the edge order down: the edges left over are
    // the order-minimal edge of each boundary component.
    std::vector<EdgeId> edges = h.closure_edges;
    std::sort(edges.begin(), edges.end(), [&](EdgeId a, EdgeId b) { return p.order().less(b, a); });
    std::vector<FaceId> faces;
    for (EdgeId e : edges) {
        auto [f, g] = top.dual_endpoints(e);
        faces.push_back(f);
        faces.push_back(g);
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<std::size_t> parent(faces.size());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const auto index = [&](FaceId f) {
        return static_cast<std::size_t>(std::lower_bound(faces.begin(), faces.end(), f) - faces.begin());
    };

    const auto regions = complement_regions(p.image(), obj);
    std::vector<std::vector<EdgeId>> hole_loops(static_cast<std::size_t>(regions.hole_count()));
    std::vector<EdgeId> outer_loops;
    for (EdgeId e : edges) {
        auto [f, g] = top.dual_endpoints(e);
        const std::size_t a = find(index(f));
        const std::size_t b = find(index(g));
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
            h.spanning_tree.push_back(e);
            continue;
        }
        int region = ComplementRegions::kObject;
        for (int side = 0; side < 2; ++side) {
            const auto px = pm.side_pixel(e, side);
            const int r = region_of(regions, p.image(), px);
            if (r != ComplementRegions::kObject) region = r;
        }
        if (region == ComplementRegions::kObject)
            throw ContractViolation("homology level: loop " + std::to_string(e) + " lies inside the object");
        if (region == ComplementRegions::kOutside)
            outer_loops.push_back(e);
        else
            hole_loops[static_cast<std::size_t>(region)].push_back(e);
    }
    h.base_vertex = faces.empty() ? kNone : faces[find(0)];

    for (std::size_t i = 0; i < hole_loops.size(); ++i) {
        if (hole_loops[i].size() != 1)
            throw ContractViolation("homology level: hole " + std::to_string(i) + " has " +
                                    std::to_string(hole_loops[i].size()) + " loops");
        h.loops.push_back({hole_loops[i][0], LoopKind::Hole, static_cast<int>(i)});
    }
    if (outer_loops.size() != 1)
        throw ContractViolation("homology level: " + std::to_string(outer_loops.size()) + " outer loops");
    h.loops.push_back({outer_loops[0], LoopKind::Outer, -1});
    return h;
}

std::vector<TopCocycle> cocycle_basis(const HomologyLevel& h) {
    std::vector<TopCocycle> out;
    for (int i = 0; i < h.hole_count(); ++i) out.push_back({i, h.hole_loop(i), h.outer_loop()});
    return out;
}

int face_boundary_parity(const HomologyLevel& h, const TopCocycle& t) {
    // In K^H only the loops remain on the face boundary, each seen from both
    // sides.
    int count = 0;
    for (const auto& loop : h.loops)
        if (loop.edge == t.alpha || loop.edge == t.beta) count += 2;
    return count % 2;
}

}  // namespace cocyc

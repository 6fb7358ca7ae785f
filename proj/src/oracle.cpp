#include "cocyc/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

namespace cocyc {

namespace {

template <class T>
std::size_t index_in(const std::vector<T>& sorted, T x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.end() || *it != x) throw std::out_of_range("cell " + std::to_string(x) + " not in complex");
    return static_cast<std::size_t>(it - sorted.begin());
}

std::vector<EdgeId> from_vector(const BoundaryComplex& k, const gf2::Vector& v) {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < k.cells1.size(); ++i)
        if (v.get(i)) out.push_back(k.cells1[i]);
    return out;
}

const std::array<Pixel, 4> kSteps{Pixel{0, -1}, Pixel{1, 0}, Pixel{0, 1}, Pixel{-1, 0}};

}  // namespace

std::size_t BoundaryComplex::edge_index(EdgeId e) const { return index_in(cells1, e); }

gf2::Vector BoundaryComplex::cochain(const std::vector<EdgeId>& edges) const {
    gf2::Vector v(cells1.size());
    for (EdgeId e : edges) v.flip(edge_index(e));
    return v;
}

BoundaryComplex boundary_complex(const Pyramid& p, int object, int level) {
    const LevelPair& lv = p.level(level);
    BoundaryComplex k;
    k.level = level;
    k.object = object;
    for (VertexId v : lv.primal_vertices())
        if (p.object_of_vertex(v) == object) k.cells2.push_back(v);
    for (VertexId v : k.cells2) {
        for (DartId d : lv.darts_around(v)) {
            k.cells1.push_back(edge_of(d));
            k.cells0.push_back(lv.face_of(d));
            k.cells0.push_back(lv.face_of(opposite(d)));
        }
    }
    for (auto* cells : {&k.cells1, &k.cells0}) {
        std::sort(cells->begin(), cells->end());
        cells->erase(std::unique(cells->begin(), cells->end()), cells->end());
    }
    k.d1 = gf2::Matrix(k.cells0.size(), k.cells1.size());
    for (std::size_t j = 0; j < k.cells1.size(); ++j) {
        auto [f, g] = lv.dual_endpoints(k.cells1[j]);
        if (f == g) continue;  // a dual self-loop has zero boundary
        k.d1.set(index_in(k.cells0, f), j);
        k.d1.set(index_in(k.cells0, g), j);
    }
    k.d2 = gf2::Matrix(k.cells1.size(), k.cells2.size());
    for (std::size_t c = 0; c < k.cells2.size(); ++c)
        for (DartId d : lv.darts_around(k.cells2[c])) k.d2.flip(k.edge_index(edge_of(d)), c);
    return k;
}

bool is_cocycle(const BoundaryComplex& k, const std::vector<EdgeId>& c) {
    const gf2::Vector v = k.cochain(c);
    for (std::size_t col = 0; col < k.cells2.size(); ++col) {
        bool parity = false;
        for (std::size_t r = 0; r < k.cells1.size(); ++r) parity ^= v.get(r) && k.d2.get(r, col);
        if (parity) return false;
    }
    return true;
}

bool are_cohomologous(const BoundaryComplex& k, const std::vector<EdgeId>& c, const std::vector<EdgeId>& c2) {
    if (!is_cocycle(k, c) || !is_cocycle(k, c2)) throw std::invalid_argument("are_cohomologous: not a cocycle");
    return gf2::in_column_span(k.d1.transpose(), k.cochain(c) ^ k.cochain(c2));
}

std::vector<EdgeId> hole_cycle(const Pyramid& p, int object, int hole) {
    const auto& obj = p.objects().at(static_cast<std::size_t>(object));
    const auto regions = complement_regions(p.image(), obj);
    if (hole < 0 || hole >= regions.hole_count()) throw std::out_of_range("hole " + std::to_string(hole) + " out of range");
    std::vector<EdgeId> out;
    for (const Pixel px : obj.pixels) {
        for (const Pixel s : kSteps) {
            const Pixel q{px.x + s.x, px.y + s.y};
            if (p.image().contains(q) && regions.at(q) == hole) out.push_back(p.pixel_map().edge_between(px, q));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int blocking_parity(const std::vector<EdgeId>& c, const std::vector<EdgeId>& g) {
    std::vector<EdgeId> a = c, b = g;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<EdgeId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return static_cast<int>(common.size() % 2);
}

std::pair<std::size_t, std::size_t> betti(const BoundaryComplex& k) {
    const std::size_t r1 = gf2::rank(k.d1);
    const std::size_t r2 = gf2::rank(k.d2);
    return {k.cells0.size() - r1, k.cells1.size() - r1 - r2};
}

bool basis_independent(const BoundaryComplex& k, const std::vector<std::vector<EdgeId>>& basis) {
    for (const auto& c : basis)
        if (!is_cocycle(k, c)) return false;
    const gf2::Matrix delta0 = k.d1.transpose();
    std::vector<gf2::Vector> columns;
    for (const auto& c : basis) columns.push_back(k.cochain(c));
    const std::size_t gain = gf2::rank(delta0.with_columns(columns)) - gf2::rank(delta0);
    return gain == basis.size() && basis.size() == betti(k).second;
}

namespace {

struct PathContext {
    const BinaryImage& img;
    const PixelMap& pm;
    const ObjectComponent& obj;
    ComplementRegions regions;

    int region(Pixel q) const { return img.contains(q) ? regions.at(q) : ComplementRegions::kOutside; }
    bool in_object(Pixel q) const { return img.contains(q) && regions.at(q) == ComplementRegions::kObject; }

    // Smallest crack from px into the given region, or kNone.
    EdgeId crack_into(Pixel px, int target) const {
        EdgeId best = kNone;
        for (const Pixel s : kSteps) {
            const Pixel q{px.x + s.x, px.y + s.y};
            if (region(q) != target) continue;
            const EdgeId e = pm.edge_between(px, q);
            if (best == kNone || e < best) best = e;
        }
        return best;
    }
};

PathContext make_context(const Pyramid& p, int object, int hole) {
    if (object < 0 || static_cast<std::size_t>(object) >= p.objects().size())
        throw std::invalid_argument("unknown object " + std::to_string(object));
    const auto& obj = p.objects()[static_cast<std::size_t>(object)];
    PathContext ctx{p.image(), p.pixel_map(), obj, complement_regions(p.image(), obj)};
    if (hole < 0 || hole >= ctx.regions.hole_count())
        throw std::invalid_argument("object " + std::to_string(object) + " has no hole " + std::to_string(hole));
    return ctx;
}

}  // namespace

std::vector<EdgeId> rag_path_cocycle(const Pyramid& p, int object, int hole, const std::vector<VertexId>& path) {
    const PathContext ctx = make_context(p, object, hole);
    if (path.empty()) throw std::invalid_argument("rag_path_cocycle: empty path");
    std::vector<Pixel> pixels;
    for (VertexId v : path) {
        if (v < 0 || ctx.pm.is_exterior(v) || v >= static_cast<VertexId>(ctx.pm.vertex_count()))
            throw std::invalid_argument("rag_path_cocycle: vertex " + std::to_string(v) + " is not a pixel");
        const Pixel px = ctx.pm.vertex_to_pixel(v);
        if (!ctx.in_object(px)) throw std::invalid_argument("rag_path_cocycle: path leaves the object");
        pixels.push_back(px);
    }
    std::vector<VertexId> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("rag_path_cocycle: path is not simple");

    std::vector<EdgeId> out;
    const EdgeId ea = ctx.crack_into(pixels.front(), hole);
    const EdgeId eb = ctx.crack_into(pixels.back(), ComplementRegions::kOutside);
    if (ea == kNone) throw std::invalid_argument("rag_path_cocycle: path does not start at the hole");
    if (eb == kNone) throw std::invalid_argument("rag_path_cocycle: path does not end at the outside");
    out.push_back(ea);
    out.push_back(eb);
    for (std::size_t i = 0; i + 1 < pixels.size(); ++i) out.push_back(ctx.pm.edge_between(pixels[i], pixels[i + 1]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> random_rag_path(const Pyramid& p, int object, int hole, std::uint64_t seed) {
    const PathContext ctx = make_context(p, object, hole);
    std::mt19937_64 rng(seed);
    std::vector<Pixel> starts, ends;
    for (const Pixel px : ctx.obj.pixels) {
        if (ctx.crack_into(px, hole) != kNone) starts.push_back(px);
        if (ctx.crack_into(px, ComplementRegions::kOutside) != kNone) ends.push_back(px);
    }
    const Pixel start = starts[rng() % starts.size()];
    const Pixel goal = ends[rng() % ends.size()];

    const std::size_t n = ctx.img.pixel_count();
    std::vector<std::uint64_t> dist(n, std::numeric_limits<std::uint64_t>::max());
    std::vector<std::int64_t> from(n, -1);
    using Item = std::pair<std::uint64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[ctx.img.index(start)] = 0;
    queue.push({0, ctx.img.index(start)});
    while (!queue.empty()) {
        auto [dv, i] = queue.top();
        queue.pop();
        if (dv != dist[i]) continue;
        const Pixel px = ctx.img.pixel_at(i);
        if (px == goal) break;
        for (const Pixel s : kSteps) {
            const Pixel q{px.x + s.x, px.y + s.y};
            if (!ctx.in_object(q)) continue;
            const std::uint64_t nd = dv + 1 + rng() % 1000;
            const std::size_t j = ctx.img.index(q);
            if (nd < dist[j]) {
                dist[j] = nd;
                from[j] = static_cast<std::int64_t>(i);
                queue.push({nd, j});
            }
        }
    }
    std::vector<VertexId> path;
    for (std::int64_t i = static_cast<std::int64_t>(ctx.img.index(goal)); i >= 0; i = from[static_cast<std::size_t>(i)])
        path.push_back(ctx.pm.pixel_to_vertex(ctx.img.pixel_at(static_cast<std::size_t>(i))));
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<EdgeId> random_homologous_cycle(const BoundaryComplex& k, const std::vector<EdgeId>& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    gf2::Vector v = k.cochain(g);
    for (std::size_t c = 0; c < k.cells2.size(); ++c)
        if (rng() & 1U) v ^= k.d2.column(c);
    return from_vector(k, v);
}

bool is_cycle(const BoundaryComplex& k, const std::vector<EdgeId>& g) {
    return gf2::multiply(k.d1, k.cochain(g)).is_zero();
}

}  // namespace cocyc

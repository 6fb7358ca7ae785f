#include "cocyc/grid_complex.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>

namespace cocyc {

PixelMap::PixelMap(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1) throw ContractViolation("PixelMap: dimensions must be >= 1");
}

VertexId PixelMap::pixel_to_vertex(Pixel p) const {
    if (p.x < 0 || p.y < 0 || p.x >= width_ || p.y >= height_)
        throw std::out_of_range("pixel (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") outside image");
    return p.y * width_ + p.x;
}

Pixel PixelMap::vertex_to_pixel(VertexId v) const {
    if (v < 0 || v >= width_ * height_) throw std::out_of_range("vertex " + std::to_string(v) + " is not a pixel");
    return Pixel{v % width_, v / width_};
}

Crack make_crack(Corner a, Corner b) {
    if (b < a) std::swap(a, b);
    return Crack{a, b};
}

EdgeId PixelMap::crack_to_edge(Crack c) const {
    c = make_crack(c.a, c.b);
    const auto [a, b] = c;
    if (a.y == b.y && b.x == a.x + 1 && a.x >= 0 && a.x < width_ && a.y >= 0 && a.y <= height_)
        return a.y * width_ + a.x;
    if (a.x == b.x && b.y == a.y + 1 && a.x >= 0 && a.x <= width_ && a.y >= 0 && a.y < height_)
        return width_ * (height_ + 1) + a.y * (width_ + 1) + a.x;
    throw std::out_of_range("segment (" + std::to_string(a.x) + "," + std::to_string(a.y) + ")-(" +
                            std::to_string(b.x) + "," + std::to_string(b.y) + ") is not a crack");
}

Crack PixelMap::edge_to_crack(EdgeId e) const {
    const int horizontal = width_ * (height_ + 1);
    if (e < 0 || static_cast<std::size_t>(e) >= edge_count())
        throw std::out_of_range("edge " + std::to_string(e) + " out of range");
    if (e < horizontal) {
        const int x = e % width_;
        const int y = e / width_;
        return Crack{{x, y}, {x + 1, y}};
    }
    const int r = e - horizontal;
    const int x = r % (width_ + 1);
    const int y = r / (width_ + 1);
    return Crack{{x, y}, {x, y + 1}};
}

std::optional<Pixel> PixelMap::side_pixel(EdgeId e, int side) const {
    const Crack c = edge_to_crack(e);
    Pixel p;
    if (c.a.y == c.b.y)
        p = side == 0 ? Pixel{c.a.x, c.a.y - 1} : Pixel{c.a.x, c.a.y};
    else
        p = side == 0 ? Pixel{c.a.x - 1, c.a.y} : Pixel{c.a.x, c.a.y};
    if (p.x < 0 || p.y < 0 || p.x >= width_ || p.y >= height_) return std::nullopt;
    return p;
}

VertexId PixelMap::side_vertex(EdgeId e, int side) const {
    const auto p = side_pixel(e, side);
    return p ? pixel_to_vertex(*p) : exterior_vertex();
}

EdgeId PixelMap::edge_between(Pixel a, Pixel b) const {
    if (a.y == b.y && std::abs(a.x - b.x) == 1)
        return crack_to_edge(Crack{{std::max(a.x, b.x), a.y}, {std::max(a.x, b.x), a.y + 1}});
    if (a.x == b.x && std::abs(a.y - b.y) == 1)
        return crack_to_edge(Crack{{a.x, std::max(a.y, b.y)}, {a.x + 1, std::max(a.y, b.y)}});
    throw std::out_of_range("pixels are not 4-adjacent");
}

std::pair<int, int> PixelMap::doubled_center(EdgeId e) const {
    const Crack c = edge_to_crack(e);
    return {c.a.x + c.b.x, c.a.y + c.b.y};
}

std::pair<LevelPair, PixelMap> build_base(const BinaryImage& img) {
    const int W = img.width();
    const int H = img.height();
    PixelMap pm(W, H);
    const auto h = [&](int x, int y) { return y * W + x; };
    const auto v = [&](int x, int y) { return W * (H + 1) + y * (W + 1) + x; };

    CombinatorialMap map(pm.edge_count());
    for (int y = 0; y < H; ++y) {
        for (int x = 0; x < W; ++x) {
            // Clockwise on screen: top, right, bottom, left.
            const std::array<DartId, 4> darts{dart_of(h(x, y), 1), dart_of(v(x + 1, y), 0),
                                              dart_of(h(x, y + 1), 0), dart_of(v(x, y), 1)};
            map.set_rotation(pm.pixel_to_vertex({x, y}), darts);
        }
    }
    // The exterior sees the border from outside, so walking it clockwise
    // around the exterior vertex traces the image border counterclockwise.
    std::vector<DartId> outside;
    for (int x = W - 1; x >= 0; --x) outside.push_back(dart_of(h(x, 0), 0));
    for (int y = 0; y < H; ++y) outside.push_back(dart_of(v(0, y), 0));
    for (int x = 0; x < W; ++x) outside.push_back(dart_of(h(x, H), 1));
    for (int y = H - 1; y >= 0; --y) outside.push_back(dart_of(v(W, y), 1));
    map.set_rotation(pm.exterior_vertex(), outside);

    std::vector<VertexId> vertex_of_dart(2 * pm.edge_count());
    for (std::size_t e = 0; e < pm.edge_count(); ++e)
        for (int side = 0; side < 2; ++side)
            vertex_of_dart[2 * e + static_cast<std::size_t>(side)] = pm.side_vertex(static_cast<EdgeId>(e), side);
    std::vector<VertexId> vertices(pm.vertex_count());
    for (std::size_t i = 0; i < vertices.size(); ++i) vertices[i] = static_cast<VertexId>(i);
    return {map.snapshot(vertex_of_dart, std::move(vertices)), pm};
}

std::vector<ObjectComponent> object_components(const BinaryImage& img) {
    std::vector<ObjectComponent> out;
    std::vector<std::uint8_t> seen(img.pixel_count(), 0);
    const std::array<Pixel, 4> steps{Pixel{0, -1}, Pixel{1, 0}, Pixel{0, 1}, Pixel{-1, 0}};
    for (std::size_t i = 0; i < img.pixel_count(); ++i) {
        const Pixel start = img.pixel_at(i);
        if (seen[i] || !img.foreground(start)) continue;
        ObjectComponent comp;
        comp.index = static_cast<int>(out.size());
        std::deque<Pixel> queue{start};
        seen[i] = 1;
        while (!queue.empty()) {
            const Pixel p = queue.front();
            queue.pop_front();
            comp.pixels.push_back(p);
            for (const Pixel s : steps) {
                const Pixel q{p.x + s.x, p.y + s.y};
                if (!img.contains(q) || !img.foreground(q) || seen[img.index(q)]) continue;
                seen[img.index(q)] = 1;
                queue.push_back(q);
            }
        }
        std::sort(comp.pixels.begin(), comp.pixels.end(),
                  [](Pixel a, Pixel b) { return std::pair(a.y, a.x) < std::pair(b.y, b.x); });
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<int> object_label_map(const BinaryImage& img, const std::vector<ObjectComponent>& objects) {
    std::vector<int> label(img.pixel_count(), -1);
    for (const auto& obj : objects)
        for (const Pixel p : obj.pixels) label[img.index(p)] = obj.index;
    return label;
}

int hole_count_oracle(const ObjectComponent& obj) {
    std::vector<Corner> corners;
    std::vector<Crack> cracks;
    for (const Pixel p : obj.pixels) {
        const Corner c00{p.x, p.y}, c10{p.x + 1, p.y}, c01{p.x, p.y + 1}, c11{p.x + 1, p.y + 1};
        corners.insert(corners.end(), {c00, c10, c01, c11});
        cracks.insert(cracks.end(), {Crack{c00, c10}, Crack{c01, c11}, Crack{c00, c01}, Crack{c10, c11}});
    }
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    std::sort(cracks.begin(), cracks.end());
    cracks.erase(std::unique(cracks.begin(), cracks.end()), cracks.end());
    const long long chi = static_cast<long long>(corners.size()) - static_cast<long long>(cracks.size()) +
                          static_cast<long long>(obj.pixels.size());
    return static_cast<int>(1 - chi);
}

ComplementRegions complement_regions(const BinaryImage& img, const ObjectComponent& obj) {
    ComplementRegions r;
    r.width = img.width();
    constexpr int kUnset = -3;
    r.region.assign(img.pixel_count(), kUnset);
    for (const Pixel p : obj.pixels) r.region[img.index(p)] = ComplementRegions::kObject;

    const std::array<Pixel, 4> steps{Pixel{0, -1}, Pixel{1, 0}, Pixel{0, 1}, Pixel{-1, 0}};
    std::vector<Pixel> members;
    for (std::size_t i = 0; i < img.pixel_count(); ++i) {
        if (r.region[i] != kUnset) continue;
        const Pixel start = img.pixel_at(i);
        members.clear();
        bool touches_border = false;
        std::deque<Pixel> queue{start};
        r.region[i] = 0;  // provisional mark
        while (!queue.empty()) {
            const Pixel p = queue.front();
            queue.pop_front();
            members.push_back(p);
            for (const Pixel s : steps) {
                const Pixel q{p.x + s.x, p.y + s.y};
                if (!img.contains(q)) {
                    touches_border = true;
                    continue;
                }
                if (r.region[img.index(q)] != kUnset) continue;
                r.region[img.index(q)] = 0;
                queue.push_back(q);
            }
        }
        int id = ComplementRegions::kOutside;
        if (!touches_border) {
            id = r.hole_count();
            r.hole_seed.push_back(start);
        }
        for (const Pixel p : members) r.region[img.index(p)] = id;
    }
    return r;
}

int region_of(const ComplementRegions& r, const BinaryImage& img, std::optional<Pixel> p) {
    if (!p || !img.contains(*p)) return ComplementRegions::kOutside;
    return r.at(*p);
}

}  // namespace cocyc

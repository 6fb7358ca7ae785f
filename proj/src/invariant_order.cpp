#include "cocyc/invariant_order.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cocyc {

Pixel anchor_vertex(const ObjectComponent& obj) {
    if (obj.pixels.empty()) throw std::invalid_argument("anchor_vertex: empty object");
    return *std::min_element(obj.pixels.begin(), obj.pixels.end(),
                             [](Pixel a, Pixel b) { return std::pair(a.y, a.x) < std::pair(b.y, b.x); });
}

DistanceField distance_field(const BinaryImage& img, const ObjectComponent& obj, Pixel s) {
    DistanceField df;
    df.object = obj.index;
    df.anchor = s;
    df.width = img.width();
    df.height = img.height();
    df.d.assign(img.pixel_count(), -1);

    constexpr int kPending = -2;
    for (const Pixel p : obj.pixels) df.d[img.index(p)] = kPending;
    if (!img.contains(s) || df.d[img.index(s)] != kPending)
        throw std::invalid_argument("distance_field: anchor (" + std::to_string(s.x) + "," + std::to_string(s.y) +
                                    ") is not a pixel of object " + std::to_string(obj.index));

    const std::array<Pixel, 4> steps{Pixel{0, -1}, Pixel{1, 0}, Pixel{0, 1}, Pixel{-1, 0}};
    std::deque<Pixel> queue{s};
    df.d[img.index(s)] = 0;
    while (!queue.empty()) {
        const Pixel p = queue.front();
        queue.pop_front();
        for (const Pixel st : steps) {
            const Pixel q{p.x + st.x, p.y + st.y};
            if (!img.contains(q) || df.d[img.index(q)] != kPending) continue;
            df.d[img.index(q)] = df.d[img.index(p)] + 1;
            queue.push_back(q);
        }
    }
    for (const Pixel p : obj.pixels)
        if (df.d[img.index(p)] < 0) throw std::invalid_argument("distance_field: object is not 4-connected");

    std::int64_t sx = 0, sy = 0;
    for (const Pixel p : obj.pixels) {
        sx += p.x;
        sy += p.y;
    }
    const auto n = static_cast<std::int64_t>(obj.pixels.size());
    df.ref_x = sx - n * s.x;
    df.ref_y = sy - n * s.y;
    if (df.ref_x == 0 && df.ref_y == 0) df.ref_y = -1;
    return df;
}

std::vector<StableTreeEdge> stable_tree(const PixelMap& pm, const DistanceField& df) {
    std::vector<StableTreeEdge> out;
    const std::array<Pixel, 4> steps{Pixel{0, -1}, Pixel{1, 0}, Pixel{0, 1}, Pixel{-1, 0}};
    const Pixel s = df.anchor;
    for (int y = 0; y < df.height; ++y) {
        for (int x = 0; x < df.width; ++x) {
            const Pixel v{x, y};
            if (!df.contains(v) || v == s) continue;
            const int dv = df.at(v);
            const std::int64_t tx = s.x - v.x, ty = s.y - v.y;  // V -> S
            bool have = false;
            Pixel best;
            std::int64_t best_dot = 0;
            for (const Pixel st : steps) {
                const Pixel w{v.x + st.x, v.y + st.y};
                if (!df.contains(w) || df.at(w) != dv - 1) continue;
                // The steps are unit vectors, so a larger dot product with
                // V->S is a smaller angle at V.
                const std::int64_t dot = tx * st.x + ty * st.y;
                if (!have || dot > best_dot) {
                    have = true;
                    best = w;
                    best_dot = dot;
                } else if (dot == best_dot) {
                    // (V - S) x (V' - V) > 0 is a clockwise turn on screen (y down).
                    const std::int64_t cross = (-tx) * st.y - (-ty) * st.x;
                    if (cross > 0) best = w;
                }
            }
            if (!have) throw ContractViolation("stable_tree: pixel without a closer neighbour");
            out.push_back({pm.edge_between(v, best), v, best});
        }
    }
    return out;
}

EdgeOrderKey edge_order_key(const DistanceField& df, Crack c) {
    c = make_crack(c.a, c.b);
    std::array<Pixel, 2> sides;
    if (c.a.y == c.b.y)
        sides = {Pixel{c.a.x, c.a.y - 1}, Pixel{c.a.x, c.a.y}};
    else
        sides = {Pixel{c.a.x - 1, c.a.y}, Pixel{c.a.x, c.a.y}};
    int f = -1;
    for (const Pixel p : sides)
        if (df.contains(p) && (f < 0 || df.at(p) < f)) f = df.at(p);
    if (f < 0) throw std::invalid_argument("edge_order_key: crack does not bound the object");
    EdgeOrderKey k;
    k.f = f;
    k.cx = static_cast<std::int64_t>(c.a.x + c.b.x) - (2 * df.anchor.x + 1);
    k.cy = static_cast<std::int64_t>(c.a.y + c.b.y) - (2 * df.anchor.y + 1);
    return k;
}

namespace {

// Work in y-up coordinates so that positive cross products are
// counterclockwise on screen.
int half_turn(std::int64_t rx, std::int64_t ry, std::int64_t x, std::int64_t y) {
    const std::int64_t cross = rx * y - ry * x;
    const std::int64_t dot = rx * x + ry * y;
    return (cross > 0 || (cross == 0 && dot > 0)) ? 0 : 1;
}

}  // namespace

std::strong_ordering compare_keys(const EdgeOrderKey& a, const EdgeOrderKey& b, const DistanceField& df) {
    if (auto c = a.f <=> b.f; c != 0) return c;
    const std::int64_t rx = df.ref_x, ry = -df.ref_y;
    const std::int64_t ax = a.cx, ay = -a.cy, bx = b.cx, by = -b.cy;
    const int ha = half_turn(rx, ry, ax, ay);
    const int hb = half_turn(rx, ry, bx, by);
    if (auto c = ha <=> hb; c != 0) return c;
    const std::int64_t cross = ax * by - ay * bx;
    if (cross > 0) return std::strong_ordering::less;
    if (cross < 0) return std::strong_ordering::greater;
    return (ax * ax + ay * ay) <=> (bx * bx + by * by);
}

std::strong_ordering edge_compare(Crack a, Crack b, const DistanceField& df) {
    const auto ka = edge_order_key(df, a);
    const auto kb = edge_order_key(df, b);
    if (auto c = compare_keys(ka, kb, df); c != 0) return c;
    // Only reachable for the same crack.
    return make_crack(a.a, a.b) <=> make_crack(b.a, b.b);
}

EdgeOrder EdgeOrder::by_id(std::size_t edge_count) {
    EdgeOrder o;
    o.rank_.resize(edge_count);
    std::iota(o.rank_.begin(), o.rank_.end(), 0);
    o.object_.assign(edge_count, -1);
    return o;
}

EdgeOrder EdgeOrder::invariant(const BinaryImage& img, const PixelMap& pm,
                               const std::vector<DistanceField>& fields) {
    const std::size_t n = pm.edge_count();
    EdgeOrder o;
    o.object_.assign(n, -1);
    std::vector<int> label(img.pixel_count(), -1);
    for (const auto& df : fields)
        for (std::size_t i = 0; i < df.d.size(); ++i)
            if (df.d[i] >= 0) label[i] = df.object;

    std::vector<EdgeOrderKey> keys(n);
    for (std::size_t e = 0; e < n; ++e) {
        for (int side = 0; side < 2; ++side) {
            const auto p = pm.side_pixel(static_cast<EdgeId>(e), side);
            if (p && label[img.index(*p)] >= 0) o.object_[e] = label[img.index(*p)];
        }
        if (o.object_[e] >= 0) {
            const auto& df = fields[static_cast<std::size_t>(o.object_[e])];
            keys[e] = edge_order_key(df, pm.edge_to_crack(static_cast<EdgeId>(e)));
        }
    }

    std::vector<EdgeId> sorted(n);
    std::iota(sorted.begin(), sorted.end(), 0);
    std::sort(sorted.begin(), sorted.end(), [&](EdgeId a, EdgeId b) {
        const int oa = o.object_[static_cast<std::size_t>(a)];
        const int ob = o.object_[static_cast<std::size_t>(b)];
        // Object edges first, grouped by object; the rest by id.
        if ((oa < 0) != (ob < 0)) return oa >= 0;
        if (oa != ob) return oa < ob;
        if (oa >= 0) {
            const auto c = compare_keys(keys[static_cast<std::size_t>(a)], keys[static_cast<std::size_t>(b)],
                                        fields[static_cast<std::size_t>(oa)]);
            if (c != 0) return c < 0;
        }
        return a < b;
    });
    o.rank_.resize(n);
    for (std::size_t i = 0; i < n; ++i) o.rank_[static_cast<std::size_t>(sorted[i])] = static_cast<std::int64_t>(i);
    return o;
}

}  // namespace cocyc

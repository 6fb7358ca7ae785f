#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cocyc/grid_complex.hpp"
#include "cocyc/image.hpp"
#include "cocyc/types.hpp"

namespace cocyc {

/// Geodesic 4-neighbourhood hop distance from the anchor inside one object.
struct DistanceField {
    int object = -1;
    Pixel anchor;
    int width = 0;
    int height = 0;
    std::vector<int> d;  // per image pixel; -1 outside the object
    // Direction from the anchor to the object's centroid (scaled by the pixel
    // count). Angles around the anchor are measured from it; zero when the
    // anchor is the centroid, in which case straight up is used.
    std::int64_t ref_x = 0;
    std::int64_t ref_y = 0;

    bool contains(Pixel p) const {
        return p.x >= 0 && p.y >= 0 && p.x < width && p.y < height && at(p) >= 0;
    }
    int at(Pixel p) const { return d[static_cast<std::size_t>(p.y) * width + p.x]; }
};

/// Topmost, then leftmost pixel.
Pixel anchor_vertex(const ObjectComponent& obj);

/// Throws std::invalid_argument when s is not an object pixel.
DistanceField distance_field(const BinaryImage& img, const ObjectComponent& obj, Pixel s);

struct StableTreeEdge {
    EdgeId edge = kNone;
    Pixel child;
    Pixel parent;
};

/// Every non-anchor pixel picks one neighbour one step closer to the anchor:
/// the one seen under the smallest angle from the anchor direction, and on a
/// tie the one turning clockwise on screen. Ordered by child in raster order.
std::vector<StableTreeEdge> stable_tree(const PixelMap& pm, const DistanceField& df);

/// Exact sort key of a crack bounding the object. Coordinates are doubled
/// and relative to the anchor pixel centre.
struct EdgeOrderKey {
    int f = 0;
    std::int64_t cx = 0;
    std::int64_t cy = 0;
};

/// Throws std::invalid_argument when no side of the crack is an object pixel.
EdgeOrderKey edge_order_key(const DistanceField& df, Crack c);

/// f, then angle around the anchor counterclockwise on screen starting at
/// the reference direction, then squared distance to the anchor. Distinct
/// cracks never tie.
std::strong_ordering compare_keys(const EdgeOrderKey& a, const EdgeOrderKey& b, const DistanceField& df);

std::strong_ordering edge_compare(Crack a, Crack b, const DistanceField& df);

/// Total order on base edges. Edges bounding an object are ordered by their
/// key within that object; everything else by id.
class EdgeOrder {
public:
    EdgeOrder() = default;
    static EdgeOrder by_id(std::size_t edge_count);
    static EdgeOrder invariant(const BinaryImage& img, const PixelMap& pm,
                               const std::vector<DistanceField>& fields);

    bool less(EdgeId a, EdgeId b) const { return rank(a) < rank(b); }
    std::int64_t rank(EdgeId e) const { return rank_[static_cast<std::size_t>(e)]; }
    /// Object whose boundary or interior the edge belongs to, or -1.
    int object_of(EdgeId e) const { return object_[static_cast<std::size_t>(e)]; }

private:
    std::vector<std::int64_t> rank_;
    std::vector<int> object_;
};

}  // namespace cocyc

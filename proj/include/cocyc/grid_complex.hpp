#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cocyc/image.hpp"
#include "cocyc/level_pair.hpp"
#include "cocyc/types.hpp"

namespace cocyc {

/// Id scheme of the base level.
///
/// Pixel (x, y) is vertex y*W + x; the exterior region is vertex W*H. Cracks
/// are edges: horizontal cracks (x,y)-(x+1,y) come first with id y*W + x, then
/// vertical cracks (x,y)-(x,y+1) with id W*(H+1) + y*(W+1) + x. Dart side 0 of
/// a horizontal crack lies on the pixel above it, side 1 below; for a vertical
/// crack side 0 is left and side 1 right. Sides outside the image belong to the
/// exterior vertex.
class PixelMap {
public:
    PixelMap() = default;
    PixelMap(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t vertex_count() const { return static_cast<std::size_t>(width_) * height_ + 1; }
    std::size_t edge_count() const {
        return static_cast<std::size_t>(width_) * (height_ + 1) + static_cast<std::size_t>(height_) * (width_ + 1);
    }

    VertexId pixel_to_vertex(Pixel p) const;
    VertexId exterior_vertex() const { return width_ * height_; }
    bool is_exterior(VertexId v) const { return v == exterior_vertex(); }
    Pixel vertex_to_pixel(VertexId v) const;

    /// Throws std::out_of_range for a segment that is not a unit crack of the grid.
    EdgeId crack_to_edge(Crack c) const;
    Crack edge_to_crack(EdgeId e) const;

    /// Pixel on dart side 0 / 1 of edge e, or nullopt for the exterior.
    std::optional<Pixel> side_pixel(EdgeId e, int side) const;
    VertexId side_vertex(EdgeId e, int side) const;

    /// The crack shared by two 4-adjacent positions; either may lie outside
    /// the image (but not both).
    EdgeId edge_between(Pixel a, Pixel b) const;

    /// Doubled coordinates of the crack midpoint.
    std::pair<int, int> doubled_center(EdgeId e) const;

private:
    int width_ = 0;
    int height_ = 0;
};

Crack make_crack(Corner a, Corner b);

/// The base level (G_0, dual G_0) of an image.
std::pair<LevelPair, PixelMap> build_base(const BinaryImage& img);

/// A maximal 4-connected set of foreground pixels.
struct ObjectComponent {
    int index = 0;
    std::vector<Pixel> pixels;  // raster order
};

/// Components ordered by the raster position of their first pixel.
std::vector<ObjectComponent> object_components(const BinaryImage& img);

/// Per-pixel component index, -1 for background.
std::vector<int> object_label_map(const BinaryImage& img, const std::vector<ObjectComponent>& objects);

/// Holes of one object from the Euler characteristic of the union of its
/// closed unit squares: 1 - (V - E + F).
int hole_count_oracle(const ObjectComponent& obj);

/// 4-connected components of the complement of one object (other objects
/// count as complement). Components that reach the image border belong to the
/// outside together with the exterior; the rest are the holes, numbered by the
/// raster position of their first pixel.
struct ComplementRegions {
    static constexpr int kObject = -2;
    static constexpr int kOutside = -1;
    int width = 0;
    std::vector<int> region;  // per pixel: kObject, kOutside or hole index
    std::vector<Pixel> hole_seed;
    int hole_count() const { return static_cast<int>(hole_seed.size()); }
    int at(Pixel p) const { return region[static_cast<std::size_t>(p.y) * width + p.x]; }
};

ComplementRegions complement_regions(const BinaryImage& img, const ObjectComponent& obj);

/// Region of a base side position (pixel or outside the image).
int region_of(const ComplementRegions& r, const BinaryImage& img, std::optional<Pixel> p);

}  // namespace cocyc

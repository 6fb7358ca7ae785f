#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cocyc/types.hpp"

namespace cocyc {

/// Two-level raster image. x grows rightward, y downward, origin top-left.
class BinaryImage {
public:
    BinaryImage() = default;
    BinaryImage(int width, int height);

    /// Builds an image from rows of text; '#', '1' and 'X' are foreground,
    /// anything else is background. All rows must have equal length.
    static BinaryImage from_rows(const std::vector<std::string>& rows);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const { return pixels_.size(); }

    bool contains(Pixel p) const { return p.x >= 0 && p.y >= 0 && p.x < width_ && p.y < height_; }
    bool foreground(Pixel p) const { return pixels_[index(p)] != 0; }
    bool foreground(int x, int y) const { return foreground(Pixel{x, y}); }
    void set(Pixel p, bool fg) { pixels_[index(p)] = fg ? 1 : 0; }

    std::size_t index(Pixel p) const {
        return static_cast<std::size_t>(p.y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(p.x);
    }
    Pixel pixel_at(std::size_t index) const {
        return Pixel{static_cast<int>(index % static_cast<std::size_t>(width_)),
                     static_cast<int>(index / static_cast<std::size_t>(width_))};
    }

    /// Quarter turns clockwise on screen: (x, y) -> (H-1-y, x).
    BinaryImage rotated_cw(int quarter_turns) const;

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

/// Coordinates of a pixel after `quarter_turns` clockwise rotations of an
/// image that originally had the given dimensions.
Pixel rotate_pixel_cw(Pixel p, int width, int height, int quarter_turns);
Corner rotate_corner_cw(Corner c, int width, int height, int quarter_turns);
Crack rotate_crack_cw(Crack c, int width, int height, int quarter_turns);

class PbmError : public std::runtime_error {
public:
    explicit PbmError(const std::string& what) : std::runtime_error(what) {}
};

struct PbmLimits {
    int max_width = 4096;
    int max_height = 4096;
};

/// Parses a PBM (P1 ASCII or P4 raw). A set bit / '1' is foreground.
BinaryImage read_pbm(std::istream& in, PbmLimits limits = {});
BinaryImage read_pbm_file(const std::string& path, PbmLimits limits = {});
BinaryImage parse_pbm(std::string_view bytes, PbmLimits limits = {});

void write_pbm_ascii(std::ostream& out, const BinaryImage& img);
void write_pbm_raw(std::ostream& out, const BinaryImage& img);

}  // namespace cocyc

#include "cocyc/image.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace cocyc {

BinaryImage::BinaryImage(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1) throw ContractViolation("BinaryImage: dimensions must be >= 1");
    pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

BinaryImage BinaryImage::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty() || rows.front().empty()) throw ContractViolation("from_rows: empty image");
    BinaryImage img(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()));
    for (int y = 0; y < img.height_; ++y) {
        const auto& row = rows[static_cast<std::size_t>(y)];
        if (static_cast<int>(row.size()) != img.width_) throw ContractViolation("from_rows: ragged rows");
        for (int x = 0; x < img.width_; ++x) {
            const char c = row[static_cast<std::size_t>(x)];
            img.set({x, y}, c == '#' || c == '1' || c == 'X');
        }
    }
    return img;
}

Pixel rotate_pixel_cw(Pixel p, int width, int height, int quarter_turns) {
    int w = width;
    int h = height;
    for (int i = 0; i < ((quarter_turns % 4) + 4) % 4; ++i) {
        p = Pixel{h - 1 - p.y, p.x};
        std::swap(w, h);
    }
    return p;
}

Corner rotate_corner_cw(Corner c, int width, int height, int quarter_turns) {
    int w = width;
    int h = height;
    for (int i = 0; i < ((quarter_turns % 4) + 4) % 4; ++i) {
        c = Corner{h - c.y, c.x};
        std::swap(w, h);
    }
    return c;
}

Crack rotate_crack_cw(Crack c, int width, int height, int quarter_turns) {
    Corner a = rotate_corner_cw(c.a, width, height, quarter_turns);
    Corner b = rotate_corner_cw(c.b, width, height, quarter_turns);
    if (b < a) std::swap(a, b);
    return Crack{a, b};
}

BinaryImage BinaryImage::rotated_cw(int quarter_turns) const {
    const int q = ((quarter_turns % 4) + 4) % 4;
    const bool swap_dims = (q % 2) == 1;
    BinaryImage out(swap_dims ? height_ : width_, swap_dims ? width_ : height_);
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x)
            out.set(rotate_pixel_cw({x, y}, width_, height_, q), foreground(x, y));
    return out;
}

namespace {

class PbmScanner {
public:
    explicit PbmScanner(std::string_view bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    int read_positive_int(const char* what) {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_])))
            throw PbmError(std::string("pbm: expected ") + what);
        long long v = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            v = v * 10 + (bytes_[pos_] - '0');
            if (v > (1LL << 30)) throw PbmError(std::string("pbm: ") + what + " too large");
            ++pos_;
        }
        if (v < 1) throw PbmError(std::string("pbm: ") + what + " must be positive");
        return static_cast<int>(v);
    }

    std::string_view take(std::size_t n) {
        if (bytes_.size() - pos_ < n) throw PbmError("pbm: truncated raster data");
        auto out = bytes_.substr(pos_, n);
        pos_ += n;
        return out;
    }

    std::size_t pos() const { return pos_; }
    void advance(std::size_t n) { pos_ += n; }
    bool at_end() const { return pos_ >= bytes_.size(); }
    char peek() const { return bytes_[pos_]; }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

BinaryImage parse_pbm(std::string_view bytes, PbmLimits limits) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '1' && bytes[1] != '4'))
        throw PbmError("pbm: missing P1/P4 magic");
    const bool ascii = bytes[1] == '1';
    PbmScanner scan(bytes.substr(2));
    const int width = scan.read_positive_int("width");
    const int height = scan.read_positive_int("height");
    if (width > limits.max_width || height > limits.max_height)
        throw PbmError("pbm: image " + std::to_string(width) + "x" + std::to_string(height) +
                       " exceeds limit " + std::to_string(limits.max_width) + "x" +
                       std::to_string(limits.max_height));

    BinaryImage img(width, height);
    if (ascii) {
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                scan.skip_space_and_comments();
                if (scan.at_end()) throw PbmError("pbm: truncated raster data");
                const char c = scan.peek();
                if (c != '0' && c != '1') throw PbmError("pbm: unexpected character in P1 raster");
                img.set({x, y}, c == '1');
                scan.advance(1);
            }
        }
    } else {
        // Exactly one whitespace byte separates the header from the raster.
        if (scan.at_end() || !std::isspace(static_cast<unsigned char>(scan.peek())))
            throw PbmError("pbm: missing separator before P4 raster");
        scan.advance(1);
        const std::size_t row_bytes = (static_cast<std::size_t>(width) + 7) / 8;
        for (int y = 0; y < height; ++y) {
            const auto row = scan.take(row_bytes);
            for (int x = 0; x < width; ++x) {
                const auto byte = static_cast<unsigned char>(row[static_cast<std::size_t>(x) / 8]);
                img.set({x, y}, (byte >> (7 - (x % 8))) & 1U);
            }
        }
    }
    return img;
}

BinaryImage read_pbm(std::istream& in, PbmLimits limits) {
    std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_pbm(bytes, limits);
}

BinaryImage read_pbm_file(const std::string& path, PbmLimits limits) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PbmError("pbm: cannot open '" + path + "'");
    return read_pbm(in, limits);
}

void write_pbm_ascii(std::ostream& out, const BinaryImage& img) {
    out << "P1\n" << img.width() << ' ' << img.height() << '\n';
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            if (x > 0) out << ' ';
            out << (img.foreground(x, y) ? '1' : '0');
        }
        out << '\n';
    }
}

void write_pbm_raw(std::ostream& out, const BinaryImage& img) {
    out << "P4\n" << img.width() << ' ' << img.height() << '\n';
    const std::size_t row_bytes = (static_cast<std::size_t>(img.width()) + 7) / 8;
    std::string row(row_bytes, '\0');
    for (int y = 0; y < img.height(); ++y) {
        std::fill(row.begin(), row.end(), '\0');
        for (int x = 0; x < img.width(); ++x)
            if (img.foreground(x, y))
                row[static_cast<std::size_t>(x) / 8] = static_cast<char>(
                    static_cast<unsigned char>(row[static_cast<std::size_t>(x) / 8]) | (0x80U >> (x % 8)));
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

}  // namespace cocyc

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cocyc {

// Ids are global and stable across pyramid levels: a surviving vertex keeps
// the id of its base pixel and a surviving edge keeps the id of its base crack.
using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using DartId = std::int32_t;
using FaceId = std::int32_t;  // dual vertex; canonical = smallest dart of its orbit

inline constexpr std::int32_t kNone = -1;

// Every edge owns two darts, 2e and 2e+1, one per incidence side.
constexpr DartId dart_of(EdgeId e, int side) { return 2 * e + side; }
constexpr EdgeId edge_of(DartId d) { return d >> 1; }
constexpr DartId opposite(DartId d) { return d ^ 1; }

enum class Label : std::uint8_t { Background = 0, Foreground = 1 };

struct Pixel {
    int x = 0;
    int y = 0;
    auto operator<=>(const Pixel&) const = default;
};

// Lattice point on the pixel-corner grid.
struct Corner {
    int x = 0;
    int y = 0;
    auto operator<=>(const Corner&) const = default;
};

// Unit segment between two lattice corners; `a` is the lexicographically
// smaller corner.
struct Crack {
    Corner a;
    Corner b;
    auto operator<=>(const Crack&) const = default;
};

// Raised when a documented precondition is violated by the caller.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

enum class Mode { Fast, Invariant };

inline const char* to_string(Mode m) { return m == Mode::Fast ? "fast" : "invariant"; }

}  // namespace cocyc

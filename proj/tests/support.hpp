#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cocyc/image.hpp"

namespace cocyc::testing {

// Raw generator output is compared against a threshold so that the corpus is
// identical across standard libraries.
inline BinaryImage random_image(int width, int height, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto threshold = static_cast<std::uint64_t>(density * 18446744073709551615.0);
    BinaryImage img(width, height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) img.set({x, y}, rng() < threshold);
    return img;
}

inline BinaryImage ring3() { return BinaryImage::from_rows({"###", "#.#", "###"}); }

inline BinaryImage frame5x3() { return BinaryImage::from_rows({"#####", "#.#.#", "#####"}); }

// Window with four panes plus a separate solid blob.
inline BinaryImage window() {
    return BinaryImage::from_rows({
        ".........",
        ".#######.",
        ".#..#..#.",
        ".#..#..#.",
        ".#######.",
        ".#..#..#.",
        ".#######.",
        ".........",
        "..##.....",
    });
}

}  // namespace cocyc::testing

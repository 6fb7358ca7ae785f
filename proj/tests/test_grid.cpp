#include <set>

#include "cocyc/grid_complex.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cocyc;

TEST_CASE("base level of a 1x1 image") {
    auto [level, pm] = build_base(BinaryImage(1, 1));
    CHECK(level.primal_vertices().size() == 2);
    CHECK(level.primal_edges().size() == 4);
    CHECK(level.dual_vertices().size() == 4);
    CHECK(level.dual_edges().size() == 4);
    CHECK(euler_check(level));
}

TEST_CASE("base level of a 2x1 image") {
    auto [level, pm] = build_base(BinaryImage(2, 1));
    CHECK(level.primal_vertices().size() == 3);
    CHECK(level.primal_edges().size() == 7);
    CHECK(level.dual_vertices().size() == 6);
    int interior = 0;
    for (EdgeId e : level.primal_edges()) {
        auto [a, b] = level.primal_endpoints(e);
        if (!pm.is_exterior(a) && !pm.is_exterior(b)) ++interior;
    }
    CHECK(interior == 1);
    CHECK(euler_check(level));
}

TEST_CASE("lattice counts and corner faces for W x H") {
    for (auto [w, h] : {std::pair{3, 5}, std::pair{7, 2}, std::pair{1, 9}}) {
        auto [level, pm] = build_base(BinaryImage(w, h));
        CHECK(level.dual_vertices().size() == static_cast<std::size_t>((w + 1) * (h + 1)));
        CHECK(level.dual_edges().size() == static_cast<std::size_t>(w * (h + 1) + h * (w + 1)));
        // Every dual vertex is a lattice corner: all cracks of its orbit share it.
        std::set<Corner> seen;
        for (FaceId f : level.dual_vertices()) {
            std::set<Corner> common;
            bool first = true;
            for (DartId d : level.darts_around_face(f)) {
                const Crack c = pm.edge_to_crack(edge_of(d));
                std::set<Corner> ends{c.a, c.b};
                if (first) {
                    common = ends;
                    first = false;
                } else {
                    std::set<Corner> keep;
                    for (auto x : common)
                        if (ends.count(x)) keep.insert(x);
                    common = keep;
                }
            }
            REQUIRE(common.size() == 1);
            CHECK(seen.insert(*common.begin()).second);
        }
    }
}

TEST_CASE("base Euler check on random images") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int w = 1 + static_cast<int>(seed * 5 % 64);
        const int h = 1 + static_cast<int>(seed * 11 % 64);
        auto [level, pm] = build_base(testing::random_image(w, h, 0.5, seed));
        CHECK(euler_check(level));
    }
    auto [level, pm] = build_base(BinaryImage(64, 64));
    CHECK(euler_check(level));
}

TEST_CASE("broken bijection fails the Euler check") {
    auto [level, pm] = build_base(BinaryImage(3, 3));
    CHECK_FALSE(euler_check(level.without_dual_edge(level.primal_edges()[4])));
}

TEST_CASE("crack and edge maps are mutually inverse") {
    PixelMap pm(5, 4);
    for (std::size_t e = 0; e < pm.edge_count(); ++e) {
        const Crack c = pm.edge_to_crack(static_cast<EdgeId>(e));
        CHECK(pm.crack_to_edge(c) == static_cast<EdgeId>(e));
        CHECK(pm.crack_to_edge(Crack{c.b, c.a}) == static_cast<EdgeId>(e));
    }
    CHECK_THROWS_AS(pm.crack_to_edge(Crack{{0, 0}, {1, 1}}), std::out_of_range);
    CHECK_THROWS_AS(pm.crack_to_edge(Crack{{5, 0}, {6, 0}}), std::out_of_range);
    CHECK(pm.edge_between({1, 1}, {2, 1}) == pm.crack_to_edge(Crack{{2, 1}, {2, 2}}));
    CHECK(pm.edge_between({1, 1}, {1, 0}) == pm.crack_to_edge(Crack{{1, 1}, {2, 1}}));
}

TEST_CASE("object components") {
    CHECK(object_components(BinaryImage(4, 4)).empty());
    CHECK(object_components(BinaryImage::from_rows({"#.#"})).size() == 2);
    const auto ring = object_components(testing::ring3());
    REQUIRE(ring.size() == 1);
    CHECK(ring[0].pixels.size() == 8);
    // Diagonal neighbours are not connected.
    CHECK(object_components(BinaryImage::from_rows({"#.", ".#"})).size() == 2);
    const auto two = object_components(BinaryImage::from_rows({"..#", "#..", "#.#"}));
    REQUIRE(two.size() == 3);
    CHECK(two[0].pixels.front() == Pixel{2, 0});
    CHECK(two[1].pixels.front() == Pixel{0, 1});
}

TEST_CASE("hole count from the Euler characteristic") {
    CHECK(hole_count_oracle(object_components(BinaryImage::from_rows({"##", "##"}))[0]) == 0);
    CHECK(hole_count_oracle(object_components(testing::ring3())[0]) == 1);
    CHECK(hole_count_oracle(object_components(testing::frame5x3())[0]) == 2);
}

TEST_CASE("hole count agrees with complement flood fill") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto img = testing::random_image(20, 20, 0.55, seed);
        for (const auto& obj : object_components(img))
            CHECK(hole_count_oracle(obj) == complement_regions(img, obj).hole_count());
    }
}

TEST_CASE("complement regions number holes in raster order") {
    const auto img = testing::frame5x3();
    const auto r = complement_regions(img, object_components(img)[0]);
    CHECK(r.hole_count() == 2);
    CHECK(r.at({1, 1}) == 0);
    CHECK(r.at({3, 1}) == 1);
    CHECK(r.at({0, 0}) == ComplementRegions::kObject);
}

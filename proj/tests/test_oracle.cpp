#include <algorithm>

#include "cocyc/downproject.hpp"
#include "cocyc/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cocyc;

namespace {

std::vector<EdgeId> pipeline_cocycle(const Pyramid& p, int object, int hole) {
    const auto h = build_homology_level(p, object);
    return down_project_to_base(p, cocycle_basis(h).at(static_cast<std::size_t>(hole)), h).edges;
}

std::vector<EdgeId> sym_diff(std::vector<EdgeId> a, std::vector<EdgeId> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<EdgeId> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

TEST_CASE("boundary complex sizes") {
    const auto single = build_pyramid(BinaryImage::from_rows({"#"}), {});
    const auto k1 = boundary_complex(single, 0, 0);
    CHECK(k1.cells2.size() == 1);
    CHECK(k1.cells1.size() == 4);
    CHECK(k1.cells0.size() == 4);
    CHECK(gf2::multiply(k1.d1, k1.d2) == gf2::Matrix(4, 1));

    const auto ring = build_pyramid(testing::ring3(), {Mode::Fast, 1, {}});
    const auto kr = boundary_complex(ring, 0, 0);
    CHECK(kr.cells2.size() == 8);
    CHECK(kr.cells1.size() == 24);
    CHECK(kr.cells0.size() == 16);
    CHECK(gf2::multiply(kr.d1, kr.d2) == gf2::Matrix(16, 8));

    // At the top the ring is one face bounded by the outer and hole cycles.
    const auto top = boundary_complex(ring, 0, ring.height());
    CHECK(top.cells2.size() == 1);
    CHECK(betti(top) == std::pair<std::size_t, std::size_t>{1, 1});
}

TEST_CASE("boundary of boundary vanishes on every level") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto p = build_pyramid(testing::random_image(14, 14, 0.6, seed), {Mode::Fast, seed, {}});
        for (int k = 0; k <= p.height(); ++k)
            for (std::size_t o = 0; o < p.objects().size(); ++o) {
                const auto c = boundary_complex(p, static_cast<int>(o), k);
                CHECK(gf2::multiply(c.d1, c.d2) == gf2::Matrix(c.d1.rows(), c.d2.cols()));
            }
    }
}

TEST_CASE("is_cocycle") {
    const auto block = build_pyramid(BinaryImage::from_rows({"##", "##"}), {});
    const auto k = boundary_complex(block, 0, 0);
    CHECK(is_cocycle(k, {}));
    const EdgeId interior = block.pixel_map().edge_between({0, 0}, {1, 0});
    CHECK_FALSE(is_cocycle(k, {interior}));
    CHECK_THROWS_AS(is_cocycle(k, {static_cast<EdgeId>(block.pixel_map().edge_count() + 5)}), std::out_of_range);

    const auto ring = build_pyramid(testing::ring3(), {Mode::Invariant, 0, {}});
    CHECK(is_cocycle(boundary_complex(ring, 0, 0), pipeline_cocycle(ring, 0, 0)));
}

TEST_CASE("cohomologous cocycles") {
    const auto ring = build_pyramid(testing::ring3(), {Mode::Fast, 2, {}});
    const auto k = boundary_complex(ring, 0, 0);
    const auto c = pipeline_cocycle(ring, 0, 0);
    CHECK(are_cohomologous(k, c, c));
    // Adding the coboundary of a single dual vertex (all edges at one corner).
    for (std::size_t v = 0; v < k.cells0.size(); ++v) {
        std::vector<EdgeId> star;
        for (std::size_t j = 0; j < k.cells1.size(); ++j)
            if (k.d1.get(v, j)) star.push_back(k.cells1[j]);
        CHECK(are_cohomologous(k, c, sym_diff(c, star)));
    }
    CHECK_FALSE(are_cohomologous(k, c, {}));
    CHECK_THROWS_AS(are_cohomologous(k, c, {ring.pixel_map().edge_between({0, 0}, {1, 0})}), std::invalid_argument);

    const auto frame = build_pyramid(testing::frame5x3(), {Mode::Fast, 2, {}});
    const auto kf = boundary_complex(frame, 0, 0);
    CHECK_FALSE(are_cohomologous(kf, pipeline_cocycle(frame, 0, 0), pipeline_cocycle(frame, 0, 1)));
}

TEST_CASE("hole cycles") {
    const auto ring = build_pyramid(testing::ring3(), {});
    const auto g = hole_cycle(ring, 0, 0);
    CHECK(g.size() == 4);
    CHECK(is_cycle(boundary_complex(ring, 0, 0), g));

    const auto wide = build_pyramid(BinaryImage::from_rows({"####", "#..#", "####"}), {});
    const auto g2 = hole_cycle(wide, 0, 0);
    CHECK(g2.size() == 6);
    CHECK(is_cycle(boundary_complex(wide, 0, 0), g2));
}

TEST_CASE("blocking parity") {
    CHECK(blocking_parity({1, 2}, {3, 4}) == 0);
    CHECK(blocking_parity({1, 2, 3}, {3, 2, 9}) == 0);
    const auto ring = build_pyramid(testing::ring3(), {});
    CHECK(blocking_parity(pipeline_cocycle(ring, 0, 0), hole_cycle(ring, 0, 0)) == 1);
    const auto frame = build_pyramid(testing::frame5x3(), {});
    CHECK(blocking_parity(pipeline_cocycle(frame, 0, 0), hole_cycle(frame, 0, 1)) == 0);
    CHECK(blocking_parity(pipeline_cocycle(frame, 0, 1), hole_cycle(frame, 0, 1)) == 1);
}

TEST_CASE("betti numbers") {
    const auto block = build_pyramid(BinaryImage::from_rows({"##", "##"}), {});
    CHECK(betti(boundary_complex(block, 0, 0)) == std::pair<std::size_t, std::size_t>{1, 0});
    const auto ring = build_pyramid(testing::ring3(), {});
    CHECK(betti(boundary_complex(ring, 0, 0)) == std::pair<std::size_t, std::size_t>{1, 1});
    const auto frame = build_pyramid(testing::frame5x3(), {});
    CHECK(betti(boundary_complex(frame, 0, 0)) == std::pair<std::size_t, std::size_t>{1, 2});
}

TEST_CASE("basis independence") {
    const auto block = build_pyramid(BinaryImage::from_rows({"##", "##"}), {});
    CHECK(basis_independent(boundary_complex(block, 0, 0), {}));
    const auto ring = build_pyramid(testing::ring3(), {});
    const auto k = boundary_complex(ring, 0, 0);
    const auto c = pipeline_cocycle(ring, 0, 0);
    CHECK(basis_independent(k, {c}));
    CHECK_FALSE(basis_independent(k, {c, c}));
}

TEST_CASE("cocycles from region adjacency paths") {
    const auto ring = build_pyramid(testing::ring3(), {Mode::Invariant, 0, {}});
    const auto& pm = ring.pixel_map();
    const auto k = boundary_complex(ring, 0, 0);
    const auto a = rag_path_cocycle(ring, 0, 0, {pm.pixel_to_vertex({0, 1})});
    CHECK(a.size() == 2);
    CHECK(is_cocycle(k, a));
    const auto b = rag_path_cocycle(ring, 0, 0, {pm.pixel_to_vertex({1, 2})});
    CHECK(are_cohomologous(k, a, b));
    CHECK(are_cohomologous(k, a, pipeline_cocycle(ring, 0, 0)));

    CHECK_THROWS_AS(rag_path_cocycle(ring, 0, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(rag_path_cocycle(ring, 0, 0, {pm.pixel_to_vertex({1, 1})}), std::invalid_argument);
    CHECK_THROWS_AS(rag_path_cocycle(ring, 0, 0, {pm.pixel_to_vertex({0, 0}), pm.pixel_to_vertex({0, 0})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(rag_path_cocycle(ring, 0, 1, {pm.pixel_to_vertex({0, 1})}), std::invalid_argument);
}

TEST_CASE("paths of a multi-hole object give distinct classes") {
    const auto p = build_pyramid(testing::window(), {Mode::Fast, 4, {}});
    const auto k = boundary_complex(p, 0, 0);
    const int holes = build_homology_level(p, 0).hole_count();
    REQUIRE(holes == 4);
    std::vector<std::vector<EdgeId>> per_hole;
    for (int i = 0; i < holes; ++i) {
        const auto path = random_rag_path(p, 0, i, 100 + static_cast<std::uint64_t>(i));
        per_hole.push_back(rag_path_cocycle(p, 0, i, path));
        CHECK(is_cocycle(k, per_hole.back()));
        CHECK(are_cohomologous(k, per_hole.back(), pipeline_cocycle(p, 0, i)));
    }
    for (int i = 0; i < holes; ++i)
        for (int j = i + 1; j < holes; ++j)
            CHECK_FALSE(are_cohomologous(k, per_hole[static_cast<std::size_t>(i)], per_hole[static_cast<std::size_t>(j)]));
}

TEST_CASE("random homologous cycles stay cycles") {
    const auto p = build_pyramid(testing::frame5x3(), {});
    const auto k = boundary_complex(p, 0, 0);
    const auto g = hole_cycle(p, 0, 0);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto g2 = random_homologous_cycle(k, g, s);
        CHECK(is_cycle(k, g2));
        CHECK(blocking_parity(pipeline_cocycle(p, 0, 0), g2) == 1);
        CHECK(blocking_parity(pipeline_cocycle(p, 0, 1), g2) == 0);
    }
}

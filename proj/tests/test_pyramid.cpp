#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "cocyc/pyramid.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cocyc;

namespace {

VertexId top_of_pixel(const Pyramid& p, Pixel px) { return p.top_vertex_of(p.pixel_map().pixel_to_vertex(px)); }

SurvivorLess by_id() {
    return [](EdgeId a, EdgeId b) { return a < b; };
}

}  // namespace

TEST_CASE("kernel selection on tiny levels") {
    SUBCASE("no same-label edge") {
        const auto img = BinaryImage::from_rows({"#"});
        auto [base, pm] = build_base(img);
        std::vector<Label> labels{Label::Foreground, Label::Background};
        CHECK(select_kernels(0, base, labels, fast_policy(pm.edge_count(), 1)).empty());
    }
    SUBCASE("2x1 foreground") {
        const auto img = BinaryImage::from_rows({"##"});
        auto [base, pm] = build_base(img);
        std::vector<Label> labels{Label::Foreground, Label::Foreground, Label::Background};
        const auto kernels = select_kernels(0, base, labels, fast_policy(pm.edge_count(), 5));
        REQUIRE(kernels.size() == 1);
        REQUIRE(kernels[0].tree_edges.size() == 1);
        CHECK(kernels[0].tree_edges[0].edge == pm.edge_between({0, 0}, {1, 0}));
    }
}

TEST_CASE("kernels are vertex-disjoint same-label trees") {
    const auto img = testing::random_image(12, 9, 0.5, 4);
    auto [base, pm] = build_base(img);
    std::vector<Label> labels(pm.vertex_count(), Label::Background);
    for (std::size_t i = 0; i < img.pixel_count(); ++i)
        if (img.foreground(img.pixel_at(i))) labels[i] = Label::Foreground;
    const auto kernels = select_kernels(0, base, labels, fast_policy(pm.edge_count(), 9));
    std::set<VertexId> used;
    for (const auto& k : kernels) {
        const auto vs = k.vertices();
        CHECK(vs.size() == k.tree_edges.size() + 1);
        for (VertexId v : vs) {
            CHECK(used.insert(v).second);
            CHECK(labels[static_cast<std::size_t>(v)] == labels[static_cast<std::size_t>(k.root)]);
        }
        // Leaves first: a vertex's outgoing edge comes after all edges into it.
        std::set<VertexId> done;
        for (const auto& ke : k.tree_edges) {
            CHECK(done.count(ke.parent) == 0);
            done.insert(ke.child);
        }
    }
}

TEST_CASE("contracting a self-loop is a contract violation") {
    auto [base, pm] = build_base(testing::ring3());
    std::vector<Label> labels(pm.vertex_count(), Label::Foreground);
    // Merge everything, then try to contract one of the resulting loops.
    const auto p = build_pyramid(BinaryImage(2, 2), {});
    const LevelPair& top = p.top();
    REQUIRE(top.primal_vertices().size() == 1);
    if (!top.primal_edges().empty()) {
        const EdgeId e = top.primal_edges().front();
        ContractionKernel bad{0, top.primal_vertices().front(), {{e, top.primal_vertices().front(), top.primal_vertices().front()}}};
        CHECK_THROWS_AS(contract_and_simplify(0, top, {bad}, p.labels(), by_id()), ContractViolation);
    }
    // Directly on the base: a kernel edge given with the wrong endpoints.
    ContractionKernel wrong{0, 0, {{pm.edge_between({0, 0}, {1, 0}), 0, 4}}};
    CHECK_THROWS_AS(contract_and_simplify(0, base, {wrong}, labels, by_id()), ContractViolation);
}

TEST_CASE("simplification without kernels is a fixed point") {
    const auto p = build_pyramid(testing::ring3(), {Mode::Fast, 3, {}});
    const LevelPair& top = p.top();
    auto [again, step] = contract_and_simplify(p.height(), top, {}, p.labels(), by_id());
    CHECK(step.removals.empty());
    CHECK(again.primal_edges() == top.primal_edges());
    CHECK(euler_check(again));
}

TEST_CASE("2x2 block collapses to one object vertex") {
    const auto img = BinaryImage::from_rows({"....", ".##.", ".##.", "...."});
    const auto p = build_pyramid(img, {Mode::Fast, 1, {}});
    const VertexId obj = top_of_pixel(p, {1, 1});
    CHECK(obj == top_of_pixel(p, {2, 2}));
    CHECK(p.top().primal_vertices().size() == 2);
    CHECK(eck(p, obj).size() == 3);
    // A disk next to one background region: a single boundary edge remains.
    CHECK(p.top().primal_edges().size() == 1);
    CHECK(euler_check(p.top()));
}

TEST_CASE("pending dual edge is removed") {
    // The background pixel merges with the exterior; the pixel pair of the
    // column leaves a dual vertex of degree one.
    const auto img = BinaryImage::from_rows({"#", "."});
    auto [base, pm] = build_base(img);
    std::vector<Label> labels{Label::Foreground, Label::Background, Label::Background};
    const EdgeId bottom = pm.crack_to_edge(Crack{{0, 2}, {1, 2}});
    const auto kernels = kernels_from_forest(0, base, std::vector<EdgeId>{bottom});
    auto [next, step] = contract_and_simplify(0, base, kernels, labels, by_id());
    CHECK(euler_check(next));
    const bool pending = std::any_of(step.removals.begin(), step.removals.end(),
                                     [](const Removal& r) { return r.kind == RemovalKind::PendingTree; });
    CHECK(pending);
    // Both remaining faces are bounded by more than two edges or the level is minimal.
    CHECK(next.primal_vertices().size() == 2);
}

TEST_CASE("top level regions") {
    SUBCASE("all background") {
        const auto p = build_pyramid(BinaryImage(5, 4), {Mode::Fast, 0, {}});
        CHECK(p.top().primal_vertices().size() == 1);
        CHECK(euler_check(p.top()));
    }
    SUBCASE("ring") {
        const auto p = build_pyramid(testing::ring3(), {Mode::Fast, 2, {}});
        CHECK(p.top().primal_vertices().size() == 3);
        const VertexId ring = top_of_pixel(p, {0, 0});
        const auto field = p.receptive_field(ring);
        CHECK(field.size() == 8);
        const auto tree = eck(p, ring);
        CHECK(tree.size() == 7);
        for (EdgeId e : tree) {
            for (int side = 0; side < 2; ++side) {
                const auto px = p.pixel_map().side_pixel(e, side);
                REQUIRE(px);
                CHECK(p.image().foreground(*px));
            }
        }
        VertexId gone = 0;
        while (p.top().has_vertex(gone)) ++gone;
        CHECK_THROWS_AS(eck(p, gone), std::out_of_range);
    }
    SUBCASE("single unmerged pixel") {
        const auto p = build_pyramid(BinaryImage::from_rows({"...", ".#.", "..."}), {Mode::Fast, 0, {}});
        CHECK(eck(p, top_of_pixel(p, {1, 1})).empty());
    }
}

TEST_CASE("pyramid invariants on random images") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto img = testing::random_image(16, 16, 0.5, seed);
        for (Mode mode : {Mode::Fast, Mode::Invariant}) {
            const auto p = build_pyramid(img, {mode, seed, {}});
            for (int k = 0; k <= p.height(); ++k) CHECK(euler_check(p.level(k)));
            for (int k = 1; k <= p.height(); ++k)
                CHECK(p.level(k).primal_edges().size() < p.level(k - 1).primal_edges().size());
            // No same-label contraction is left at the top.
            for (EdgeId e : p.top().primal_edges()) {
                auto [a, b] = p.top().primal_endpoints(e);
                CHECK((a == b || p.label(a) != p.label(b)));
            }
            // Receptive fields partition the base vertices; ECK spans each.
            std::size_t covered = 0;
            for (VertexId v : p.top().primal_vertices()) {
                const auto field = p.receptive_field(v);
                covered += field.size();
                CHECK(eck(p, v).size() + 1 == field.size());
            }
            CHECK(covered == p.pixel_map().vertex_count());
        }
    }
}

TEST_CASE("replay determinism") {
    const auto img = testing::random_image(20, 14, 0.5, 77);
    for (Mode mode : {Mode::Fast, Mode::Invariant}) {
        const auto a = build_pyramid(img, {mode, 5, {}});
        const auto b = build_pyramid(img, {mode, 5, {}});
        REQUIRE(a.height() == b.height());
        for (int k = 0; k <= a.height(); ++k) {
            std::ostringstream da, db;
            write_level_dump(da, a, k);
            write_level_dump(db, b, k);
            CHECK(da.str() == db.str());
        }
    }
}

TEST_CASE("operation log replays to the stored levels") {
    const auto img = testing::random_image(10, 10, 0.5, 13);
    const auto p = build_pyramid(img, {Mode::Fast, 4, {}});
    for (int k = 0; k < p.height(); ++k) {
        // Re-running one step from the logged kernels gives the same level.
        const LevelStep& step = p.log().step(k);
        auto [next, replay] = contract_and_simplify(k, p.level(k), step.kernels, p.labels(),
                                                    [](EdgeId a, EdgeId b) { return a < b; });
        CHECK(next.primal_edges() == p.level(k + 1).primal_edges());
        CHECK(next.primal_vertices() == p.level(k + 1).primal_vertices());
        // Every level-k+1 edge has its pre-image at level k.
        for (EdgeId e : p.level(k + 1).primal_edges()) CHECK(p.level(k).has_edge(p.log().preimage(k + 1, e)));
        // Every level-k+1 vertex has a nonempty reduction window.
        for (VertexId v : p.level(k + 1).primal_vertices()) CHECK(p.level(k).has_vertex(v));
    }
}

TEST_CASE("boundary graphs shrink monotonically") {
    const auto img = testing::random_image(32, 32, 0.5, 1);
    const auto p = build_pyramid(img, {Mode::Fast, 1, {}});
    for (int k = 1; k <= p.height(); ++k) CHECK(p.level(k).dual_edges().size() < p.level(k - 1).dual_edges().size());
}

TEST_CASE("height stays logarithmic") {
    const auto img = testing::random_image(64, 64, 0.5, 3);
    const auto p = build_pyramid(img, {Mode::Fast, 3, {}});
    CHECK(p.height() <= 4 * 12);
}

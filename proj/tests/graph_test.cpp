#include "oracles.hpp"
#include "shapes.hpp"

#include <gtest/gtest.h>

using namespace pglab;

namespace
{

auto universe(int max_n) -> std::vector<PlaneGraph>
{
    std::vector<PlaneGraph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto level = enumerate_small(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

auto code_of(const std::function<void()> & f) -> std::optional<Errc>
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace

TEST(PlaneGraph, TriangleHasTwoFaces)
{
    auto g = PlaneGraph::from_rotation({ { 1, 2 }, { 2, 0 }, { 0, 1 } }, Dart{ 0, 1 });
    EXPECT_EQ(g.edge_count(), 3);
    ASSERT_EQ(g.face_count(), 2);
    for (const auto & f : g.faces())
        EXPECT_EQ(f.degree, 3);
}

TEST(PlaneGraph, CubeHasSixQuadrilaterals)
{
    auto g = shapes::plane(shapes::cube());
    ASSERT_EQ(g.face_count(), 6);
    for (const auto & f : g.faces()) {
        EXPECT_EQ(f.degree, 4);
        EXPECT_TRUE(f.is_cycle());
    }
}

TEST(PlaneGraph, RejectsAsymmetricAdjacency)
{
    auto code = code_of([] { PlaneGraph::from_rotation({ { 1, 2 }, { 0 }, { 0, 1 } }, Dart{ 0, 1 }); });
    EXPECT_EQ(code, Errc::not_simple);
}

TEST(PlaneGraph, RejectsLoopsAndRepeats)
{
    EXPECT_EQ(code_of([] { PlaneGraph::from_rotation({ { 0, 1 }, { 0 } }, Dart{ 0, 1 }); }), Errc::not_simple);
    EXPECT_EQ(code_of([] { PlaneGraph::from_rotation({ { 1, 1 }, { 0 } }, Dart{ 0, 1 }); }), Errc::not_simple);
    EXPECT_EQ(code_of([] { PlaneGraph::from_rotation({ { 5 }, { 0 } }, Dart{ 0, 1 }); }), Errc::not_simple);
}

TEST(PlaneGraph, RejectsDisconnected)
{
    EXPECT_EQ(code_of([] { PlaneGraph::from_rotation({ { 1 }, { 0 }, { 3 }, { 2 } }, Dart{ 0, 1 }); }), Errc::disconnected);
}

TEST(PlaneGraph, RejectsBadOuterEdge)
{
    EXPECT_EQ(code_of([] { PlaneGraph::from_rotation({ { 1 }, { 0, 2 }, { 1 } }, Dart{ 0, 2 }); }), Errc::bad_outer_edge);
}

// K4 has 16 rotation systems; the toroidal ones must fail the Euler check.
TEST(PlaneGraph, EulerSeparatesK4Rotations)
{
    int planar = 0, rejected = 0;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<std::vector<int>> rot(4);
        for (int v = 0; v < 4; ++v) {
            for (int w = 0; w < 4; ++w)
                if (w != v)
                    rot[v].push_back(w);
            if ((mask >> v) & 1)
                std::swap(rot[v][1], rot[v][2]);
        }
        auto code = code_of([&] { PlaneGraph::from_rotation(rot, Dart{ 0, 1 }); });
        if (! code)
            ++planar;
        else if (*code == Errc::euler_violation)
            ++rejected;
    }
    EXPECT_EQ(planar, 2);
    EXPECT_EQ(rejected, 14);
}

TEST(PlaneGraph, SingleVertex)
{
    auto g = PlaneGraph::from_rotation({ {} }, Dart{});
    EXPECT_EQ(g.face_count(), 1);
    EXPECT_TRUE(g.outer_face().is_outer);
}

TEST(PlaneGraph, EulerAndDartInvariantsOnUniverse)
{
    for (const auto & g : universe(7)) {
        EXPECT_EQ(g.vertex_count() - g.edge_count() + g.face_count(), 2);
        int degree_sum = 0, outer = 0;
        for (const auto & f : g.faces()) {
            degree_sum += f.degree;
            outer += f.is_outer;
        }
        EXPECT_EQ(degree_sum, 2 * g.edge_count());
        EXPECT_EQ(outer, 1);
        // each dart lies on exactly one boundary walk
        std::map<std::pair<int, int>, int> darts;
        for (const auto & f : g.faces())
            for (std::size_t i = 0; i < f.boundary.size() && f.degree > 0; ++i)
                ++darts[{ f.boundary[i], f.boundary[(i + 1) % f.boundary.size()] }];
        EXPECT_EQ(static_cast<int>(darts.size()), 2 * g.edge_count());
        for (auto [dart, count] : darts) {
            EXPECT_EQ(count, 1);
            EXPECT_TRUE(g.adjacent(dart.first, dart.second));
        }
    }
}

TEST(PlaneGraph, OuterFaceFollowsDart)
{
    auto g = shapes::plane(shapes::complete(4));
    for (const auto & f : g.faces()) {
        auto h = g.with_outer_face(f.id);
        EXPECT_EQ(h.outer_face().vertex_set(), f.vertex_set());
        EXPECT_EQ(h.outer_face_id(), h.face_of_dart(h.outer_edge().from, h.outer_edge().to));
    }
}

TEST(Cycles, SevenCycle)
{
    auto c = cycles_up_to(shapes::cycle(7), 7);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].length(), 7);
    EXPECT_EQ(c[0].vertices, (std::vector<int>{ 0, 1, 2, 3, 4, 5, 6 }));
}

TEST(Cycles, K4AndCubeCounts)
{
    auto count = [](const SimpleGraph & g, int len) { return cycles_of_length(g, len).size(); };
    auto k4 = shapes::complete(4);
    EXPECT_EQ(count(k4, 3), 4u);
    EXPECT_EQ(count(k4, 4), 3u);
    EXPECT_EQ(count(k4, 5), 0u);
    auto cube = shapes::cube();
    EXPECT_EQ(count(cube, 3), 0u);
    EXPECT_EQ(count(cube, 4), 6u);
    EXPECT_EQ(count(cube, 5), 0u);
}

TEST(Cycles, CanonicalForm)
{
    EXPECT_EQ(canonical_cycle({ 3, 1, 2 }).vertices, (std::vector<int>{ 1, 2, 3 }));
    EXPECT_EQ(canonical_cycle({ 4, 2, 0, 1 }).vertices, (std::vector<int>{ 0, 1, 4, 2 }));
}

TEST(Cycles, AgreeWithPathOracle)
{
    auto graphs = universe(7);
    auto eight = enumerate_small(8);
    for (std::size_t i = 0; i < eight.size(); i += 7)
        graphs.push_back(eight[i]);
    for (const auto & g : graphs) {
        std::set<std::vector<int>> lib;
        for (const auto & c : cycles_up_to(g, 8))
            lib.insert(c.vertices);
        ASSERT_EQ(lib, oracle::cycles(g, 8)) << emit_rotlist(g);
    }
}

TEST(CycleSides, FacialCyclesDoNotSeparate)
{
    auto g = shapes::plane(shapes::complete(4));
    for (const auto & f : g.faces()) {
        auto sides = cycle_sides(g, Cycle{ f.boundary });
        EXPECT_FALSE(sides.is_separating());
        EXPECT_EQ(sides.interior.size() + sides.exterior.size(), 1u);
        if (f.is_outer)
            EXPECT_EQ(sides.interior.size(), 1u);
        else
            EXPECT_EQ(sides.exterior.size(), 1u);
    }
}

TEST(CycleSides, WheelRimHoldsHub)
{
    // hub 0 inside the rim 1-2-3-4
    auto w = shapes::plane(shapes::wheel(4));
    auto g = shapes::rooted(w, { 1, 2, 3, 4 });
    auto sides = cycle_sides(g, Cycle{ { 1, 2, 3, 4 } });
    EXPECT_EQ(sides.interior, std::vector<int>{ 0 });
    EXPECT_TRUE(sides.exterior.empty());

    // with a vertex hung outside the rim the rim separates
    auto h = PlaneGraph::from_rotation({ { 1, 2, 3, 4 }, { 5, 2, 0, 4 }, { 3, 0, 1 }, { 0, 2, 4 }, { 1, 0, 3 }, { 1 } }, Dart{ 1, 5 });
    for (const auto & f : h.faces())
        if (f.contains(5)) {
            h = h.with_outer_face(f.id);
            break;
        }
    auto s2 = cycle_sides(h, Cycle{ { 1, 2, 3, 4 } });
    EXPECT_EQ(s2.interior, std::vector<int>{ 0 });
    EXPECT_EQ(s2.exterior, std::vector<int>{ 5 });
    EXPECT_TRUE(s2.is_separating());
}

TEST(CycleSides, RejectsNonCycle)
{
    auto g = shapes::plane(shapes::cube());
    try {
        cycle_sides(g, Cycle{ { 0, 3, 5 } });
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.code(), Errc::not_a_cycle);
    }
}

TEST(CycleSides, PartitionAndFloodOracle)
{
    for (const auto & g0 : universe(7)) {
        for (const auto & f : g0.faces()) {
            auto g = g0.with_outer_face(f.id);
            for (const auto & c : cycles_up_to(g, 7)) {
                auto sides = cycle_sides(g, c);
                std::set<int> all(sides.interior.begin(), sides.interior.end());
                all.insert(sides.exterior.begin(), sides.exterior.end());
                all.insert(c.vertices.begin(), c.vertices.end());
                ASSERT_EQ(static_cast<int>(all.size()), g.vertex_count());
                ASSERT_EQ(sides.interior.size() + sides.exterior.size() + c.vertices.size(),
                    static_cast<std::size_t>(g.vertex_count()));
                auto [in, out] = oracle::sides(g, c);
                ASSERT_EQ(std::set<int>(sides.interior.begin(), sides.interior.end()), in) << emit_rotlist(g);
                ASSERT_EQ(std::set<int>(sides.exterior.begin(), sides.exterior.end()), out);
            }
        }
    }
}

TEST(Identify, PathEnds)
{
    auto r = identify_vertices(shapes::path(3), { { 0, 2 } });
    EXPECT_EQ(r.graph.vertex_count(), 2);
    EXPECT_EQ(r.graph.edge_count(), 1);
    EXPECT_EQ(r.image[0], r.image[2]);
}

TEST(Identify, OppositeCornersOfSquare)
{
    // u=0 v=1 w=2 x=3
    auto r = identify_vertices(shapes::cycle(4), { { 0, 2 } });
    int uw = r.image[0];
    EXPECT_EQ(r.graph.vertex_count(), 3);
    EXPECT_TRUE(r.graph.adjacent(uw, r.image[1]));
    EXPECT_TRUE(r.graph.adjacent(uw, r.image[3]));
    EXPECT_FALSE(r.graph.adjacent(r.image[1], r.image[3]));
}

TEST(Identify, Errors)
{
    auto g = shapes::cycle(4);
    EXPECT_EQ(code_of([&] { identify_vertices(g, { { 0, 1 } }); }), Errc::not_independent);
    EXPECT_EQ(code_of([&] { identify_vertices(g, { { 0, 2 }, { 2 } }); }), Errc::overlap);
}

TEST(Identify, SizesOnCube)
{
    auto cube = shapes::cube();
    // two independent parts: {0,3,5} (pairwise distance 2) and {1,7}
    auto r = identify_vertices(cube, { { 0, 3, 5 }, { 1, 7 } });
    EXPECT_EQ(r.graph.vertex_count(), 8 - 2 - 1);
    for (int v = 0; v < r.graph.vertex_count(); ++v)
        EXPECT_FALSE(r.graph.adjacent(v, v));
}

TEST(Sigma, Examples)
{
    EXPECT_EQ(sigma(shapes::complete(3)), 6);
    EXPECT_EQ(sigma(shapes::cube()), 20);
    EXPECT_EQ(sigma(shapes::complete(2)), 3);
    EXPECT_EQ(sigma(shapes::plane(shapes::cube())), 20);
}

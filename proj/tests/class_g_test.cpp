#include "oracles.hpp"
#include "shapes.hpp"

#include <gtest/gtest.h>

using namespace pglab;

namespace
{

auto universe_abstract(int max_n) -> std::vector<SimpleGraph>
{
    std::vector<SimpleGraph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto & g : connected_graphs(n, true))
            out.push_back(std::move(g));
    return out;
}

} // namespace

TEST(Membership, FiveCycleIsOut)
{
    auto r = check_membership(shapes::cycle(5));
    EXPECT_FALSE(r.is_member);
    EXPECT_TRUE(r.has_5_cycle);
    ASSERT_EQ(r.five_cycles.size(), 1u);
}

TEST(Membership, K4IsOut)
{
    auto r = check_membership(shapes::complete(4));
    EXPECT_FALSE(r.is_member);
    EXPECT_FALSE(r.has_5_cycle);
    EXPECT_EQ(r.triangle_distance, 0);
    ASSERT_TRUE(r.closest_triangles);
}

TEST(Membership, CubeIsIn)
{
    auto r = check_membership(shapes::plane(shapes::cube()));
    EXPECT_TRUE(r.is_member);
    EXPECT_FALSE(r.triangle_distance);
}

TEST(TriangleDistance, PathBetweenTriangles)
{
    // triangles 0-1-2 and 3-4-5, path 2-6-7-3
    auto g = shapes::from_edges(8, { { 0, 1 }, { 1, 2 }, { 2, 0 }, { 3, 4 }, { 4, 5 }, { 5, 3 }, { 2, 6 }, { 6, 7 }, { 7, 3 } });
    EXPECT_EQ(triangle_distance(g), 3);
    EXPECT_TRUE(is_member(g));
}

TEST(TriangleDistance, FewerThanTwoTriangles)
{
    EXPECT_FALSE(triangle_distance(shapes::complete(3)));
    EXPECT_FALSE(triangle_distance(shapes::cycle(6)));
}

TEST(Membership, WitnessCap)
{
    // K5 minus nothing: many 5-cycles
    auto r = check_membership(shapes::complete(5), 2);
    EXPECT_TRUE(r.has_5_cycle);
    EXPECT_EQ(r.five_cycles.size(), 2u);
    for (const auto & c : r.five_cycles)
        EXPECT_TRUE(is_cycle_of(shapes::complete(5), c));
}

TEST(TriangleDistance, AgreesWithFloydWarshall)
{
    for (const auto & g : universe_abstract(8)) {
        auto lib = triangle_distance(g);
        int ref = oracle::triangle_distance(g);
        ASSERT_EQ(lib.value_or(-1), ref);
    }
}

TEST(TriangleDistance, SymmetricInThePair)
{
    for (const auto & g : universe_abstract(7)) {
        auto pair = closest_triangle_pair(g);
        if (! pair)
            continue;
        auto [t1, t2] = pair->first;
        auto from1 = bfs_distances(g, std::span<const int>{ t1.vertices });
        auto from2 = bfs_distances(g, std::span<const int>{ t2.vertices });
        int d12 = 1 << 20, d21 = 1 << 20;
        for (int v : t2.vertices)
            d12 = std::min(d12, from1[v]);
        for (int v : t1.vertices)
            d21 = std::min(d21, from2[v]);
        EXPECT_EQ(d12, d21);
        EXPECT_EQ(d12, pair->second);
    }
}

TEST(Membership, AgreesWithBruteForce)
{
    for (const auto & g : universe_abstract(8))
        ASSERT_EQ(is_member(g), oracle::member(g));
}

TEST(Membership, DistanceOneMeansDisjointTriangles)
{
    for (const auto & g : universe_abstract(8)) {
        auto t = triangles_of(g);
        bool disjoint = true;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                for (int v : t[i].vertices)
                    disjoint = disjoint && ! t[j].contains(v);
        auto d = triangle_distance(g);
        ASSERT_EQ(! d || *d >= 1, disjoint);
    }
}

TEST(Membership, SurvivesEdgeDeletion)
{
    for (const auto & g : universe_abstract(7)) {
        if (! is_member(g))
            continue;
        for (auto [a, b] : g.edges()) {
            SimpleGraph h{ g.vertex_count() };
            for (auto [x, y] : g.edges())
                if (! (x == a && y == b))
                    h.add_edge(x, y);
            if (is_connected(h) && ! check_membership(h).has_5_cycle) {
                ASSERT_TRUE(is_member(h));
            }
        }
    }
}

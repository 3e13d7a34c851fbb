#pragma once

// Membership in the class of plane graphs without 5-cycles whose triangles
// are pairwise vertex-disjoint (triangle distance at least 1).

#include <pglab/graph.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace pglab
{

inline constexpr int default_witness_cap = 16;

template <AdjacencyGraph G>
auto triangles_of(const G & g) -> std::vector<Cycle>
{
    return cycles_of_length(g, 3);
}

/// Minimum graph distance between the vertex sets of two distinct triangles;
/// nullopt (infinity) when there are fewer than two triangles or no two are
/// connected.
template <AdjacencyGraph G>
auto closest_triangle_pair(const G & g) -> std::optional<std::pair<std::pair<Cycle, Cycle>, int>>
{
    auto triangles = triangles_of(g);
    std::optional<std::pair<std::pair<Cycle, Cycle>, int>> best;
    for (std::size_t i = 0; i < triangles.size(); ++i) {
        auto dist = bfs_distances(g, std::span<const int>{ triangles[i].vertices });
        for (std::size_t j = i + 1; j < triangles.size(); ++j) {
            int d = -1;
            for (int v : triangles[j].vertices)
                if (dist[v] >= 0 && (d < 0 || dist[v] < d))
                    d = dist[v];
            if (d >= 0 && (! best || d < best->second))
                best = std::pair{ std::pair{ triangles[i], triangles[j] }, d };
        }
    }
    return best;
}

template <AdjacencyGraph G>
auto triangle_distance(const G & g) -> std::optional<int>
{
    auto pair = closest_triangle_pair(g);
    if (! pair)
        return std::nullopt;
    return pair->second;
}

struct MembershipReport {
    bool is_member = false;
    bool has_5_cycle = false;
    std::optional<int> triangle_distance; // nullopt = infinity
    std::vector<Cycle> five_cycles;       // capped
    std::optional<std::pair<Cycle, Cycle>> closest_triangles;
};

template <AdjacencyGraph G>
auto check_membership(const G & g, int witness_cap = default_witness_cap) -> MembershipReport
{
    MembershipReport report;
    for_each_cycle(g, 5, [&](const std::vector<int> & path) {
        if (path.size() != 5)
            return true;
        report.has_5_cycle = true;
        report.five_cycles.push_back(Cycle{ path });
        return static_cast<int>(report.five_cycles.size()) < witness_cap;
    });
    if (auto pair = closest_triangle_pair(g)) {
        report.triangle_distance = pair->second;
        report.closest_triangles = pair->first;
    }
    report.is_member = ! report.has_5_cycle && (! report.triangle_distance || *report.triangle_distance >= 1);
    return report;
}

template <AdjacencyGraph G>
auto is_member(const G & g) -> bool
{
    return check_membership(g, 1).is_member;
}

} // namespace pglab

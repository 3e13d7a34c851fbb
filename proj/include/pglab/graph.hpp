#pragma once

// Simple graphs and plane graphs given by rotation systems.
//
// Vertex ids are 0-based inside the library; the text and byte formats in
// corpus_io.hpp are 1-based and translate at the boundary.

#include <pglab/error.hpp>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pglab
{

template <typename G>
concept AdjacencyGraph = requires(const G & g, int v) {
    { g.vertex_count() } -> std::convertible_to<int>;
    { g.degree(v) } -> std::convertible_to<int>;
    { g.adjacent(v, v) } -> std::convertible_to<bool>;
    g.neighbors(v);
};

/// Undirected simple graph with sorted adjacency lists.
class SimpleGraph {
public:
    SimpleGraph() = default;

    explicit SimpleGraph(int n)
        : adj_(static_cast<std::size_t>(n))
    {
    }

    static auto from_edges(int n, std::span<const std::pair<int, int>> edges) -> SimpleGraph
    {
        SimpleGraph g{ n };
        for (auto [a, b] : edges)
            g.add_edge(a, b);
        return g;
    }

    /// Adds the edge ab; loops and repeated edges are ignored.
    void add_edge(int a, int b)
    {
        if (a == b || adjacent(a, b))
            return;
        auto insert = [](std::vector<int> & list, int x) {
            list.insert(std::lower_bound(list.begin(), list.end(), x), x);
        };
        insert(adj_[a], b);
        insert(adj_[b], a);
        ++edges_;
    }

    auto vertex_count() const -> int { return static_cast<int>(adj_.size()); }
    auto edge_count() const -> int { return edges_; }
    auto degree(int v) const -> int { return static_cast<int>(adj_[v].size()); }
    auto neighbors(int v) const -> std::span<const int> { return adj_[v]; }

    auto adjacent(int a, int b) const -> bool
    {
        return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
    }

    auto edges() const -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        for (int a = 0; a < vertex_count(); ++a)
            for (int b : adj_[a])
                if (a < b)
                    result.emplace_back(a, b);
        return result;
    }

    /// Induced subgraph on the vertices whose keep flag is set; returns the
    /// graph and the old-to-new map (-1 for dropped vertices).
    auto induced(const std::vector<bool> & keep) const -> std::pair<SimpleGraph, std::vector<int>>
    {
        std::vector<int> image(adj_.size(), -1);
        int next = 0;
        for (std::size_t v = 0; v < adj_.size(); ++v)
            if (keep[v])
                image[v] = next++;
        SimpleGraph sub{ next };
        for (auto [a, b] : edges())
            if (image[a] >= 0 && image[b] >= 0)
                sub.add_edge(image[a], image[b]);
        return { std::move(sub), std::move(image) };
    }

    friend auto operator==(const SimpleGraph &, const SimpleGraph &) -> bool = default;

private:
    std::vector<std::vector<int>> adj_;
    int edges_ = 0;
};

struct Dart {
    int from = -1;
    int to = -1;

    friend auto operator==(const Dart &, const Dart &) -> bool = default;
};

struct FaceRecord {
    int id = 0;
    std::vector<int> boundary; // directed boundary walk
    int degree = 0;            // length of the walk
    bool is_outer = false;

    /// b(f): the distinct vertices on the boundary, sorted.
    auto vertex_set() const -> std::vector<int>
    {
        std::vector<int> s = boundary;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }

    auto contains(int v) const -> bool
    {
        return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
    }

    /// True when the walk visits degree-many distinct vertices, i.e. the face
    /// is bounded by a cycle.
    auto is_cycle() const -> bool
    {
        return degree >= 3 && static_cast<int>(vertex_set().size()) == degree;
    }
};

/// Simple connected plane graph. Rotations list each vertex's neighbors in
/// clockwise order (the planar_code convention); the face on the left of the
/// dart (u,v) continues with (v, w) where w follows u in v's rotation.
class PlaneGraph {
public:
    static auto from_rotation(std::vector<std::vector<int>> rotation, Dart outer_edge) -> PlaneGraph
    {
        PlaneGraph g;
        g.rotation_ = std::move(rotation);
        g.validate_and_trace(outer_edge);
        return g;
    }

    auto vertex_count() const -> int { return static_cast<int>(rotation_.size()); }
    auto edge_count() const -> int { return edge_count_; }
    auto face_count() const -> int { return static_cast<int>(faces_.size()); }
    auto degree(int v) const -> int { return static_cast<int>(rotation_[v].size()); }
    auto rotation(int v) const -> std::span<const int> { return rotation_[v]; }
    auto neighbors(int v) const -> std::span<const int> { return rotation_[v]; }
    auto rotations() const -> const std::vector<std::vector<int>> & { return rotation_; }

    auto adjacent(int a, int b) const -> bool
    {
        return std::binary_search(sorted_[a].begin(), sorted_[a].end(), b);
    }

    auto faces() const -> const std::vector<FaceRecord> & { return faces_; }
    auto face(int id) const -> const FaceRecord & { return faces_[id]; }
    auto outer_face() const -> const FaceRecord & { return faces_[outer_face_]; }
    auto outer_face_id() const -> int { return outer_face_; }
    auto outer_edge() const -> Dart { return outer_edge_; }

    /// Id of the face on the left of the dart (from, to).
    auto face_of_dart(int from, int to) const -> int
    {
        return dart_face_[dart_index(from, to)];
    }

    /// Faces incident with v (each listed once, in rotation order).
    auto faces_at(int v) const -> std::vector<int>
    {
        std::vector<int> result;
        for (int w : rotation_[v]) {
            int f = face_of_dart(v, w);
            if (std::find(result.begin(), result.end(), f) == result.end())
                result.push_back(f);
        }
        if (result.empty())
            result.push_back(outer_face_);
        return result;
    }

    auto with_outer_edge(Dart outer_edge) const -> PlaneGraph
    {
        return from_rotation(rotation_, outer_edge);
    }

    /// Same embedding with the given face designated as the outer face.
    auto with_outer_face(int face_id) const -> PlaneGraph
    {
        const auto & walk = faces_[face_id].boundary;
        if (walk.size() < 2)
            return *this;
        return with_outer_edge(Dart{ walk[0], walk[1] });
    }

    auto abstract() const -> SimpleGraph
    {
        SimpleGraph g{ vertex_count() };
        for (int v = 0; v < vertex_count(); ++v)
            for (int w : rotation_[v])
                g.add_edge(v, w);
        return g;
    }

    friend auto operator==(const PlaneGraph & a, const PlaneGraph & b) -> bool
    {
        return a.rotation_ == b.rotation_ && a.outer_face_ == b.outer_face_;
    }

private:
    PlaneGraph() = default;

    auto dart_index(int from, int to) const -> std::size_t
    {
        const auto & rot = rotation_[from];
        auto it = std::find(rot.begin(), rot.end(), to);
        if (it == rot.end())
            throw Error{ Errc::bad_outer_edge, "no edge " + std::to_string(from + 1) + "-" + std::to_string(to + 1) };
        return dart_offset_[from] + static_cast<std::size_t>(it - rot.begin());
    }

    void validate_and_trace(Dart outer_edge)
    {
        const int n = vertex_count();
        if (n < 1)
            throw Error{ Errc::not_simple, "graph has no vertices" };

        sorted_.assign(n, {});
        int degree_sum = 0;
        for (int v = 0; v < n; ++v) {
            for (int w : rotation_[v]) {
                if (w < 0 || w >= n)
                    throw Error{ Errc::not_simple, "neighbor id out of range at vertex " + std::to_string(v + 1) };
                if (w == v)
                    throw Error{ Errc::not_simple, "loop at vertex " + std::to_string(v + 1) };
            }
            sorted_[v] = rotation_[v];
            std::sort(sorted_[v].begin(), sorted_[v].end());
            if (std::adjacent_find(sorted_[v].begin(), sorted_[v].end()) != sorted_[v].end())
                throw Error{ Errc::not_simple, "repeated neighbor at vertex " + std::to_string(v + 1) };
            degree_sum += degree(v);
        }
        for (int v = 0; v < n; ++v)
            for (int w : rotation_[v])
                if (! adjacent(w, v))
                    throw Error{ Errc::not_simple,
                        "asymmetric adjacency " + std::to_string(v + 1) + "-" + std::to_string(w + 1) };
        edge_count_ = degree_sum / 2;

        std::vector<bool> seen(n, false);
        std::vector<int> stack{ 0 };
        seen[0] = true;
        int reached = 1;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : rotation_[v])
                if (! seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n)
            throw Error{ Errc::disconnected, std::to_string(n - reached) + " vertices unreachable from vertex 1" };

        dart_offset_.assign(n + 1, 0);
        for (int v = 0; v < n; ++v)
            dart_offset_[v + 1] = dart_offset_[v] + rotation_[v].size();
        const std::size_t darts = dart_offset_[n];

        // position of u in the rotation of w, for every dart (u,w)
        std::vector<int> reverse_pos(darts);
        for (int u = 0; u < n; ++u)
            for (std::size_t i = 0; i < rotation_[u].size(); ++i) {
                int w = rotation_[u][i];
                const auto & rw = rotation_[w];
                reverse_pos[dart_offset_[u] + i] = static_cast<int>(std::find(rw.begin(), rw.end(), u) - rw.begin());
            }

        faces_.clear();
        dart_face_.assign(darts, -1);
        for (int u = 0; u < n; ++u)
            for (std::size_t i = 0; i < rotation_[u].size(); ++i) {
                if (dart_face_[dart_offset_[u] + i] != -1)
                    continue;
                FaceRecord face;
                face.id = static_cast<int>(faces_.size());
                int a = u;
                std::size_t pos = i;
                while (dart_face_[dart_offset_[a] + pos] == -1) {
                    dart_face_[dart_offset_[a] + pos] = face.id;
                    face.boundary.push_back(a);
                    int b = rotation_[a][pos];
                    std::size_t next = (static_cast<std::size_t>(reverse_pos[dart_offset_[a] + pos]) + 1) % rotation_[b].size();
                    a = b;
                    pos = next;
                }
                face.degree = static_cast<int>(face.boundary.size());
                faces_.push_back(std::move(face));
            }

        if (n == 1) {
            FaceRecord face;
            face.boundary = { 0 };
            face.degree = 0;
            faces_.push_back(std::move(face));
        }

        if (n - edge_count_ + face_count() != 2)
            throw Error{ Errc::euler_violation,
                "V - E + F = " + std::to_string(n - edge_count_ + face_count()) + ", rotation system is not a sphere embedding" };

        if (n == 1) {
            outer_face_ = 0;
            outer_edge_ = Dart{};
        }
        else {
            if (outer_edge.from < 0 || outer_edge.from >= n || outer_edge.to < 0 || outer_edge.to >= n
                || ! adjacent(outer_edge.from, outer_edge.to))
                throw Error{ Errc::bad_outer_edge, "outer edge is not an edge of the graph" };
            outer_edge_ = outer_edge;
            outer_face_ = face_of_dart(outer_edge.from, outer_edge.to);
        }
        faces_[outer_face_].is_outer = true;
    }

    std::vector<std::vector<int>> rotation_;
    std::vector<std::vector<int>> sorted_;
    std::vector<std::size_t> dart_offset_;
    std::vector<int> dart_face_;
    std::vector<FaceRecord> faces_;
    int edge_count_ = 0;
    int outer_face_ = 0;
    Dart outer_edge_;
};

/// A cycle as a cyclic vertex sequence.
struct Cycle {
    std::vector<int> vertices;

    auto length() const -> int { return static_cast<int>(vertices.size()); }

    auto contains(int v) const -> bool
    {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    friend auto operator==(const Cycle &, const Cycle &) -> bool = default;
    friend auto operator<=>(const Cycle &, const Cycle &) = default;
};

/// Rotates/reflects a cycle into its canonical form: smallest vertex first,
/// then the direction whose second vertex is smaller.
inline auto canonical_cycle(std::vector<int> vertices) -> Cycle
{
    auto it = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), it, vertices.end());
    if (vertices.size() > 2 && vertices.back() < vertices[1])
        std::reverse(vertices.begin() + 1, vertices.end());
    return Cycle{ std::move(vertices) };
}

/// Calls visit(path) for every cycle of length 3..max_length, each once in
/// canonical form. Returning false from visit stops the enumeration.
template <AdjacencyGraph G, typename Visit>
void for_each_cycle(const G & g, int max_length, Visit && visit)
{
    const int n = g.vertex_count();
    std::vector<int> path;
    std::vector<bool> on_path(n, false);
    bool stopped = false;

    auto extend = [&](auto & self, int start) -> void {
        int tip = path.back();
        for (int w : g.neighbors(tip)) {
            if (stopped)
                return;
            if (w == start) {
                if (path.size() >= 3 && path[1] < path.back())
                    if (! visit(std::as_const(path)))
                        stopped = true;
                continue;
            }
            if (w < start || on_path[w] || static_cast<int>(path.size()) >= max_length)
                continue;
            on_path[w] = true;
            path.push_back(w);
            self(self, start);
            path.pop_back();
            on_path[w] = false;
        }
    };

    for (int s = 0; s < n && ! stopped; ++s) {
        path.assign(1, s);
        on_path[s] = true;
        extend(extend, s);
        on_path[s] = false;
    }
}

/// Every cycle of length 3..max_length, canonical, sorted by length then
/// lexicographically.
template <AdjacencyGraph G>
auto cycles_up_to(const G & g, int max_length) -> std::vector<Cycle>
{
    std::vector<Cycle> result;
    for_each_cycle(g, max_length, [&](const std::vector<int> & path) {
        result.push_back(Cycle{ path });
        return true;
    });
    std::sort(result.begin(), result.end(), [](const Cycle & a, const Cycle & b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return result;
}

template <AdjacencyGraph G>
auto cycles_of_length(const G & g, int length) -> std::vector<Cycle>
{
    auto all = cycles_up_to(g, length);
    std::erase_if(all, [&](const Cycle & c) { return c.length() != length; });
    return all;
}

template <AdjacencyGraph G>
auto is_cycle_of(const G & g, const Cycle & c) -> bool
{
    const int len = c.length();
    if (len < 3)
        return false;
    std::vector<int> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int v : sorted)
        if (v < 0 || v >= g.vertex_count())
            return false;
    for (int i = 0; i < len; ++i)
        if (! g.adjacent(c.vertices[i], c.vertices[(i + 1) % len]))
            return false;
    return true;
}

struct CycleSides {
    std::vector<int> interior;
    std::vector<int> exterior;

    auto is_separating() const -> bool { return ! interior.empty() && ! exterior.empty(); }
};

/// int(C) and ext(C): the vertices off C on either side of it, where the
/// side containing the outer face is the exterior.
inline auto cycle_sides(const PlaneGraph & g, const Cycle & c) -> CycleSides
{
    if (! is_cycle_of(g, c))
        throw Error{ Errc::not_a_cycle, "vertex sequence is not a cycle of the graph" };

    const int len = c.length();
    std::vector<std::pair<int, int>> cycle_edges;
    for (int i = 0; i < len; ++i) {
        int a = c.vertices[i], b = c.vertices[(i + 1) % len];
        cycle_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(cycle_edges.begin(), cycle_edges.end());

    std::vector<int> parent(g.face_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b : g.rotation(a))
            if (a < b && ! std::binary_search(cycle_edges.begin(), cycle_edges.end(), std::pair{ a, b }))
                parent[find(g.face_of_dart(a, b))] = find(g.face_of_dart(b, a));

    int left = find(g.face_of_dart(c.vertices[0], c.vertices[1]));
    bool left_is_exterior = find(g.outer_face_id()) == left;

    CycleSides sides;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (c.contains(v))
            continue;
        bool on_left = find(g.face_of_dart(v, g.rotation(v)[0])) == left;
        (on_left == left_is_exterior ? sides.exterior : sides.interior).push_back(v);
    }
    return sides;
}

struct IdentifiedGraph {
    SimpleGraph graph;
    std::vector<int> image; // old vertex -> new vertex
};

/// G[S_1,...,S_l]: identifies each part to a single vertex. The merged vertex
/// keeps the position of the smallest member; parallel edges are merged.
template <AdjacencyGraph G>
auto identify_vertices(const G & g, const std::vector<std::vector<int>> & parts) -> IdentifiedGraph
{
    const int n = g.vertex_count();
    std::vector<int> part_of(n, -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) {
            if (part_of[v] != -1)
                throw Error{ Errc::overlap, "vertex " + std::to_string(v + 1) + " appears in two parts" };
            part_of[v] = static_cast<int>(i);
        }
    for (const auto & part : parts)
        for (int a : part)
            for (int b : part)
                if (a < b && g.adjacent(a, b))
                    throw Error{ Errc::not_independent,
                        "edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1) + " inside a part" };

    std::vector<int> representative(parts.size(), n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i])
            representative[i] = std::min(representative[i], v);

    IdentifiedGraph result;
    result.image.assign(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (part_of[v] == -1 || representative[part_of[v]] == v)
            result.image[v] = next++;
    for (int v = 0; v < n; ++v)
        if (part_of[v] != -1)
            result.image[v] = result.image[representative[part_of[v]]];

    result.graph = SimpleGraph{ next };
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a))
            result.graph.add_edge(result.image[a], result.image[b]);
    return result;
}

template <AdjacencyGraph G>
auto edge_count_of(const G & g) -> int
{
    int sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        sum += g.degree(v);
    return sum / 2;
}

/// sigma(G) = |V(G)| + |E(G)|.
template <AdjacencyGraph G>
auto sigma(const G & g) -> int
{
    return g.vertex_count() + edge_count_of(g);
}

/// Breadth-first distances from a set of sources (-1 = unreachable).
template <AdjacencyGraph G>
auto bfs_distances(const G & g, std::span<const int> sources) -> std::vector<int>
{
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> queue;
    for (int s : sources) {
        dist[s] = 0;
        queue.push(s);
    }
    while (! queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v))
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
    }
    return dist;
}

template <AdjacencyGraph G>
auto is_connected(const G & g) -> bool
{
    if (g.vertex_count() == 0)
        return true;
    int start = 0;
    auto dist = bfs_distances(g, std::span<const int>{ &start, 1 });
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

} // namespace pglab

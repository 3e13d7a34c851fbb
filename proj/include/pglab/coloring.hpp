#pragma once

// (c_1,...,c_k)-colorings: validation, exact search with precolored
// subgraphs, and brute-force enumeration.

#include <pglab/graph.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pglab
{

/// Per-color allowed degree inside the color class. Colors are 1..k.
class DeficiencyVector {
public:
    DeficiencyVector() = default;

    explicit DeficiencyVector(std::vector<int> values)
        : values_(std::move(values))
    {
        if (values_.empty())
            throw std::invalid_argument("deficiency vector needs at least one color");
        for (int c : values_)
            if (c < 0)
                throw std::invalid_argument("deficiencies must be nonnegative");
    }

    /// Parses "2,0,0".
    static auto parse(std::string_view text) -> DeficiencyVector
    {
        std::vector<int> values;
        std::string item;
        std::istringstream in{ std::string(text) };
        while (std::getline(in, item, ',')) {
            std::size_t used = 0;
            int value = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument("bad deficiency entry '" + item + "'");
            values.push_back(value);
        }
        return DeficiencyVector{ std::move(values) };
    }

    auto colors() const -> int { return static_cast<int>(values_.size()); }
    auto allowance(int color) const -> int { return values_[color - 1]; }
    auto values() const -> const std::vector<int> & { return values_; }

    /// The nice threshold max{s_i - 1, 0}.
    auto nice_allowance(int color) const -> int { return std::max(allowance(color) - 1, 0); }

    auto to_string() const -> std::string
    {
        std::string s;
        for (std::size_t i = 0; i < values_.size(); ++i)
            s += (i ? "," : "") + std::to_string(values_[i]);
        return s;
    }

    friend auto operator==(const DeficiencyVector &, const DeficiencyVector &) -> bool = default;

private:
    std::vector<int> values_;
};

inline auto dv_200() -> DeficiencyVector { return DeficiencyVector{ { 2, 0, 0 } }; }

/// Partial map vertex -> color; 0 means uncolored.
class ColorAssignment {
public:
    ColorAssignment() = default;

    explicit ColorAssignment(int n)
        : colors_(static_cast<std::size_t>(n), 0)
    {
    }

    explicit ColorAssignment(std::vector<int> colors)
        : colors_(std::move(colors))
    {
    }

    auto size() const -> int { return static_cast<int>(colors_.size()); }
    auto operator[](int v) const -> int { return colors_[v]; }
    void set(int v, int color) { colors_[v] = color; }
    void clear(int v) { colors_[v] = 0; }
    auto is_colored(int v) const -> bool { return colors_[v] != 0; }
    auto values() const -> const std::vector<int> & { return colors_; }

    auto is_total() const -> bool
    {
        return std::none_of(colors_.begin(), colors_.end(), [](int c) { return c == 0; });
    }

    auto colored_count() const -> int
    {
        return static_cast<int>(std::count_if(colors_.begin(), colors_.end(), [](int c) { return c != 0; }));
    }

    friend auto operator==(const ColorAssignment &, const ColorAssignment &) -> bool = default;
    friend auto operator<=>(const ColorAssignment &, const ColorAssignment &) = default;

private:
    std::vector<int> colors_;
};

/// Number of colored neighbors of v sharing v's color (or `color`, when given).
template <AdjacencyGraph G>
auto same_color_degree(const G & g, const ColorAssignment & a, int v, int color = 0) -> int
{
    if (color == 0)
        color = a[v];
    int count = 0;
    for (int w : g.neighbors(v))
        if (a[w] == color)
            ++count;
    return count;
}

struct Violation {
    int vertex = 0;
    int color = 0;
    int same_degree = 0;
    int allowance = 0;

    friend auto operator==(const Violation &, const Violation &) -> bool = default;
};

/// Violations among colored vertices; uncolored vertices are ignored.
template <AdjacencyGraph G>
auto partial_violations(const G & g, const DeficiencyVector & dv, const ColorAssignment & a) -> std::vector<Violation>
{
    std::vector<Violation> result;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = a[v];
        if (c == 0)
            continue;
        if (c < 1 || c > dv.colors()) {
            result.push_back(Violation{ v, c, 0, -1 });
            continue;
        }
        int same = same_color_degree(g, a, v);
        if (same > dv.allowance(c))
            result.push_back(Violation{ v, c, same, dv.allowance(c) });
    }
    return result;
}

/// Empty iff every color class i induces maximum degree at most c_i.
template <AdjacencyGraph G>
auto validate(const G & g, const DeficiencyVector & dv, const ColorAssignment & a) -> std::vector<Violation>
{
    if (a.size() != g.vertex_count() || ! a.is_total())
        throw Error{ Errc::partial_assignment, "validate needs a total assignment" };
    return partial_violations(g, dv, a);
}

enum class VertexStatus { proper, nice, saturated, violating };

struct VertexStatusReport {
    VertexStatus status = VertexStatus::proper;
    int same_degree = 0;
    int allowance = 0;
    int nice_allowance = 0;
};

template <AdjacencyGraph G>
auto vertex_status(const G & g, const DeficiencyVector & dv, const ColorAssignment & a, int v) -> VertexStatusReport
{
    if (! a.is_colored(v))
        throw Error{ Errc::uncolored, "vertex " + std::to_string(v + 1) + " is uncolored" };
    VertexStatusReport r;
    r.same_degree = same_color_degree(g, a, v);
    r.allowance = dv.allowance(a[v]);
    r.nice_allowance = dv.nice_allowance(a[v]);
    if (r.same_degree == 0)
        r.status = VertexStatus::proper;
    else if (r.same_degree <= r.nice_allowance)
        r.status = VertexStatus::nice;
    else if (r.same_degree <= r.allowance)
        r.status = VertexStatus::saturated;
    else
        r.status = VertexStatus::violating;
    return r;
}

/// Color a graph extending a pinned coloring of H. With distinct_from_pinned
/// set, every vertex outside H must differ in color from its neighbors in H
/// (superextension). `forced` fixes further colors without that constraint.
struct ExtensionProblem {
    SimpleGraph graph;
    DeficiencyVector deficiencies = dv_200();
    ColorAssignment pinned;
    bool distinct_from_pinned = false;
    ColorAssignment forced;
};

struct SolveOptions {
    /// Only use color j after every lower color of equal deficiency has been
    /// used. Ignored when anything is pinned or forced.
    bool break_symmetry = false;
    /// Shuffle the color order per vertex (for sampling colorings).
    std::mt19937_64 * rng = nullptr;
};

namespace detail
{

class ColoringSearch {
public:
    ColoringSearch(const SimpleGraph & g, const DeficiencyVector & dv)
        : g_(g)
        , dv_(dv)
        , color_(g.vertex_count(), 0)
        , same_(g.vertex_count(), 0)
        , blocked_(g.vertex_count(), 0)
        , used_(dv.colors() + 1, 0)
    {
    }

    auto admissible(int v, int c) const -> bool
    {
        if (blocked_[v] & (1u << c))
            return false;
        int s = dv_.allowance(c);
        int count = 0;
        for (int w : g_.neighbors(v))
            if (color_[w] == c) {
                if (++count > s || same_[w] + 1 > s)
                    return false;
            }
        return true;
    }

    void assign(int v, int c)
    {
        color_[v] = c;
        ++used_[c];
        for (int w : g_.neighbors(v))
            if (color_[w] == c) {
                ++same_[w];
                ++same_[v];
            }
    }

    void unassign(int v)
    {
        int c = color_[v];
        for (int w : g_.neighbors(v))
            if (color_[w] == c) {
                --same_[w];
                --same_[v];
            }
        --used_[c];
        color_[v] = 0;
    }

    auto has_option(int v) const -> bool
    {
        for (int c = 1; c <= dv_.colors(); ++c)
            if (admissible(v, c))
                return true;
        return false;
    }

    const SimpleGraph & g_;
    const DeficiencyVector & dv_;
    std::vector<int> color_;
    std::vector<int> same_;
    std::vector<unsigned> blocked_;
    std::vector<int> used_;
};

} // namespace detail

/// Exact depth-first search; returns nullopt only when no extension exists.
inline auto solve(const ExtensionProblem & p, const SolveOptions & options = {}) -> std::optional<ColorAssignment>
{
    const auto & g = p.graph;
    const int n = g.vertex_count();
    const int k = p.deficiencies.colors();
    ColorAssignment pinned = p.pinned.size() == n ? p.pinned : ColorAssignment{ n };
    ColorAssignment forced = p.forced.size() == n ? p.forced : ColorAssignment{ n };

    for (int v = 0; v < n; ++v) {
        if (pinned[v] < 0 || pinned[v] > k)
            throw Error{ Errc::invalid_pin, "pinned color out of range at vertex " + std::to_string(v + 1) };
        if (forced[v] < 0 || forced[v] > k)
            throw Error{ Errc::invalid_pin, "forced color out of range at vertex " + std::to_string(v + 1) };
    }
    if (! partial_violations(g, p.deficiencies, pinned).empty())
        throw Error{ Errc::invalid_pin, "pinned coloring is not valid on the pinned subgraph" };

    detail::ColoringSearch search{ g, p.deficiencies };
    if (p.distinct_from_pinned)
        for (int v = 0; v < n; ++v)
            if (! pinned.is_colored(v))
                for (int w : g.neighbors(v))
                    if (pinned.is_colored(w))
                        search.blocked_[v] |= 1u << pinned[w];

    for (int v = 0; v < n; ++v)
        if (pinned.is_colored(v))
            search.assign(v, pinned[v]);
    for (int v = 0; v < n; ++v)
        if (forced.is_colored(v) && ! pinned.is_colored(v)) {
            if (! search.admissible(v, forced[v]))
                return std::nullopt;
            search.assign(v, forced[v]);
        }
        else if (forced.is_colored(v) && forced[v] != pinned[v])
            return std::nullopt;

    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (search.color_[v] == 0)
            order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    const bool symmetric = options.break_symmetry && pinned.colored_count() == 0 && forced.colored_count() == 0;
    std::vector<int> palette(k);
    std::iota(palette.begin(), palette.end(), 1);

    auto symmetry_ok = [&](int c) {
        if (! symmetric)
            return true;
        for (int lower = 1; lower < c; ++lower)
            if (p.deficiencies.allowance(lower) == p.deficiencies.allowance(c) && search.used_[lower] == 0)
                return false;
        return true;
    };

    auto dfs = [&](auto & self, std::size_t index) -> bool {
        if (index == order.size())
            return true;
        int v = order[index];
        std::vector<int> colors = palette;
        if (options.rng)
            std::shuffle(colors.begin(), colors.end(), *options.rng);
        for (int c : colors) {
            if (! symmetry_ok(c) || ! search.admissible(v, c))
                continue;
            search.assign(v, c);
            bool alive = true;
            for (int w : g.neighbors(v))
                if (search.color_[w] == 0 && ! search.has_option(w)) {
                    alive = false;
                    break;
                }
            if (alive && self(self, index + 1))
                return true;
            search.unassign(v);
        }
        return false;
    };

    if (! dfs(dfs, 0))
        return std::nullopt;
    return ColorAssignment{ search.color_ };
}

/// Visits every total valid assignment in lexicographic order (vertex 1's
/// color most significant). Returning false from visit stops.
template <typename Visit>
void for_each_valid_coloring(const SimpleGraph & g, const DeficiencyVector & dv, Visit && visit)
{
    const int n = g.vertex_count();
    detail::ColoringSearch search{ g, dv };
    bool stopped = false;
    auto rec = [&](auto & self, int v) -> void {
        if (v == n) {
            if (! visit(ColorAssignment{ search.color_ }))
                stopped = true;
            return;
        }
        for (int c = 1; c <= dv.colors() && ! stopped; ++c) {
            if (! search.admissible(v, c))
                continue;
            search.assign(v, c);
            self(self, v + 1);
            search.unassign(v);
        }
    };
    rec(rec, 0);
}

inline constexpr int default_enumeration_cap = 12;

inline auto enumerate_all(const SimpleGraph & g, const DeficiencyVector & dv, int cap = default_enumeration_cap)
    -> std::vector<ColorAssignment>
{
    if (g.vertex_count() > cap)
        throw Error{ Errc::too_large, std::to_string(g.vertex_count()) + " vertices exceeds the enumeration cap" };
    std::vector<ColorAssignment> result;
    for_each_valid_coloring(g, dv, [&](ColorAssignment a) {
        result.push_back(std::move(a));
        return true;
    });
    return result;
}

/// True when every vertex outside `pinned` differs from its pinned neighbors.
template <AdjacencyGraph G>
auto respects_superextension(const G & g, const ColorAssignment & pinned, const ColorAssignment & a) -> bool
{
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (pinned.is_colored(v) || ! a.is_colored(v))
            continue;
        for (int w : g.neighbors(v))
            if (pinned.is_colored(w) && a[w] == a[v])
                return false;
    }
    return true;
}

/// Superextends a (2,0,0)-coloring of a triangle or 7-cycle C0; colors are
/// listed in the order of C0's vertices.
inline auto superextend(const SimpleGraph & g, const Cycle & c0, std::span<const int> c0_colors,
    const SolveOptions & options = {}) -> std::optional<ColorAssignment>
{
    if (c0.length() != 3 && c0.length() != 7)
        throw Error{ Errc::bad_cycle_length, "C0 must be a triangle or a 7-cycle" };
    if (! is_cycle_of(g, c0))
        throw Error{ Errc::not_a_cycle, "C0 is not a cycle of the graph" };
    if (static_cast<int>(c0_colors.size()) != c0.length())
        throw Error{ Errc::invalid_pin, "one color per C0 vertex expected" };

    ExtensionProblem p;
    p.graph = g;
    p.deficiencies = dv_200();
    p.pinned = ColorAssignment{ g.vertex_count() };
    for (int i = 0; i < c0.length(); ++i)
        p.pinned.set(c0.vertices[i], c0_colors[i]);
    p.distinct_from_pinned = true;
    return solve(p, options);
}

/// All colorings of C0 (as color lists) that are valid (2,0,0)-colorings of
/// the subgraph induced by C0, in lexicographic order.
inline auto valid_cycle_pinnings(const SimpleGraph & g, const Cycle & c0) -> std::vector<std::vector<int>>
{
    std::vector<bool> keep(g.vertex_count(), false);
    for (int v : c0.vertices)
        keep[v] = true;
    auto [sub, image] = g.induced(keep);
    std::vector<std::vector<int>> result;
    for_each_valid_coloring(sub, dv_200(), [&](const ColorAssignment & a) {
        std::vector<int> colors;
        for (int v : c0.vertices)
            colors.push_back(a[image[v]]);
        result.push_back(std::move(colors));
        return true;
    });
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace pglab

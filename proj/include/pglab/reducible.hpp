#pragma once

// Reducible configurations: detectors for the patterns a minimal
// counterexample cannot contain, recoloring recipes for the constructive
// ones, and a verifier that runs a recipe over colorings of the reduced
// graph and cross-checks with the exact solver.
//
// C0 is always the boundary of the outer face.

#include <pglab/class_g.hpp>
#include <pglab/coloring.hpp>
#include <pglab/discharging.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace pglab
{

enum class LemmaId {
    p3_1a,
    p3_1b,
    p3_1c,
    l3_2,
    l3_3,
    l3_4,
    l3_5,
    l3_6,
    l3_7_1,
    l3_7_2,
    l3_8,
    l3_9,
    l3_10,
    l3_11,
    l3_12_1,
    l3_12_2,
    l3_12_3,
    l3_13,
};

inline constexpr std::array all_lemmas = {
    LemmaId::p3_1a,
    LemmaId::p3_1b,
    LemmaId::p3_1c,
    LemmaId::l3_2,
    LemmaId::l3_3,
    LemmaId::l3_4,
    LemmaId::l3_5,
    LemmaId::l3_6,
    LemmaId::l3_7_1,
    LemmaId::l3_7_2,
    LemmaId::l3_8,
    LemmaId::l3_9,
    LemmaId::l3_10,
    LemmaId::l3_11,
    LemmaId::l3_12_1,
    LemmaId::l3_12_2,
    LemmaId::l3_12_3,
    LemmaId::l3_13,
};

inline auto lemma_name(LemmaId id) -> std::string_view
{
    switch (id) {
    case LemmaId::p3_1a: return "P3.1a";
    case LemmaId::p3_1b: return "P3.1b";
    case LemmaId::p3_1c: return "P3.1c";
    case LemmaId::l3_2: return "L3.2";
    case LemmaId::l3_3: return "L3.3";
    case LemmaId::l3_4: return "L3.4";
    case LemmaId::l3_5: return "L3.5";
    case LemmaId::l3_6: return "L3.6";
    case LemmaId::l3_7_1: return "L3.7.1";
    case LemmaId::l3_7_2: return "L3.7.2";
    case LemmaId::l3_8: return "L3.8";
    case LemmaId::l3_9: return "L3.9";
    case LemmaId::l3_10: return "L3.10";
    case LemmaId::l3_11: return "L3.11";
    case LemmaId::l3_12_1: return "L3.12.1";
    case LemmaId::l3_12_2: return "L3.12.2";
    case LemmaId::l3_12_3: return "L3.12.3";
    case LemmaId::l3_13: return "L3.13";
    }
    return "?";
}

inline auto parse_lemma(std::string_view name) -> LemmaId
{
    for (auto id : all_lemmas)
        if (lemma_name(id) == name)
            return id;
    throw std::invalid_argument("unknown lemma id '" + std::string(name) + "'");
}

/// L3.10 has no violating pattern: it is a tool used by other recipes, so
/// scan_configurations skips it and find_lemma_instances lists its instances.
inline auto is_scanned(LemmaId id) -> bool { return id != LemmaId::l3_10; }

/// Lemmas whose proofs give a recoloring of a reduced graph.
inline auto has_recipe(LemmaId id) -> bool
{
    return id >= LemmaId::l3_7_1;
}

/// Lemmas verify_reduction accepts: the recipes plus L3.6, whose check is
/// membership of the identified graph.
inline auto is_constructive(LemmaId id) -> bool
{
    return id >= LemmaId::l3_6;
}

/// A located configuration. `vertices`, `faces`, `cycle` and `clause` are
/// the identifying witness (per-lemma role order below); `support` and
/// `support_faces` carry derived data the recipes use.
///
///   P3.1a [v]                  P3.1b [v] faces: its 3-faces
///   P3.1c faces [3-face, 4-face]
///   L3.2, L3.3 cycle           L3.4 [x, y]
///   L3.5 [v1, v3] face         L3.6 [u, w] face
///   L3.7.1 [u, w] face         L3.7.2 [v, x, u, w] face, v(x) identified
///   L3.8 [v]                   L3.9, L3.10 [u, v, w, u'] face
///   L3.11 [v, v1, v2, v3, v4, w] faces [f1, f2]
///   L3.12.1 [v, v4, v0, v4'] face; support: pendant 3-vertices of v
///   L3.12.2 [v]; support: pendant 3-vertices of v
///   L3.12.3 [v] faces: qualifying 4-faces; support [u0, v0, v1, u2, v2, v3]
///   L3.13 [w, u, v, u', v'] face, clause bits; support: pendant 3-vertices of w
struct ConfigurationMatch {
    LemmaId lemma = LemmaId::p3_1a;
    std::vector<int> vertices;
    std::vector<int> faces;
    std::optional<Cycle> cycle;
    int clause = 0;
    std::vector<int> support;
    std::vector<int> support_faces;

    auto key() const
    {
        return std::tuple{ lemma, vertices, faces, cycle ? cycle->vertices : std::vector<int>{}, clause };
    }

    friend auto operator==(const ConfigurationMatch & a, const ConfigurationMatch & b) -> bool { return a.key() == b.key(); }
    friend auto operator<(const ConfigurationMatch & a, const ConfigurationMatch & b) -> bool { return a.key() < b.key(); }
};

/// `MATCH <lemma> v=<ids> [f=<ids>] [cycle=<ids>] [clause=<n>]`, vertex and
/// face ids 1-based.
inline auto format_match(const ConfigurationMatch & m) -> std::string
{
    auto list = [](const std::vector<int> & xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i)
            s += (i ? "," : "") + std::to_string(xs[i] + 1);
        return s.empty() ? std::string("-") : s;
    };
    std::string s = "MATCH " + std::string(lemma_name(m.lemma)) + " v=" + list(m.vertices);
    if (! m.faces.empty())
        s += " f=" + list(m.faces);
    if (m.cycle)
        s += " cycle=" + list(m.cycle->vertices);
    if (m.clause)
        s += " clause=" + std::to_string(m.clause);
    return s;
}

namespace detail
{

inline auto is_k_face(const FaceRecord & f, int k) -> bool { return f.degree == k && f.is_cycle(); }

inline auto c0_neighbor_count(const PlaneGraph & g, const std::vector<bool> & on_c0, int v) -> int
{
    int count = 0;
    for (int w : g.neighbors(v))
        count += on_c0[w];
    return count;
}

/// The neighbor of a 3-vertex x that is not on face f (-1 if none or several).
inline auto off_face_neighbor(const PlaneGraph & g, const FaceRecord & f, int x) -> int
{
    int found = -1;
    for (int y : g.neighbors(x))
        if (! f.contains(y)) {
            if (found != -1)
                return -1;
            found = y;
        }
    return found;
}

/// (x, face) pairs where face is a special 3-face pendant to y through its
/// 3-vertex x; sorted by face, then x.
inline auto special_links(const PlaneGraph & g, const DischargeContext & ctx, int y) -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> links;
    for (int face : ctx.pendant.pendant_faces[y]) {
        if (! ctx.special.is_special(face))
            continue;
        for (int x : g.face(face).boundary)
            if (g.degree(x) == 3 && ctx.pendant.neighbor_off(x, face) == y)
                links.emplace_back(face, x);
    }
    std::sort(links.begin(), links.end());
    std::vector<std::pair<int, int>> result;
    for (auto [face, x] : links)
        result.emplace_back(x, face);
    return result;
}

inline void append_links(ConfigurationMatch & m, const std::vector<std::pair<int, int>> & links, std::size_t count)
{
    for (std::size_t i = 0; i < links.size() && i < count; ++i) {
        m.support.push_back(links[i].first);
        m.support_faces.push_back(links[i].second);
    }
}

/// Roles (u, v, w, u') for a special face and its 3-vertex u.
inline auto special_roles(const PlaneGraph & g, const DischargeContext & ctx, const FaceRecord & f, int u)
    -> std::array<int, 4>
{
    std::vector<int> others;
    for (int x : f.boundary)
        if (x != u)
            others.push_back(x);
    std::sort(others.begin(), others.end());
    int v = others[0], w = others[1];
    if (ctx.special.faces[f.id]->kind == SpecialKind::t335 && g.degree(v) != 3)
        std::swap(v, w);
    return { u, v, w, ctx.pendant.neighbor_off(u, f.id) };
}

} // namespace detail

// ---------------------------------------------------------------------------
// detectors

inline auto detect(const PlaneGraph & g, const DischargeContext & ctx, LemmaId lemma) -> std::vector<ConfigurationMatch>
{
    using detail::is_k_face;
    const int n = g.vertex_count();
    const auto & on_c0 = ctx.on_c0;
    const auto & cls = ctx.classes;
    std::vector<ConfigurationMatch> out;
    auto add = [&](ConfigurationMatch m) {
        m.lemma = lemma;
        out.push_back(std::move(m));
    };
    auto off_c0 = [&](std::initializer_list<int> vs) {
        return std::none_of(vs.begin(), vs.end(), [&](int v) { return on_c0[v]; });
    };

    switch (lemma) {
    case LemmaId::p3_1a:
        for (int v = 0; v < n; ++v)
            if (! on_c0[v] && g.degree(v) < 3)
                add({ .vertices = { v } });
        break;

    case LemmaId::p3_1b:
        for (int v = 0; v < n; ++v) {
            std::vector<int> tri;
            for (int f : g.faces_at(v))
                if (is_k_face(g.face(f), 3))
                    tri.push_back(f);
            if (tri.size() >= 2) {
                std::sort(tri.begin(), tri.end());
                add({ .vertices = { v }, .faces = tri });
            }
        }
        break;

    case LemmaId::p3_1c: {
        std::set<std::pair<int, int>> pairs;
        for (const auto & f : g.faces()) {
            if (! is_k_face(f, 3))
                continue;
            for (int i = 0; i < 3; ++i) {
                int other = g.face_of_dart(f.boundary[(i + 1) % 3], f.boundary[i]);
                if (is_k_face(g.face(other), 4))
                    pairs.emplace(f.id, other);
            }
        }
        for (auto [a, b] : pairs)
            add({ .faces = { a, b } });
        break;
    }

    case LemmaId::l3_2:
        for (const auto & c : cycles_up_to(g, 7))
            if ((c.length() == 3 || c.length() == 7) && cycle_sides(g, c).is_separating())
                add({ .vertices = c.vertices, .cycle = c });
        break;

    case LemmaId::l3_3: {
        std::vector<std::pair<Cycle, CycleSides>> separating;
        for (const auto & c : cycles_of_length(g, 4)) {
            auto sides = cycle_sides(g, c);
            if (sides.is_separating())
                separating.emplace_back(c, std::move(sides));
        }
        for (const auto & [c, sides] : separating) {
            bool allowed = false;
            if (sides.exterior.size() == 2) {
                int b = sides.exterior[0], d = sides.exterior[1];
                if (g.adjacent(b, d))
                    for (int x : c.vertices)
                        allowed = allowed || (g.adjacent(x, b) && g.adjacent(x, d));
            }
            if (! allowed || separating.size() >= 2)
                add({ .vertices = c.vertices, .cycle = c });
        }
        break;
    }

    case LemmaId::l3_4: {
        const auto & walk = g.outer_face().boundary;
        std::set<std::pair<int, int>> c0_edges;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            int a = walk[i], b = walk[(i + 1) % walk.size()];
            c0_edges.emplace(std::min(a, b), std::max(a, b));
        }
        auto c0 = g.outer_face().vertex_set();
        for (std::size_t i = 0; i < c0.size(); ++i)
            for (std::size_t j = i + 1; j < c0.size(); ++j) {
                int x = c0[i], y = c0[j];
                if (c0_edges.count({ x, y }))
                    continue;
                bool bad = g.adjacent(x, y);
                for (int z : g.neighbors(x))
                    bad = bad || (! on_c0[z] && g.adjacent(z, y));
                if (bad)
                    add({ .vertices = { x, y } });
            }
        break;
    }

    case LemmaId::l3_5:
        for (const auto & f : g.faces()) {
            if (f.is_outer || ! is_k_face(f, 4))
                continue;
            for (int i = 0; i < 4; ++i) {
                int v1 = f.boundary[i], v3 = f.boundary[(i + 2) % 4];
                if (! on_c0[v1])
                    continue;
                int near = detail::c0_neighbor_count(g, on_c0, v3);
                bool bad = on_c0[v3] || (cls[f.id].c0_hits == 2 && near != 1) || (cls[f.id].c0_hits == 1 && near != 0);
                if (bad)
                    add({ .vertices = { v1, v3 }, .faces = { f.id } });
            }
        }
        break;

    case LemmaId::l3_6:
        for (const auto & f : g.faces()) {
            if (! is_k_face(f, 4))
                continue;
            for (int i = 0; i < 2; ++i) {
                int u = std::min(f.boundary[i], f.boundary[i + 2]);
                int w = std::max(f.boundary[i], f.boundary[i + 2]);
                if (ctx.on_triangle[u] && ctx.on_triangle[w])
                    continue;
                if (g.adjacent(u, w) || ! is_member(identify_vertices(g, { { u, w } }).graph))
                    add({ .vertices = { u, w }, .faces = { f.id } });
            }
        }
        break;

    case LemmaId::l3_7_1:
        for (const auto & f : g.faces()) {
            if (f.is_outer || ! is_k_face(f, 4) || cls[f.id].c0_hits != 1)
                continue;
            for (int i = 0; i < 4; ++i) {
                int u = f.boundary[i], w = f.boundary[(i + 2) % 4];
                if (on_c0[u] && ctx.on_triangle[u] + ctx.on_triangle[w] <= 1)
                    add({ .vertices = { u, w }, .faces = { f.id } });
            }
        }
        break;

    case LemmaId::l3_7_2:
        for (const auto & f : g.faces()) {
            if (f.is_outer || ! is_k_face(f, 4) || cls[f.id].kind != FaceKind::disjoint)
                continue;
            for (int i = 0; i < 2; ++i) {
                int u = f.boundary[i], v = f.boundary[i + 1], w = f.boundary[i + 2], x = f.boundary[(i + 3) % 4];
                if (g.degree(u) <= 4 && g.degree(w) <= 4 && g.degree(v) >= 3 && g.degree(x) >= 3
                    && ctx.on_triangle[v] + ctx.on_triangle[x] <= 1)
                    add({ .vertices = { std::min(v, x), std::max(v, x), std::min(u, w), std::max(u, w) }, .faces = { f.id } });
            }
        }
        break;

    case LemmaId::l3_8:
        for (int v = 0; v < n; ++v) {
            if (on_c0[v] || g.degree(v) != 3)
                continue;
            auto nb = g.neighbors(v);
            bool c0_neighbor = std::any_of(nb.begin(), nb.end(), [&](int w) { return on_c0[w]; });
            bool big_neighbor = std::any_of(nb.begin(), nb.end(), [&](int w) { return g.degree(w) >= 5; });
            if (! c0_neighbor && ! big_neighbor)
                add({ .vertices = { v } });
        }
        break;

    case LemmaId::l3_9:
        for (const auto & f : g.faces()) {
            if (! is_k_face(f, 3))
                continue;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    if (i == j)
                        continue;
                    int u = f.boundary[i], v = f.boundary[j], w = f.boundary[3 - i - j];
                    if (g.degree(u) != 3 || g.degree(v) != 3 || g.degree(w) > 5)
                        continue;
                    int up = detail::off_face_neighbor(g, f, u);
                    if (up < 0 || ! off_c0({ u, v, w, up }) || g.degree(up) > 4)
                        continue;
                    add({ .vertices = { u, v, w, up }, .faces = { f.id } });
                }
        }
        break;

    case LemmaId::l3_10:
        for (const auto & f : g.faces()) {
            if (! ctx.special.is_special(f.id))
                continue;
            for (int u : f.boundary) {
                if (g.degree(u) != 3)
                    continue;
                int up = ctx.pendant.neighbor_off(u, f.id);
                if (up < 0 || on_c0[up])
                    continue;
                auto roles = detail::special_roles(g, ctx, f, u);
                add({ .vertices = { roles.begin(), roles.end() }, .faces = { f.id } });
            }
        }
        break;

    case LemmaId::l3_11:
        for (int v = 0; v < n; ++v) {
            if (on_c0[v] || g.degree(v) != 4)
                continue;
            auto at = g.faces_at(v);
            for (int f1 : at) {
                const auto & tri = g.face(f1);
                if (! is_k_face(tri, 3))
                    continue;
                for (int f2 : at) {
                    const auto & quad = g.face(f2);
                    if (f2 == f1 || ! is_k_face(quad, 4))
                        continue;
                    int pos = static_cast<int>(std::find(quad.boundary.begin(), quad.boundary.end(), v) - quad.boundary.begin());
                    int a = quad.boundary[(pos + 1) % 4], w = quad.boundary[(pos + 2) % 4], b = quad.boundary[(pos + 3) % 4];
                    int v1 = std::min(a, b), v2 = std::max(a, b);
                    if (g.degree(v1) != 3 || g.degree(v2) != 3 || g.degree(w) < 5)
                        continue;
                    std::vector<int> rest;
                    for (int x : tri.boundary)
                        if (x != v)
                            rest.push_back(x);
                    for (int k = 0; k < 2; ++k) {
                        int v3 = rest[k], v4 = rest[1 - k];
                        if (g.degree(v3) != 3 || g.degree(v4) > 5)
                            continue;
                        std::set<int> distinct{ v1, v2, v3, v4 };
                        if (distinct.size() != 4 || ! off_c0({ v, v1, v2, v3, v4, w }))
                            continue;
                        add({ .vertices = { v, v1, v2, v3, v4, w }, .faces = { f1, f2 } });
                    }
                }
            }
        }
        break;

    case LemmaId::l3_12_1:
        for (int v = 0; v < n; ++v) {
            if (on_c0[v] || g.degree(v) != 5 || ctx.pendant.h[v] < 3)
                continue;
            auto links = detail::special_links(g, ctx, v);
            for (int fid : g.faces_at(v)) {
                const auto & f = g.face(fid);
                if (! is_k_face(f, 3))
                    continue;
                for (int v4 : f.boundary) {
                    if (v4 == v || g.degree(v4) != 3)
                        continue;
                    int v0 = f.boundary[0] + f.boundary[1] + f.boundary[2] - v - v4;
                    if (g.degree(v0) < 3)
                        continue;
                    int v4p = detail::off_face_neighbor(g, f, v4);
                    if (v4p < 0 || g.degree(v4p) > 4 || ! off_c0({ v, v4, v0, v4p }))
                        continue;
                    ConfigurationMatch m{ .vertices = { v, v4, v0, v4p }, .faces = { fid } };
                    detail::append_links(m, links, 3);
                    add(std::move(m));
                }
            }
        }
        break;

    case LemmaId::l3_12_2:
        for (int v = 0; v < n; ++v) {
            if (on_c0[v] || g.degree(v) != 5 || ctx.pendant.h[v] < 4)
                continue;
            ConfigurationMatch m{ .vertices = { v } };
            detail::append_links(m, detail::special_links(g, ctx, v), 4);
            add(std::move(m));
        }
        break;

    case LemmaId::l3_12_3:
        for (int v = 0; v < n; ++v) {
            if (on_c0[v] || g.degree(v) != 5)
                continue;
            auto at = g.faces_at(v);
            if (at.size() != 5)
                continue;
            bool all_f4 = std::all_of(at.begin(), at.end(), [&](int f) {
                return is_k_face(g.face(f), 4) && cls[f].kind == FaceKind::disjoint;
            });
            if (! all_f4)
                continue;
            struct Quad {
                int face, u, a, b;
            };
            std::vector<Quad> qualifying;
            for (int f : at) {
                const auto & quad = g.face(f);
                int pos = static_cast<int>(std::find(quad.boundary.begin(), quad.boundary.end(), v) - quad.boundary.begin());
                int a = quad.boundary[(pos + 1) % 4], u = quad.boundary[(pos + 2) % 4], b = quad.boundary[(pos + 3) % 4];
                int lo = std::min(g.degree(a), g.degree(b)), hi = std::max(g.degree(a), g.degree(b));
                if (g.degree(u) <= 4 && lo >= 3 && hi >= 5 && ctx.on_triangle[a] + ctx.on_triangle[b] <= 1)
                    qualifying.push_back({ f, u, std::min(a, b), std::max(a, b) });
            }
            if (qualifying.size() < 3)
                continue;
            ConfigurationMatch m{ .vertices = { v } };
            for (const auto & q : qualifying)
                m.faces.push_back(q.face);
            std::sort(m.faces.begin(), m.faces.end());
            for (std::size_t i = 0; i < qualifying.size() && m.support.empty(); ++i)
                for (std::size_t j = i + 1; j < qualifying.size() && m.support.empty(); ++j) {
                    const auto & p = qualifying[i];
                    const auto & q = qualifying[j];
                    if (p.a != q.a && p.a != q.b && p.b != q.a && p.b != q.b) {
                        m.support = { p.u, p.a, p.b, q.u, q.a, q.b };
                        m.support_faces = { p.face, q.face };
                    }
                }
            add(std::move(m));
        }
        break;

    case LemmaId::l3_13:
        for (int w = 0; w < n; ++w) {
            if (on_c0[w] || g.degree(w) != 6)
                continue;
            const int h = ctx.pendant.h[w];
            for (int fid : g.faces_at(w)) {
                const auto & f = g.face(fid);
                if (! is_k_face(f, 3))
                    continue;
                std::vector<int> rest;
                for (int x : f.boundary)
                    if (x != w)
                        rest.push_back(x);
                int u = std::min(rest[0], rest[1]), v = std::max(rest[0], rest[1]);
                if (g.degree(u) != 3 || g.degree(v) != 3)
                    continue;
                int up = detail::off_face_neighbor(g, f, u), vp = detail::off_face_neighbor(g, f, v);
                if (up < 0 || vp < 0 || ! off_c0({ w, u, v, up, vp }))
                    continue;
                int lo = std::min(g.degree(up), g.degree(vp)), hi = std::max(g.degree(up), g.degree(vp));
                int clause = (lo <= 4 && h == 4 ? 1 : 0) | (hi <= 4 && h >= 3 ? 2 : 0);
                if (! clause)
                    continue;
                ConfigurationMatch m{ .vertices = { w, u, v, up, vp }, .faces = { fid }, .clause = clause };
                detail::append_links(m, detail::special_links(g, ctx, w), 4);
                add(std::move(m));
            }
        }
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline auto detect(const PlaneGraph & g, LemmaId lemma) -> std::vector<ConfigurationMatch>
{
    return detect(g, make_context(g), lemma);
}

/// Every violating configuration of every scanned lemma, grouped by lemma.
inline auto scan_configurations(const PlaneGraph & g, const DischargeContext & ctx) -> std::vector<ConfigurationMatch>
{
    std::vector<ConfigurationMatch> all;
    for (auto id : all_lemmas) {
        if (! is_scanned(id))
            continue;
        auto found = detect(g, ctx, id);
        all.insert(all.end(), found.begin(), found.end());
    }
    return all;
}

inline auto scan_configurations(const PlaneGraph & g) -> std::vector<ConfigurationMatch>
{
    return scan_configurations(g, make_context(g));
}

inline auto scan_configurations(const PlaneGraph & g, const Cycle & c0) -> std::vector<ConfigurationMatch>
{
    require_outer_c0(g, c0);
    return scan_configurations(g);
}

/// L3.6: hypothesis-satisfying opposite pairs on 4-faces (member or not).
/// L3.10: special 3-faces with a 3-vertex whose pendant neighbor is off C0.
/// Other lemmas: same as detect().
inline auto find_lemma_instances(const PlaneGraph & g, const DischargeContext & ctx, LemmaId lemma)
    -> std::vector<ConfigurationMatch>
{
    if (lemma != LemmaId::l3_6)
        return detect(g, ctx, lemma);
    std::vector<ConfigurationMatch> out;
    for (const auto & f : g.faces()) {
        if (! detail::is_k_face(f, 4))
            continue;
        for (int i = 0; i < 2; ++i) {
            int u = std::min(f.boundary[i], f.boundary[i + 2]);
            int w = std::max(f.boundary[i], f.boundary[i + 2]);
            if (ctx.on_triangle[u] && ctx.on_triangle[w])
                continue;
            out.push_back({ .lemma = lemma, .vertices = { u, w }, .faces = { f.id } });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline auto find_lemma_instances(const PlaneGraph & g, LemmaId lemma) -> std::vector<ConfigurationMatch>
{
    return find_lemma_instances(g, make_context(g), lemma);
}

/// Membership of G[{u,w}] for non-consecutive u, w on the 4-face `face`.
/// Throws HypothesisViolated unless at most one of u, w is on a triangle.
inline auto check_identification_hypothesis(const PlaneGraph & g, int face, std::pair<int, int> pair) -> MembershipReport
{
    const auto & f = g.face(face);
    auto [u, w] = pair;
    if (! detail::is_k_face(f, 4))
        throw Error{ Errc::hypothesis_violated, "face is not a 4-face" };
    auto pos = [&](int x) { return std::find(f.boundary.begin(), f.boundary.end(), x) - f.boundary.begin(); };
    if (! f.contains(u) || ! f.contains(w) || (pos(u) - pos(w) + 4) % 4 != 2)
        throw Error{ Errc::hypothesis_violated, "vertices are not opposite on the face" };
    auto triangles = triangles_of(g);
    auto on_triangle = [&](int x) {
        return std::any_of(triangles.begin(), triangles.end(), [&](const Cycle & t) { return t.contains(x); });
    };
    if (on_triangle(u) && on_triangle(w))
        throw Error{ Errc::hypothesis_violated, "both vertices are incident with a triangle" };
    if (g.adjacent(u, w))
        throw Error{ Errc::hypothesis_violated, "vertices are adjacent" };
    return check_membership(identify_vertices(g, { { u, w } }).graph);
}

// ---------------------------------------------------------------------------
// recipes

/// The graph a recipe starts from: G minus deleted vertices, or G with
/// vertex sets identified.
struct ReducedGraph {
    SimpleGraph graph;
    std::vector<int> image;   // G vertex -> reduced vertex, -1 if deleted
    std::vector<int> deleted; // G vertices without an image
    bool identified = false;
    int left_out = -1;        // L3.10: u', which stays uncolored in the output
};

namespace detail
{

inline auto deletion(const PlaneGraph & g, std::vector<int> gone) -> ReducedGraph
{
    std::vector<bool> keep(g.vertex_count(), true);
    for (int v : gone)
        keep[v] = false;
    auto [sub, image] = g.abstract().induced(keep);
    std::sort(gone.begin(), gone.end());
    gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
    return ReducedGraph{ std::move(sub), std::move(image), std::move(gone), false, -1 };
}

inline auto identification(const PlaneGraph & g, const std::vector<std::vector<int>> & parts) -> ReducedGraph
{
    auto id = identify_vertices(g, parts);
    return ReducedGraph{ std::move(id.graph), std::move(id.image), {}, true, -1 };
}

/// Partial coloring of G under (2,0,0) with C0 pinned; recipe steps operate
/// on it and treat uncolored vertices as absent.
class Recoloring {
public:
    Recoloring(const PlaneGraph & g, const std::vector<bool> & on_c0, ColorAssignment a)
        : g_(g)
        , on_c0_(on_c0)
        , a_(std::move(a))
    {
    }

    auto color(int v) const -> int { return a_[v]; }
    void set(int v, int c) { a_.set(v, c); }
    void clear(int v) { a_.clear(v); }
    auto result() const -> const ColorAssignment & { return a_; }

    auto count(int v, int c) const -> int
    {
        int k = 0;
        for (int w : g_.neighbors(v))
            k += a_[w] == c;
        return k;
    }

    /// v may take c without breaking (2,0,0) or superextension.
    auto can_take(int v, int c) const -> bool
    {
        for (int w : g_.neighbors(v))
            if (a_[w] == c && (on_c0_[w] != on_c0_[v]))
                return false;
        if (c != 1)
            return count(v, c) == 0;
        if (count(v, 1) > 2)
            return false;
        for (int w : g_.neighbors(v))
            if (a_[w] == 1 && count(w, 1) - (a_[v] == 1 ? 1 : 0) >= 2)
                return false;
        return true;
    }

    /// Smallest color used by no colored neighbor; 0 if all three occur.
    auto proper_color(int v) const -> int
    {
        for (int c = 1; c <= 3; ++c)
            if (count(v, c) == 0)
                return c;
        return 0;
    }

    /// Recolors v with its smallest proper color; leaves v uncolored (and the
    /// output invalid) when none exists.
    void recolor_properly(int v) { a_.set(v, proper_color(v)); }

    auto saturated_at_one(int v) const -> bool { return a_[v] == 1 && count(v, 1) >= 2; }

private:
    const PlaneGraph & g_;
    const std::vector<bool> & on_c0_;
    ColorAssignment a_;
};

/// Extends the current coloring to the 3-vertex u of the special face,
/// coloring u with 1 (the pendant neighbor of u is assumed uncolored).
inline void color_special_vertex(const PlaneGraph & g, const DischargeContext & ctx, Recoloring & s, int face, int u)
{
    const auto info = *ctx.special.faces[face];
    auto roles = special_roles(g, ctx, g.face(face), u);
    const int v = roles[1], w = roles[2];
    switch (info.kind) {
    case SpecialKind::t335:
        if (s.color(w) != 1)
            s.set(u, 1);
        else if (s.color(v) == 1) {
            s.recolor_properly(v);
            s.set(u, 1);
        }
        else if (s.can_take(u, 1))
            s.set(u, 1);
        else {
            // w has two more neighbors colored 1: move w to 2 or 3
            s.clear(v);
            s.recolor_properly(w);
            s.recolor_properly(v);
            s.set(u, 1);
        }
        break;

    case SpecialKind::t344:
        if (s.can_take(u, 1))
            s.set(u, 1);
        else if (s.color(v) == 1 && s.color(w) == 1) {
            int y = s.count(v, 1) >= 2 ? v : w;
            s.recolor_properly(y);
            s.set(u, 1);
        }
        else {
            s.recolor_properly(s.color(v) == 1 ? v : w);
            s.set(u, 1);
        }
        break;

    case SpecialKind::t355:
        s.clear(v);
        s.clear(w);
        for (int y : { v, w })
            for (auto [x, pendant] : special_links(g, ctx, y))
                if (ctx.special.faces[pendant]->generation < info.generation) {
                    s.clear(x);
                    color_special_vertex(g, ctx, s, pendant, x);
                }
        s.set(v, 2);
        s.set(w, 3);
        s.set(u, 1);
        break;
    }
}

} // namespace detail

/// The reduced graph of a recipe-bearing match.
inline auto reduced_graph(const PlaneGraph & g, const ConfigurationMatch & m) -> ReducedGraph
{
    const auto & vs = m.vertices;
    switch (m.lemma) {
    case LemmaId::l3_6:
    case LemmaId::l3_7_1: return detail::identification(g, { { vs[0], vs[1] } });
    case LemmaId::l3_7_2: return detail::identification(g, { { vs[0], vs[1] } });
    case LemmaId::l3_8: return detail::deletion(g, { vs[0] });
    case LemmaId::l3_9: return detail::deletion(g, { vs[0], vs[1] });
    case LemmaId::l3_10: {
        auto r = detail::deletion(g, { vs[0], vs[3] });
        r.left_out = vs[3];
        return r;
    }
    case LemmaId::l3_11: return detail::deletion(g, { vs[0], vs[1], vs[2], vs[3] });
    case LemmaId::l3_12_1:
    case LemmaId::l3_12_2: {
        std::vector<int> gone{ vs[0] };
        gone.insert(gone.end(), m.support.begin(), m.support.end());
        return detail::deletion(g, gone);
    }
    case LemmaId::l3_12_3: {
        const auto & s = m.support;
        return detail::identification(g, { { s[1], s[2] }, { s[4], s[5] } });
    }
    case LemmaId::l3_13: {
        std::vector<int> gone{ vs[0], vs[1], vs[2] };
        std::size_t links = (m.clause & 1) ? 4 : 3;
        for (std::size_t i = 0; i < links && i < m.support.size(); ++i)
            gone.push_back(m.support[i]);
        return detail::deletion(g, gone);
    }
    default: throw Error{ Errc::not_constructive_lemma, std::string(lemma_name(m.lemma)) + " has no recoloring recipe" };
    }
}

/// True when m is among the current detections (or instances) of its lemma.
inline auto match_holds(const PlaneGraph & g, const DischargeContext & ctx, const ConfigurationMatch & m) -> bool
{
    auto found = find_lemma_instances(g, ctx, m.lemma);
    return std::find(found.begin(), found.end(), m) != found.end();
}

/// Lifts a coloring of the reduced graph back to G and runs the lemma's
/// recoloring steps. The result is not checked here; verify_reduction does.
inline auto reduce_and_recolor(const PlaneGraph & g, const DischargeContext & ctx, const ConfigurationMatch & m,
    const ReducedGraph & reduced, const ColorAssignment & base) -> ColorAssignment
{
    if (! has_recipe(m.lemma))
        throw Error{ Errc::not_constructive_lemma, std::string(lemma_name(m.lemma)) + " has no recoloring recipe" };
    if (base.size() != reduced.graph.vertex_count())
        throw Error{ Errc::invalid_pin, "base coloring does not match the reduced graph" };

    ColorAssignment lifted{ g.vertex_count() };
    for (int v = 0; v < g.vertex_count(); ++v)
        if (reduced.image[v] >= 0)
            lifted.set(v, base[reduced.image[v]]);
    detail::Recoloring s{ g, ctx.on_c0, std::move(lifted) };
    const auto & vs = m.vertices;

    switch (m.lemma) {
    case LemmaId::l3_7_1:
        // u and w both take the color of u(w)
        break;

    case LemmaId::l3_7_2:
        for (int y : { vs[2], vs[3] })
            if (s.color(y) == 1 && s.count(y, 1) > 2)
                s.recolor_properly(y);
        break;

    case LemmaId::l3_8: {
        const int v = vs[0];
        int missing = s.proper_color(v);
        if (missing != 0)
            s.set(v, missing);
        else {
            int u = -1;
            for (int w : g.neighbors(v))
                if (s.color(w) == 1)
                    u = w;
            if (s.count(u, 1) >= 2)
                s.recolor_properly(u);
            s.set(v, 1);
        }
        break;
    }

    case LemmaId::l3_9: {
        const int u = vs[0], v = vs[1], w = vs[2], up = vs[3];
        s.recolor_properly(v);
        if (int c = s.proper_color(u))
            s.set(u, c);
        else if (s.color(up) == 1) {
            if (s.count(up, 1) >= 2)
                s.recolor_properly(up);
            s.set(u, 1);
        }
        else if (s.color(v) == 1)
            s.set(u, 1);
        else if (s.count(w, 1) <= 1)
            s.set(u, 1);
        else {
            // w saturated at 1: move w off 1, then u and v take 1 where they can
            s.clear(v);
            s.recolor_properly(w);
            s.set(u, 1);
            if (s.can_take(v, 1))
                s.set(v, 1);
            else
                s.recolor_properly(v);
        }
        break;
    }

    case LemmaId::l3_10:
        detail::color_special_vertex(g, ctx, s, m.faces[0], vs[0]);
        break;

    case LemmaId::l3_11: {
        const int v = vs[0], v1 = vs[1], v2 = vs[2], v3 = vs[3], v4 = vs[4];
        s.recolor_properly(v1);
        s.recolor_properly(v2);
        s.recolor_properly(v3);
        if (s.color(v1) == 1 && s.color(v2) == 1) {
            if (s.color(v3) == 1 || s.color(v4) == 1)
                s.recolor_properly(v);
            else
                s.set(v, 1);
        }
        else {
            if (! s.can_take(v, 1) && s.saturated_at_one(v4)) {
                s.clear(v3);
                s.recolor_properly(v4);
                s.recolor_properly(v3);
            }
            s.set(v, 1);
        }
        break;
    }

    case LemmaId::l3_12_1: {
        const int v = vs[0], v4 = vs[1], v4p = vs[3];
        for (std::size_t i = 0; i < m.support.size(); ++i)
            detail::color_special_vertex(g, ctx, s, m.support_faces[i], m.support[i]);
        auto first_fit = [&] {
            for (int c = 1; c <= 3; ++c)
                if (s.can_take(v, c))
                    return c;
            return 0;
        };
        if (int c = first_fit())
            s.set(v, c);
        else {
            s.clear(v4);
            if (s.saturated_at_one(v4p))
                s.recolor_properly(v4p);
            s.set(v4, 1);
            s.set(v, first_fit());
        }
        break;
    }

    case LemmaId::l3_12_2:
        for (std::size_t i = 0; i < m.support.size(); ++i)
            detail::color_special_vertex(g, ctx, s, m.support_faces[i], m.support[i]);
        s.recolor_properly(vs[0]);
        break;

    case LemmaId::l3_12_3: {
        const int v = vs[0];
        for (int u : { m.support[0], m.support[3] })
            if (s.color(u) == 1 && s.count(u, 1) > 2)
                s.recolor_properly(u);
        if (s.color(v) == 1 && s.count(v, 1) > 2)
            s.recolor_properly(v);
        break;
    }

    case LemmaId::l3_13: {
        const int w = vs[0];
        int u = vs[1], v = vs[2], up = vs[3], vp = vs[4];
        auto one_through = [&](int x, int xp) {
            if (! s.can_take(x, 1) && s.saturated_at_one(xp))
                s.recolor_properly(xp);
            s.set(x, 1);
        };
        if (m.clause & 1) {
            if (g.degree(up) > 4) {
                std::swap(u, v);
                std::swap(up, vp);
            }
            for (std::size_t i = 0; i < 4 && i < m.support.size(); ++i)
                detail::color_special_vertex(g, ctx, s, m.support_faces[i], m.support[i]);
            one_through(u, up);
            s.recolor_properly(v);
        }
        else {
            for (std::size_t i = 0; i < 3 && i < m.support.size(); ++i)
                detail::color_special_vertex(g, ctx, s, m.support_faces[i], m.support[i]);
            one_through(v, vp);
            one_through(u, up);
        }
        s.recolor_properly(w);
        break;
    }

    default: break;
    }
    return s.result();
}

inline auto reduce_and_recolor(const PlaneGraph & g, const ConfigurationMatch & m, const ColorAssignment & base)
    -> ColorAssignment
{
    auto ctx = make_context(g);
    if (! has_recipe(m.lemma))
        throw Error{ Errc::not_constructive_lemma, std::string(lemma_name(m.lemma)) + " has no recoloring recipe" };
    if (! match_holds(g, ctx, m))
        throw Error{ Errc::hypothesis_violated, format_match(m) + " does not hold in this graph" };
    return reduce_and_recolor(g, ctx, m, reduced_graph(g, m), base);
}

// ---------------------------------------------------------------------------
// verification

struct ReductionVerdict {
    LemmaId lemma = LemmaId::l3_8;
    long tested = 0;
    long ok = 0;
    long oracle_ok = 0;
    std::vector<std::string> discrepancies; // recipe failures (capped)
    long discrepancy_count = 0;
    std::vector<std::string> findings;      // e.g. identified graph outside the class
    bool sampled = false;

    auto clean() const -> bool { return discrepancy_count == 0 && oracle_ok == tested; }
};

/// `LEMMA <id> tested=<n> ok=<n> oracle_ok=<n> discrepancies=<n>`
inline auto format_verdict(const ReductionVerdict & v) -> std::string
{
    return "LEMMA " + std::string(lemma_name(v.lemma)) + " tested=" + std::to_string(v.tested) + " ok=" + std::to_string(v.ok)
        + " oracle_ok=" + std::to_string(v.oracle_ok) + " discrepancies=" + std::to_string(v.discrepancy_count);
}

struct VerifyOptions {
    int enumeration_cap = default_enumeration_cap; // exhaustive up to this many reduced vertices
    int samples = 500;                             // otherwise this many sampled base colorings
    std::uint64_t seed = 20240229;
    int discrepancy_cap = 16;
};

namespace detail
{

/// Independent membership test for small graphs: adjacency matrix, triangle
/// triples, and 5-cycles by brute force over vertex sequences.
inline auto naive_member(const SimpleGraph & g) -> bool
{
    const int n = g.vertex_count();
    std::vector<std::vector<int>> triangles;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
                    triangles.push_back({ a, b, c });
    for (std::size_t i = 0; i < triangles.size(); ++i)
        for (std::size_t j = i + 1; j < triangles.size(); ++j)
            for (int x : triangles[i])
                for (int y : triangles[j])
                    if (x == y)
                        return false;
    std::vector<int> p(5);
    auto rec = [&](auto & self, int depth) -> bool {
        if (depth == 5)
            return g.adjacent(p[4], p[0]);
        for (int x = 0; x < n; ++x) {
            if (std::find(p.begin(), p.begin() + depth, x) != p.begin() + depth)
                continue;
            if (depth > 0 && ! g.adjacent(p[depth - 1], x))
                continue;
            p[depth] = x;
            if (self(self, depth + 1))
                return true;
        }
        return false;
    };
    return ! rec(rec, 0);
}

inline auto describe_coloring(const ColorAssignment & a) -> std::string
{
    std::string s;
    for (int c : a.values())
        s += static_cast<char>('0' + c);
    return s;
}

} // namespace detail

/// Runs the recipe for m over every valid base coloring of the reduced graph
/// that superextends C0 (or a seeded sample when the reduced graph is over the
/// cap), validating each output and asking the solver whether the C0 pinning
/// superextends in G at all.
inline auto verify_reduction(const PlaneGraph & g, const ConfigurationMatch & m, const VerifyOptions & options = {})
    -> ReductionVerdict
{
    auto ctx = make_context(g);
    if (! is_constructive(m.lemma))
        throw Error{ Errc::not_constructive_lemma, std::string(lemma_name(m.lemma)) + " is structural; nothing to verify" };
    if (! match_holds(g, ctx, m))
        throw Error{ Errc::hypothesis_violated, format_match(m) + " does not hold in this graph" };

    ReductionVerdict verdict;
    verdict.lemma = m.lemma;

    if (m.lemma == LemmaId::l3_6) {
        auto identified = identify_vertices(g, { { m.vertices[0], m.vertices[1] } }).graph;
        bool member = is_member(identified);
        bool oracle = detail::naive_member(identified);
        if (! member) {
            verdict.findings.push_back("identified graph is outside the class");
            if (oracle)
                ++verdict.discrepancy_count;
            return verdict;
        }
        verdict.tested = 1;
        verdict.ok = 1;
        verdict.oracle_ok = oracle ? 1 : 0;
        return verdict;
    }

    const auto reduced = reduced_graph(g, m);
    const auto & rg = reduced.graph;
    if (reduced.identified && ! is_member(rg))
        verdict.findings.push_back("identified graph is outside the class");

    const auto c0 = g.outer_face().vertex_set();
    Cycle c0_cycle{ g.outer_face().boundary };
    std::vector<bool> pinned_in_r(rg.vertex_count(), false);
    for (int v : c0)
        pinned_in_r[reduced.image[v]] = true;

    auto c0_pin_of = [&](const ColorAssignment & base) {
        ColorAssignment pin{ g.vertex_count() };
        for (int v : c0)
            pin.set(v, base[reduced.image[v]]);
        return pin;
    };
    auto r_pin_of = [&](const ColorAssignment & base) {
        ColorAssignment pin{ rg.vertex_count() };
        for (int x = 0; x < rg.vertex_count(); ++x)
            if (pinned_in_r[x])
                pin.set(x, base[x]);
        return pin;
    };

    // the oracle's graph: G, or G - u' for L3.10
    SimpleGraph oracle_graph = g.abstract();
    std::vector<int> oracle_image(g.vertex_count());
    std::iota(oracle_image.begin(), oracle_image.end(), 0);
    if (reduced.left_out >= 0) {
        std::vector<bool> keep(g.vertex_count(), true);
        keep[reduced.left_out] = false;
        std::tie(oracle_graph, oracle_image) = g.abstract().induced(keep);
    }
    std::map<std::vector<int>, bool> oracle_cache;
    auto oracle = [&](const ColorAssignment & pin) {
        auto [it, fresh] = oracle_cache.emplace(pin.values(), false);
        if (fresh) {
            ExtensionProblem p;
            p.graph = oracle_graph;
            p.pinned = ColorAssignment{ oracle_graph.vertex_count() };
            for (int v : c0)
                p.pinned.set(oracle_image[v], pin[v]);
            p.distinct_from_pinned = true;
            if (m.lemma == LemmaId::l3_10) {
                p.forced = ColorAssignment{ oracle_graph.vertex_count() };
                p.forced.set(oracle_image[m.vertices[0]], 1);
            }
            it->second = solve(p).has_value();
        }
        return it->second;
    };

    const auto full = g.abstract();
    auto check = [&](const ColorAssignment & base) {
        auto pin = c0_pin_of(base);
        auto out = reduce_and_recolor(g, ctx, m, reduced, base);
        ++verdict.tested;
        std::string reason;
        for (int v = 0; v < g.vertex_count() && reason.empty(); ++v)
            if (v != reduced.left_out && ! out.is_colored(v))
                reason = "vertex " + std::to_string(v + 1) + " left uncolored";
        if (reason.empty() && ! partial_violations(full, dv_200(), out).empty())
            reason = "output violates (2,0,0)";
        for (int v : c0)
            if (reason.empty() && out[v] != pin[v])
                reason = "C0 vertex " + std::to_string(v + 1) + " changed color";
        if (reason.empty() && ! respects_superextension(full, pin, out))
            reason = "output is not a superextension";
        if (reason.empty() && m.lemma == LemmaId::l3_10 && out[m.vertices[0]] != 1)
            reason = "u is not colored 1";
        if (reason.empty())
            ++verdict.ok;
        else {
            if (static_cast<int>(verdict.discrepancies.size()) < options.discrepancy_cap)
                verdict.discrepancies.push_back("base=" + detail::describe_coloring(base) + " out="
                    + detail::describe_coloring(out) + ": " + reason);
            ++verdict.discrepancy_count;
        }
        if (oracle(pin))
            ++verdict.oracle_ok;
    };

    if (rg.vertex_count() <= options.enumeration_cap) {
        for_each_valid_coloring(rg, dv_200(), [&](const ColorAssignment & base) {
            if (respects_superextension(rg, r_pin_of(base), base))
                check(base);
            return true;
        });
        return verdict;
    }
    if (options.samples <= 0)
        throw Error{ Errc::too_large, "reduced graph has " + std::to_string(rg.vertex_count()) + " vertices and no sample budget" };

    verdict.sampled = true;
    Cycle r_c0;
    for (int v : c0_cycle.vertices)
        r_c0.vertices.push_back(reduced.image[v]);
    auto pinnings = valid_cycle_pinnings(rg, r_c0);
    std::mt19937_64 rng{ options.seed };
    for (int i = 0; i < options.samples; ++i) {
        const auto & colors = pinnings[std::uniform_int_distribution<std::size_t>{ 0, pinnings.size() - 1 }(rng)];
        ExtensionProblem p;
        p.graph = rg;
        p.pinned = ColorAssignment{ rg.vertex_count() };
        for (std::size_t k = 0; k < colors.size(); ++k)
            p.pinned.set(r_c0.vertices[k], colors[k]);
        p.distinct_from_pinned = true;
        SolveOptions so;
        so.rng = &rng;
        if (auto base = solve(p, so))
            check(*base);
        else
            verdict.findings.push_back("reduced graph does not superextend a C0 pinning");
    }
    return verdict;
}

} // namespace pglab

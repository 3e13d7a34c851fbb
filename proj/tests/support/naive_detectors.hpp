#pragma once

// Quantifier-expansion versions of the configuration detectors: every
// hypothesis is re-derived from degrees, the face list and brute-force
// cycles, producing the same match keys as the library.

#include "oracles.hpp"

#include <tuple>

namespace oracle
{

using pglab::LemmaId;

using Key = std::tuple<LemmaId, std::vector<int>, std::vector<int>, std::vector<int>, int>;

struct Scene {
    const PlaneGraph & g;
    int n;
    std::vector<bool> c0;
    std::vector<bool> tri;       // on some 3-cycle
    std::vector<int> hits;       // per face: number of C0 vertices on it
    std::vector<bool> special;   // per face
    std::vector<int> h;          // per vertex

    explicit Scene(const PlaneGraph & graph)
        : g(graph)
        , n(graph.vertex_count())
        , c0(n, false)
        , tri(n, false)
    {
        for (int v : g.outer_face().boundary)
            c0[v] = true;
        for (auto t : triangles(g))
            for (int v : t)
                tri[v] = true;
        for (const auto & f : g.faces()) {
            std::set<int> vs(f.boundary.begin(), f.boundary.end());
            int k = 0;
            for (int v : vs)
                k += c0[v];
            hits.push_back(k);
        }
        compute_special();
    }

    auto deg(int v) const -> int { return g.degree(v); }
    auto adj(int a, int b) const -> bool { return g.adjacent(a, b); }
    auto on(const pglab::FaceRecord & f, int v) const -> bool
    {
        return std::find(f.boundary.begin(), f.boundary.end(), v) != f.boundary.end();
    }

    /// a k-face bounded by a k-cycle
    auto kface(int id, int k) const -> bool
    {
        const auto & f = g.face(id);
        if (static_cast<int>(f.boundary.size()) != k)
            return false;
        std::set<int> vs(f.boundary.begin(), f.boundary.end());
        return static_cast<int>(vs.size()) == k && k >= 3;
    }

    auto inner_disjoint(int id) const -> bool { return ! g.face(id).is_outer && hits[id] == 0; }

    auto off_c0(std::initializer_list<int> vs) const -> bool
    {
        for (int v : vs)
            if (c0[v])
                return false;
        return true;
    }

    /// the unique neighbor of x off face f, or -1
    auto off_face(int id, int x) const -> int
    {
        std::vector<int> found;
        for (int y = 0; y < n; ++y)
            if (adj(x, y) && ! on(g.face(id), y))
                found.push_back(y);
        return found.size() == 1 ? found[0] : -1;
    }

    auto degrees_of(int id) const -> std::multiset<int>
    {
        std::multiset<int> d;
        for (int v : g.face(id).boundary)
            d.insert(deg(v));
        return d;
    }

    /// f pendant to y: y off f, y adjacent to a 3-vertex of f; f an inner 3-face
    auto pendant(int id, int y) const -> bool
    {
        const auto & f = g.face(id);
        if (f.is_outer || f.boundary.size() != 3 || on(f, y))
            return false;
        for (int x : f.boundary)
            if (deg(x) == 3 && adj(x, y))
                return true;
        return false;
    }

    auto special_pendants(int y) const -> int
    {
        int count = 0;
        for (int id = 0; id < g.face_count(); ++id)
            count += special[id] && pendant(id, y);
        return count;
    }

    void compute_special()
    {
        const int nf = g.face_count();
        special.assign(nf, false);
        auto base = [&](int id) {
            auto d = degrees_of(id);
            std::vector<int> s(d.begin(), d.end());
            return (d.count(3) >= 2 && s[2] <= 5) || s == std::vector<int>{ 3, 4, 4 };
        };
        for (int id = 0; id < nf; ++id)
            special[id] = kface(id, 3) && inner_disjoint(id) && base(id);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int id = 0; id < nf; ++id) {
                if (special[id] || ! kface(id, 3) || ! inner_disjoint(id)
                    || degrees_of(id) != std::multiset<int>{ 3, 5, 5 })
                    continue;
                int total = 0;
                for (int v : g.face(id).boundary)
                    if (deg(v) == 5)
                        total += special_pendants(v);
                if (total >= 6) {
                    special[id] = true;
                    changed = true;
                }
            }
        }
        h.assign(n, 0);
        for (int v = 0; v < n; ++v)
            h[v] = special_pendants(v);
    }

    /// faces containing v
    auto faces_at(int v) const -> std::vector<int>
    {
        std::vector<int> out;
        for (const auto & f : g.faces())
            if (on(f, v))
                out.push_back(f.id);
        return out;
    }

    /// the two boundary neighbors of v on a 4-cycle face, and the opposite vertex
    auto around(int id, int v) const -> std::tuple<int, int, int>
    {
        const auto & b = g.face(id).boundary;
        int p = static_cast<int>(std::find(b.begin(), b.end(), v) - b.begin());
        return { b[(p + 1) % 4], b[(p + 2) % 4], b[(p + 3) % 4] };
    }
};

inline auto naive_identified_member(const PlaneGraph & g, int u, int w) -> bool
{
    const int n = g.vertex_count();
    SimpleGraph r{ n - 1 };
    auto img = [&](int x) {
        int y = x == w ? u : x;
        return y > w ? y - 1 : y;
    };
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a))
            if (img(a) != img(b))
                r.add_edge(img(a), img(b));
    return member(r);
}

inline auto naive_detect(const PlaneGraph & g, LemmaId lemma) -> std::set<Key>
{
    Scene s{ g };
    const int n = s.n;
    const int nf = g.face_count();
    std::set<Key> out;
    auto add = [&](std::vector<int> vs, std::vector<int> fs = {}, std::vector<int> cyc = {}, int clause = 0) {
        out.insert(Key{ lemma, std::move(vs), std::move(fs), std::move(cyc), clause });
    };

    switch (lemma) {
    case LemmaId::p3_1a:
        for (int v = 0; v < n; ++v)
            if (! s.c0[v] && s.deg(v) <= 2)
                add({ v });
        break;

    case LemmaId::p3_1b:
        for (int v = 0; v < n; ++v) {
            std::vector<int> fs;
            for (int id : s.faces_at(v))
                if (s.kface(id, 3))
                    fs.push_back(id);
            if (fs.size() > 1)
                add({ v }, fs);
        }
        break;

    case LemmaId::p3_1c:
        for (int a = 0; a < nf; ++a)
            for (int b = 0; b < nf; ++b) {
                if (! s.kface(a, 3) || ! s.kface(b, 4))
                    continue;
                const auto & fa = g.face(a).boundary;
                const auto & fb = g.face(b).boundary;
                bool share = false;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 4; ++j) {
                        int x = fa[i], y = fa[(i + 1) % 3];
                        int p = fb[j], q = fb[(j + 1) % 4];
                        share = share || (x == p && y == q) || (x == q && y == p);
                    }
                if (share)
                    add({}, { a, b });
            }
        break;

    case LemmaId::l3_2:
        for (const auto & c : cycles(g, 7)) {
            if (c.size() != 3 && c.size() != 7)
                continue;
            auto [in, ext] = sides(g, pglab::Cycle{ c });
            if (! in.empty() && ! ext.empty())
                add(c, {}, c);
        }
        break;

    case LemmaId::l3_3: {
        std::vector<std::pair<std::vector<int>, std::set<int>>> sep;
        for (const auto & c : cycles(g, 4)) {
            if (c.size() != 4)
                continue;
            auto [in, ext] = sides(g, pglab::Cycle{ c });
            if (! in.empty() && ! ext.empty())
                sep.emplace_back(c, ext);
        }
        for (const auto & [c, ext] : sep) {
            // the one tolerated shape: the exterior is an edge bd whose ends
            // share a neighbor on the cycle
            bool tolerated = false;
            if (ext.size() == 2) {
                int b = *ext.begin(), d = *ext.rbegin();
                for (int x : c)
                    tolerated = tolerated || (s.adj(b, d) && s.adj(x, b) && s.adj(x, d));
            }
            if (! tolerated || sep.size() > 1)
                add(c, {}, c);
        }
        break;
    }

    case LemmaId::l3_4: {
        const auto & walk = g.outer_face().boundary;
        auto consecutive = [&](int x, int y) {
            for (std::size_t i = 0; i < walk.size(); ++i) {
                int a = walk[i], b = walk[(i + 1) % walk.size()];
                if ((a == x && b == y) || (a == y && b == x))
                    return true;
            }
            return false;
        };
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                if (! s.c0[x] || ! s.c0[y] || consecutive(x, y))
                    continue;
                bool common_off = false;
                for (int z = 0; z < n; ++z)
                    common_off = common_off || (! s.c0[z] && s.adj(x, z) && s.adj(y, z));
                if (s.adj(x, y) || common_off)
                    add({ x, y });
            }
        break;
    }

    case LemmaId::l3_5:
        for (int id = 0; id < nf; ++id) {
            if (g.face(id).is_outer || ! s.kface(id, 4))
                continue;
            for (int v1 : g.face(id).boundary) {
                if (! s.c0[v1])
                    continue;
                int v3 = std::get<1>(s.around(id, v1));
                int near = 0;
                for (int z = 0; z < n; ++z)
                    near += s.c0[z] && s.adj(v3, z);
                bool ok = ! s.c0[v3] && (s.hits[id] != 2 || near == 1) && (s.hits[id] != 1 || near == 0);
                if (! ok)
                    add({ v1, v3 }, { id });
            }
        }
        break;

    case LemmaId::l3_6:
        for (int id = 0; id < nf; ++id) {
            if (! s.kface(id, 4))
                continue;
            for (int u : g.face(id).boundary) {
                int w = std::get<1>(s.around(id, u));
                if (u > w || (s.tri[u] && s.tri[w]))
                    continue;
                if (s.adj(u, w) || ! naive_identified_member(g, u, w))
                    add({ u, w }, { id });
            }
        }
        break;

    case LemmaId::l3_7_1:
        for (int id = 0; id < nf; ++id) {
            if (g.face(id).is_outer || ! s.kface(id, 4) || s.hits[id] != 1)
                continue;
            for (int u : g.face(id).boundary) {
                int w = std::get<1>(s.around(id, u));
                if (s.c0[u] && ! (s.tri[u] && s.tri[w]))
                    add({ u, w }, { id });
            }
        }
        break;

    case LemmaId::l3_7_2:
        for (int id = 0; id < nf; ++id) {
            if (! s.kface(id, 4) || ! s.inner_disjoint(id))
                continue;
            for (int u : g.face(id).boundary) {
                auto [v, w, x] = s.around(id, u);
                if (s.deg(u) <= 4 && s.deg(w) <= 4 && s.deg(v) >= 3 && s.deg(x) >= 3 && ! (s.tri[v] && s.tri[x]))
                    add({ std::min(v, x), std::max(v, x), std::min(u, w), std::max(u, w) }, { id });
            }
        }
        break;

    case LemmaId::l3_8:
        for (int v = 0; v < n; ++v) {
            if (s.c0[v] || s.deg(v) != 3)
                continue;
            bool escape = false;
            for (int w = 0; w < n; ++w)
                escape = escape || (s.adj(v, w) && (s.c0[w] || s.deg(w) >= 5));
            if (! escape)
                add({ v });
        }
        break;

    case LemmaId::l3_9:
        for (int id = 0; id < nf; ++id) {
            if (! s.kface(id, 3))
                continue;
            const auto & b = g.face(id).boundary;
            for (int u : b)
                for (int v : b) {
                    if (u == v)
                        continue;
                    int w = b[0] + b[1] + b[2] - u - v;
                    int up = s.off_face(id, u);
                    if (s.deg(u) == 3 && s.deg(v) == 3 && s.deg(w) <= 5 && up >= 0 && s.deg(up) <= 4
                        && s.off_c0({ u, v, w, up }))
                        add({ u, v, w, up }, { id });
                }
        }
        break;

    case LemmaId::l3_10:
        for (int id = 0; id < nf; ++id) {
            if (! s.special[id])
                continue;
            const auto & b = g.face(id).boundary;
            for (int u : b) {
                if (s.deg(u) != 3)
                    continue;
                int up = s.off_face(id, u);
                if (up < 0 || s.c0[up])
                    continue;
                std::vector<int> rest;
                for (int x : b)
                    if (x != u)
                        rest.push_back(x);
                std::sort(rest.begin(), rest.end());
                // in a (3,3,5-)-face the second role is the other 3-vertex
                auto d = s.degrees_of(id);
                bool t335 = d.count(3) >= 2;
                if (t335 && s.deg(rest[0]) != 3)
                    std::swap(rest[0], rest[1]);
                add({ u, rest[0], rest[1], up }, { id });
            }
        }
        break;

    case LemmaId::l3_11:
        for (int v = 0; v < n; ++v) {
            if (s.c0[v] || s.deg(v) != 4)
                continue;
            for (int f1 : s.faces_at(v))
                for (int f2 : s.faces_at(v)) {
                    if (f1 == f2 || ! s.kface(f1, 3) || ! s.kface(f2, 4))
                        continue;
                    auto [a, w, b] = s.around(f2, v);
                    int v1 = std::min(a, b), v2 = std::max(a, b);
                    for (int v3 : g.face(f1).boundary) {
                        if (v3 == v)
                            continue;
                        const auto & t = g.face(f1).boundary;
                        int v4 = t[0] + t[1] + t[2] - v - v3;
                        std::set<int> four{ v1, v2, v3, v4 };
                        if (s.deg(v1) == 3 && s.deg(v2) == 3 && s.deg(w) >= 5 && s.deg(v3) == 3 && s.deg(v4) <= 5
                            && four.size() == 4 && s.off_c0({ v, v1, v2, v3, v4, w }))
                            add({ v, v1, v2, v3, v4, w }, { f1, f2 });
                    }
                }
        }
        break;

    case LemmaId::l3_12_1:
        for (int v = 0; v < n; ++v) {
            if (s.c0[v] || s.deg(v) != 5 || s.h[v] < 3)
                continue;
            for (int id : s.faces_at(v)) {
                if (! s.kface(id, 3))
                    continue;
                const auto & t = g.face(id).boundary;
                for (int v4 : t) {
                    if (v4 == v)
                        continue;
                    int v0 = t[0] + t[1] + t[2] - v - v4;
                    int v4p = s.off_face(id, v4);
                    if (s.deg(v4) == 3 && s.deg(v0) >= 3 && v4p >= 0 && s.deg(v4p) <= 4 && s.off_c0({ v, v4, v0, v4p }))
                        add({ v, v4, v0, v4p }, { id });
                }
            }
        }
        break;

    case LemmaId::l3_12_2:
        for (int v = 0; v < n; ++v)
            if (! s.c0[v] && s.deg(v) == 5 && s.h[v] >= 4)
                add({ v });
        break;

    case LemmaId::l3_12_3:
        for (int v = 0; v < n; ++v) {
            if (s.c0[v] || s.deg(v) != 5)
                continue;
            auto at = s.faces_at(v);
            bool five_f4 = at.size() == 5;
            for (int id : at)
                five_f4 = five_f4 && s.kface(id, 4) && s.inner_disjoint(id);
            if (! five_f4)
                continue;
            std::vector<int> qualifying;
            for (int id : at) {
                auto [a, u, b] = s.around(id, v);
                int lo = std::min(s.deg(a), s.deg(b)), hi = std::max(s.deg(a), s.deg(b));
                if (s.deg(u) <= 4 && lo >= 3 && hi >= 5 && ! (s.tri[a] && s.tri[b]))
                    qualifying.push_back(id);
            }
            if (qualifying.size() >= 3)
                add({ v }, qualifying);
        }
        break;

    case LemmaId::l3_13:
        for (int w = 0; w < n; ++w) {
            if (s.c0[w] || s.deg(w) != 6)
                continue;
            for (int id : s.faces_at(w)) {
                if (! s.kface(id, 3))
                    continue;
                std::vector<int> rest;
                for (int x : g.face(id).boundary)
                    if (x != w)
                        rest.push_back(x);
                std::sort(rest.begin(), rest.end());
                int u = rest[0], v = rest[1];
                if (s.deg(u) != 3 || s.deg(v) != 3)
                    continue;
                int up = s.off_face(id, u), vp = s.off_face(id, v);
                if (up < 0 || vp < 0 || ! s.off_c0({ w, u, v, up, vp }))
                    continue;
                bool one_small = s.deg(up) <= 4 || s.deg(vp) <= 4;
                bool both_small = s.deg(up) <= 4 && s.deg(vp) <= 4;
                int clause = (one_small && s.h[w] == 4 ? 1 : 0) + (both_small && s.h[w] >= 3 ? 2 : 0);
                if (clause)
                    add({ w, u, v, up, vp }, { id }, {}, clause);
            }
        }
        break;
    }
    return out;
}

inline auto keys_of(const std::vector<pglab::ConfigurationMatch> & ms) -> std::set<Key>
{
    std::set<Key> out;
    for (const auto & m : ms) {
        auto [l, v, f, c, cl] = m.key();
        out.insert(Key{ l, v, f, c, cl });
    }
    return out;
}

} // namespace oracle

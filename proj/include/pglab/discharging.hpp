#pragma once

// Discharging over a plane graph whose outer face plays the role of the
// precolored cycle C0: face classes, pendant 3-faces, the recursive set of
// special 3-faces, initial charges, the transfer rules, and an audit.

#include <pglab/graph.hpp>

#include <boost/rational.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace boost
{

// Boost 1.74's mixed rational/integer operator== recurses forever under C++20
// rewritten comparisons (GCC picks the reversed template). Exact overloads win.
inline bool operator==(const rational<std::int64_t> & a, std::int64_t b)
{
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t> & a, int b) { return a == static_cast<std::int64_t>(b); }

} // namespace boost

namespace pglab
{

using Rational = boost::rational<std::int64_t>;

inline auto to_string(const Rational & r) -> std::string
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---------------------------------------------------------------------------
// degree patterns

/// Degree constraint for one position of an (l_1,...,l_k)-face pattern.
struct DegreeSpec {
    int lo = 0;
    int hi = 1 << 30;

    auto accepts(int d) const -> bool { return lo <= d && d <= hi; }
};

inline constexpr auto exactly(int d) -> DegreeSpec { return { d, d }; }
inline constexpr auto at_least(int d) -> DegreeSpec { return { d, 1 << 30 }; }
inline constexpr auto at_most(int d) -> DegreeSpec { return { 0, d }; }

/// If the face's boundary cycle can be read (from some start, in some
/// direction) so that the degrees fit the pattern, returns the vertices in
/// pattern order.
inline auto match_face_pattern(const PlaneGraph & g, const FaceRecord & f, std::span<const DegreeSpec> pattern)
    -> std::optional<std::vector<int>>
{
    const int k = static_cast<int>(pattern.size());
    if (f.degree != k || ! f.is_cycle())
        return std::nullopt;
    for (int dir : { 1, -1 })
        for (int start = 0; start < k; ++start) {
            std::vector<int> order;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                int v = f.boundary[((start + dir * i) % k + k) % k];
                ok = pattern[i].accepts(g.degree(v));
                order.push_back(v);
            }
            if (ok)
                return order;
        }
    return std::nullopt;
}

inline auto matches(const PlaneGraph & g, const FaceRecord & f, std::initializer_list<DegreeSpec> pattern) -> bool
{
    return match_face_pattern(g, f, std::span<const DegreeSpec>{ pattern.begin(), pattern.size() }).has_value();
}

// ---------------------------------------------------------------------------
// face classes

/// F_k (disjoint from C0), F_k' (one C0 vertex), F_k'' (two C0 vertices).
enum class FaceKind { disjoint, one_vertex, two_vertices, outer, other };

struct FaceClass {
    FaceKind kind = FaceKind::other;
    int degree = 0;
    int c0_hits = 0;
};

inline auto face_kind_name(FaceKind kind) -> const char *
{
    switch (kind) {
    case FaceKind::disjoint: return "F";
    case FaceKind::one_vertex: return "F'";
    case FaceKind::two_vertices: return "F''";
    case FaceKind::outer: return "C0";
    case FaceKind::other: return "other";
    }
    return "?";
}

inline auto c0_membership(const PlaneGraph & g) -> std::vector<bool>
{
    std::vector<bool> on_c0(g.vertex_count(), false);
    for (int v : g.outer_face().boundary)
        on_c0[v] = true;
    return on_c0;
}

/// Classes with C0 taken to be the outer face boundary.
inline auto face_classes(const PlaneGraph & g) -> std::vector<FaceClass>
{
    auto on_c0 = c0_membership(g);
    std::vector<FaceClass> classes;
    for (const auto & f : g.faces()) {
        FaceClass c;
        c.degree = f.degree;
        for (int v : f.vertex_set())
            c.c0_hits += on_c0[v];
        if (f.is_outer)
            c.kind = FaceKind::outer;
        else if (c.c0_hits == 0)
            c.kind = FaceKind::disjoint;
        else if (c.c0_hits == 1)
            c.kind = FaceKind::one_vertex;
        else if (c.c0_hits == 2)
            c.kind = FaceKind::two_vertices;
        else
            c.kind = FaceKind::other;
        classes.push_back(c);
    }
    return classes;
}

/// Throws C0NotOuter unless c0 is exactly the outer face boundary cycle.
inline void require_outer_c0(const PlaneGraph & g, const Cycle & c0)
{
    const auto & outer = g.outer_face();
    auto set = outer.vertex_set();
    std::vector<int> c = c0.vertices;
    std::sort(c.begin(), c.end());
    if (! outer.is_cycle() || set != c || ! is_cycle_of(g, c0))
        throw Error{ Errc::c0_not_outer, "C0 does not bound the outer face" };
}

inline auto face_classes(const PlaneGraph & g, const Cycle & c0) -> std::vector<FaceClass>
{
    require_outer_c0(g, c0);
    return face_classes(g);
}

/// Returns the embedding re-rooted so that the facial cycle c0 bounds the
/// outer face; throws C0NotOuter when c0 bounds no face.
inline auto rooted_at(const PlaneGraph & g, const Cycle & c0) -> PlaneGraph
{
    std::vector<int> c = c0.vertices;
    std::sort(c.begin(), c.end());
    for (const auto & f : g.faces())
        if (f.is_cycle() && f.degree == c0.length() && f.vertex_set() == c) {
            auto rooted = g.with_outer_face(f.id);
            require_outer_c0(rooted, c0);
            return rooted;
        }
    throw Error{ Errc::c0_not_outer, "C0 is not a facial cycle" };
}

// ---------------------------------------------------------------------------
// pendant structure and special faces

struct PendantStructure {
    /// pendant_faces[v]: inner 3-faces f with v not on f and v adjacent to a
    /// 3-vertex of f; each face listed once.
    std::vector<std::vector<int>> pendant_faces;
    /// (3-vertex x, 3-face f containing x) -> the neighbor of x off f.
    std::map<std::pair<int, int>, int> pendant_neighbor;
    /// number of pendant special 3-faces per vertex; filled by special_faces
    std::vector<int> h;

    auto neighbor_off(int x, int face) const -> int
    {
        auto it = pendant_neighbor.find({ x, face });
        return it == pendant_neighbor.end() ? -1 : it->second;
    }
};

inline auto pendant_structure(const PlaneGraph & g) -> PendantStructure
{
    PendantStructure ps;
    ps.pendant_faces.assign(g.vertex_count(), {});
    ps.h.assign(g.vertex_count(), 0);
    for (const auto & f : g.faces()) {
        if (f.is_outer || f.degree != 3)
            continue;
        for (int x : f.boundary) {
            if (g.degree(x) != 3)
                continue;
            for (int y : g.neighbors(x)) {
                if (f.contains(y))
                    continue;
                ps.pendant_neighbor[{ x, f.id }] = y;
                auto & list = ps.pendant_faces[y];
                if (std::find(list.begin(), list.end(), f.id) == list.end())
                    list.push_back(f.id);
            }
        }
    }
    for (auto & list : ps.pendant_faces)
        std::sort(list.begin(), list.end());
    return ps;
}

enum class SpecialKind { t335, t344, t355 };

inline auto special_kind_name(SpecialKind kind) -> const char *
{
    switch (kind) {
    case SpecialKind::t335: return "(3,3,5-)";
    case SpecialKind::t344: return "(3,4,4)";
    case SpecialKind::t355: return "(3,5,5)";
    }
    return "?";
}

struct SpecialFaceInfo {
    SpecialKind kind = SpecialKind::t335;
    int generation = 0; // 0 for the base kinds, round index for (3,5,5)

    friend auto operator==(const SpecialFaceInfo &, const SpecialFaceInfo &) -> bool = default;
};

struct SpecialFaceSet {
    std::vector<std::optional<SpecialFaceInfo>> faces;

    auto is_special(int face) const -> bool { return faces[face].has_value(); }

    friend auto operator==(const SpecialFaceSet &, const SpecialFaceSet &) -> bool = default;
};

inline auto is_335(const PlaneGraph & g, const FaceRecord & f) -> bool
{
    return matches(g, f, { exactly(3), exactly(3), at_most(5) });
}

inline auto is_344(const PlaneGraph & g, const FaceRecord & f) -> bool
{
    return matches(g, f, { exactly(3), exactly(4), exactly(4) });
}

inline auto is_355(const PlaneGraph & g, const FaceRecord & f) -> bool
{
    return matches(g, f, { exactly(3), exactly(5), exactly(5) });
}

inline auto count_special(const std::vector<int> & faces, const SpecialFaceSet & set) -> int
{
    return static_cast<int>(std::count_if(faces.begin(), faces.end(), [&](int f) { return set.is_special(f); }));
}

/// Least fixpoint. Each round adds, simultaneously, every (3,5,5)-face of F_3
/// whose two 5-vertices have six pendant special faces altogether under the
/// set of the previous round; `reverse_order` only changes the scan order.
inline auto special_faces(const PlaneGraph & g, const std::vector<FaceClass> & classes, PendantStructure & ps,
    bool reverse_order = false) -> SpecialFaceSet
{
    SpecialFaceSet set;
    set.faces.assign(g.face_count(), std::nullopt);
    std::vector<int> order(g.face_count());
    std::iota(order.begin(), order.end(), 0);
    if (reverse_order)
        std::reverse(order.begin(), order.end());

    for (int id : order) {
        const auto & f = g.face(id);
        if (f.degree != 3 || classes[id].kind != FaceKind::disjoint)
            continue;
        if (is_335(g, f))
            set.faces[id] = SpecialFaceInfo{ SpecialKind::t335, 0 };
        else if (is_344(g, f))
            set.faces[id] = SpecialFaceInfo{ SpecialKind::t344, 0 };
    }

    for (int round = 1;; ++round) {
        std::vector<int> added;
        for (int id : order) {
            const auto & f = g.face(id);
            if (set.is_special(id) || f.degree != 3 || classes[id].kind != FaceKind::disjoint || ! is_355(g, f))
                continue;
            int total = 0;
            for (int v : f.boundary)
                if (g.degree(v) == 5)
                    total += count_special(ps.pendant_faces[v], set);
            if (total >= 6)
                added.push_back(id);
        }
        if (added.empty())
            break;
        for (int id : added)
            set.faces[id] = SpecialFaceInfo{ SpecialKind::t355, round };
    }

    for (int v = 0; v < g.vertex_count(); ++v)
        ps.h[v] = count_special(ps.pendant_faces[v], set);
    return set;
}

// ---------------------------------------------------------------------------
// charges

enum class ElementKind { vertex, face };

struct Transfer {
    int giver = 0;    // element index
    int receiver = 0; // element index
    Rational amount;
    std::string rule;
};

/// Exact charges on vertices (elements 0..n-1) and faces (n..n+F-1).
struct ChargeLedger {
    int vertex_count = 0;
    int outer_face = 0;
    std::vector<Rational> initial;
    std::vector<Rational> charge;
    std::vector<Transfer> transfers;

    auto vertex_element(int v) const -> int { return v; }
    auto face_element(int f) const -> int { return vertex_count + f; }
    auto kind(int element) const -> ElementKind { return element < vertex_count ? ElementKind::vertex : ElementKind::face; }
    auto local_id(int element) const -> int { return element < vertex_count ? element : element - vertex_count; }
    auto vertex_charge(int v) const -> Rational { return charge[v]; }
    auto face_charge(int f) const -> Rational { return charge[vertex_count + f]; }

    void transfer(int giver, int receiver, Rational amount, std::string rule)
    {
        charge[giver] -= amount;
        charge[receiver] += amount;
        transfers.push_back(Transfer{ giver, receiver, amount, std::move(rule) });
    }

    auto incoming(int element) const -> std::vector<Transfer>
    {
        std::vector<Transfer> result;
        for (const auto & t : transfers)
            if (t.receiver == element)
                result.push_back(t);
        return result;
    }

    auto outgoing(int element) const -> std::vector<Transfer>
    {
        std::vector<Transfer> result;
        for (const auto & t : transfers)
            if (t.giver == element)
                result.push_back(t);
        return result;
    }
};

/// mu(v) = 2d(v) - 6, mu(f) = d(f) - 6, mu(C0) = d(C0) + 6.
inline auto initial_charges(const PlaneGraph & g) -> ChargeLedger
{
    ChargeLedger ledger;
    ledger.vertex_count = g.vertex_count();
    ledger.outer_face = g.outer_face_id();
    for (int v = 0; v < g.vertex_count(); ++v)
        ledger.initial.emplace_back(2 * g.degree(v) - 6);
    for (const auto & f : g.faces())
        ledger.initial.emplace_back(f.is_outer ? f.degree + 6 : f.degree - 6);
    ledger.charge = ledger.initial;
    return ledger;
}

/// Everything the rules consult, computed once before any rule fires.
struct DischargeContext {
    std::vector<bool> on_c0;
    std::vector<FaceClass> classes;
    PendantStructure pendant;
    SpecialFaceSet special;
    std::vector<bool> on_3face;   // incident with some 3-face
    std::vector<bool> on_triangle; // on some 3-cycle
};

inline auto make_context(const PlaneGraph & g) -> DischargeContext
{
    DischargeContext ctx;
    ctx.on_c0 = c0_membership(g);
    ctx.classes = face_classes(g);
    ctx.pendant = pendant_structure(g);
    ctx.special = special_faces(g, ctx.classes, ctx.pendant);
    ctx.on_3face.assign(g.vertex_count(), false);
    for (const auto & f : g.faces())
        if (f.degree == 3)
            for (int v : f.boundary)
                ctx.on_3face[v] = true;
    ctx.on_triangle.assign(g.vertex_count(), false);
    for_each_cycle(g, 3, [&](const std::vector<int> & c) {
        for (int v : c)
            ctx.on_triangle[v] = true;
        return true;
    });
    return ctx;
}

namespace detail
{

inline auto half(std::int64_t n) -> Rational { return Rational{ n, 2 }; }

/// The inner face sharing the most edges with the outer boundary (ties:
/// smallest id).
inline auto face_along_c0(const PlaneGraph & g) -> int
{
    const auto & walk = g.outer_face().boundary;
    std::map<int, int> shared;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        int a = walk[i], b = walk[(i + 1) % walk.size()];
        int other = g.face_of_dart(b, a);
        if (other != g.outer_face_id())
            ++shared[other];
    }
    int best = -1, best_count = 0;
    for (auto [face, count] : shared)
        if (count > best_count) {
            best = face;
            best_count = count;
        }
    return best;
}

} // namespace detail

/// Runs every rule once per (giver, receiver) and returns the itemized ledger.
inline auto apply_rules(const PlaneGraph & g, const DischargeContext & ctx) -> ChargeLedger
{
    using detail::half;
    ChargeLedger ledger = initial_charges(g);
    const auto & cls = ctx.classes;
    std::map<std::pair<int, int>, std::string> seen;

    auto give = [&](int giver, int receiver, Rational amount, const char * rule) {
        auto [it, fresh] = seen.emplace(std::pair{ giver, receiver }, rule);
        if (! fresh)
            throw Error{ Errc::unclassifiable_situation,
                "element " + std::to_string(giver) + " matches " + it->second + " and " + rule + " for receiver "
                    + std::to_string(receiver) };
        ledger.transfer(giver, receiver, amount, rule);
    };
    auto face_el = [&](int f) { return ledger.face_element(f); };

    for (int u = 0; u < g.vertex_count(); ++u) {
        const int d = g.degree(u);
        const int h = ctx.pendant.h[u];
        auto incident = g.faces_at(u);

        if (ctx.on_c0[u]) {
            // R2
            for (int f : incident) {
                if (g.face(f).is_outer)
                    continue;
                const auto & c = cls[f];
                if (c.degree == 4 && c.kind == FaceKind::two_vertices)
                    give(u, face_el(f), 1, "R2");
                else if ((c.degree == 3 && c.kind == FaceKind::two_vertices)
                    || (c.degree == 4 && c.kind == FaceKind::one_vertex))
                    give(u, face_el(f), half(3), "R2");
                else if (c.degree == 3 && c.kind == FaceKind::one_vertex)
                    give(u, face_el(f), 3, "R2");
            }
            for (int f : ctx.pendant.pendant_faces[u])
                if (cls[f].kind == FaceKind::disjoint)
                    give(u, face_el(f), 1, "R2");
            continue;
        }

        std::vector<int> tri, quad;
        for (int f : incident) {
            if (cls[f].kind != FaceKind::disjoint)
                continue;
            if (cls[f].degree == 3)
                tri.push_back(f);
            else if (cls[f].degree == 4)
                quad.push_back(f);
        }

        if (d == 4) {
            for (int f : tri)
                give(u, face_el(f), matches(g, g.face(f), { exactly(3), exactly(4), at_most(5) }) ? half(3) : Rational{ 1 },
                    "R1.1.1");
            if (ctx.on_3face[u]) {
                for (int f : quad)
                    if (matches(g, g.face(f), { exactly(3), exactly(4), exactly(3), at_least(5) }))
                        give(u, face_el(f), 1, "R1.1.2");
            }
            else
                for (int f : quad)
                    give(u, face_el(f), half(1), "R1.1.2");
        }
        else if (d == 5) {
            for (int f : tri) {
                if (h == 3)
                    give(u, face_el(f), 1, "R1.2.1");
                else if (h == 2)
                    give(u, face_el(f), half(3), "R1.2.1");
                else if (h <= 1)
                    give(u, face_el(f), 2, "R1.2.1");
            }
            for (int f : quad) {
                const auto & face = g.face(f);
                if (matches(g, face, { exactly(3), exactly(3), exactly(5), at_least(5) }))
                    give(u, face_el(f), 1, "R1.2.2");
                else if (ctx.on_3face[u])
                    give(u, face_el(f), 1, "R1.2.2");
                else if (matches(g, face, { exactly(3), exactly(4), exactly(5), exactly(5) }))
                    give(u, face_el(f), Rational{ 3, 4 }, "R1.2.2");
                else
                    give(u, face_el(f), Rational{ 2, 3 }, "R1.2.2");
            }
        }
        else if (d == 6) {
            for (int f : tri) {
                if (h <= 2)
                    give(u, face_el(f), 3, "R1.3");
                else if (h == 3)
                    give(u, face_el(f), half(5), "R1.3");
                else if (h == 4)
                    give(u, face_el(f), 2, "R1.3");
            }
        }

        for (int f : ctx.pendant.pendant_faces[u]) {
            if (cls[f].kind != FaceKind::disjoint)
                continue;
            if (d >= 7)
                give(u, face_el(f), 1, "R1.4");
            else if (d == 5 || d == 6)
                give(u, face_el(f), ctx.special.is_special(f) ? Rational{ 1 } : half(1), "R1.4");
        }

        if (d >= 6)
            for (int f : quad)
                give(u, face_el(f), 1, "R1.5");
        if (d >= 7)
            for (int f : tri)
                give(u, face_el(f), 3, "R1.5");

        if (d >= 4 && ctx.on_triangle[u])
            for (int f : incident)
                if (cls[f].degree == 4 && cls[f].kind == FaceKind::one_vertex)
                    give(u, face_el(f), half(1), "R1.6");
    }

    // R3
    const auto & outer = g.outer_face();
    const int outer_el = face_el(outer.id);
    int two_vertices = 0;
    for (int v : outer.vertex_set()) {
        if (g.degree(v) == 2) {
            give(outer_el, v, 2, "R3");
            ++two_vertices;
        }
        else if (g.degree(v) == 3)
            give(outer_el, v, half(3), "R3");
        else if (g.degree(v) == 4)
            give(outer_el, v, 1, "R3");
    }
    if (outer.degree == 7 && outer.is_cycle() && two_vertices == 6) {
        int payer = detail::face_along_c0(g);
        if (payer >= 0)
            give(face_el(payer), outer_el, 1, "R3");
    }
    return ledger;
}

inline auto apply_rules(const PlaneGraph & g) -> ChargeLedger
{
    return apply_rules(g, make_context(g));
}

// ---------------------------------------------------------------------------
// audit

struct NegativeElement {
    ElementKind kind = ElementKind::vertex;
    int id = 0;
    Rational charge;
};

struct AuditReport {
    Rational initial_sum;
    Rational final_sum;
    Rational outer_charge;
    bool outer_positive = false;
    bool conserved = false;
    std::vector<NegativeElement> negatives;
    bool graph_is_c0 = false; // G = C0 with d(C0) = 7, the trivially superextendable case
};

inline auto audit(const PlaneGraph & g, const ChargeLedger & ledger) -> AuditReport
{
    AuditReport report;
    for (const auto & r : ledger.initial)
        report.initial_sum += r;
    for (const auto & r : ledger.charge)
        report.final_sum += r;
    report.conserved = report.final_sum == report.initial_sum;
    report.outer_charge = ledger.face_charge(g.outer_face_id());
    report.outer_positive = report.outer_charge > 0;
    for (std::size_t e = 0; e < ledger.charge.size(); ++e)
        if (ledger.charge[e] < 0) {
            int el = static_cast<int>(e);
            report.negatives.push_back(NegativeElement{ ledger.kind(el), ledger.local_id(el), ledger.charge[e] });
        }
    const auto & outer = g.outer_face();
    report.graph_is_c0 = outer.degree == 7 && outer.is_cycle() && g.vertex_count() == 7 && g.edge_count() == 7;
    return report;
}

inline auto audit(const PlaneGraph & g) -> AuditReport
{
    return audit(g, apply_rules(g));
}

/// `NEG <vertex|face> <id> <p/q>` per negative element (ids 1-based), then
/// `SUM initial=p/q final=p/q outer=p/q`.
inline void write_audit(std::ostream & out, const AuditReport & report)
{
    for (const auto & neg : report.negatives)
        out << "NEG " << (neg.kind == ElementKind::vertex ? "vertex" : "face") << ' ' << neg.id + 1 << ' '
            << to_string(neg.charge) << '\n';
    out << "SUM initial=" << to_string(report.initial_sum) << " final=" << to_string(report.final_sum)
        << " outer=" << to_string(report.outer_charge) << '\n';
    if (report.graph_is_c0)
        out << "NOTE G=C0 with t2=7; trivially superextendable\n";
}

/// mu*(C0) >= 6 - d(C0)/2 - t2/2 after R3, from 2t2 + 3/2 t3 + t4 <= 3/2 d(C0) + t2/2.
inline auto outer_charge_lower_bound(int c0_degree, int two_vertices) -> Rational
{
    return Rational{ 6 } - Rational{ c0_degree, 2 } - Rational{ two_vertices, 2 };
}

} // namespace pglab

#pragma once

// Reading and writing plane graphs (planar_code bytes, rotlist text),
// small-graph enumeration, and corpus sweeps on a worker pool.

#include <pglab/class_g.hpp>
#include <pglab/coloring.hpp>
#include <pglab/discharging.hpp>
#include <pglab/reducible.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/isomorphism.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

namespace pglab
{

// ---------------------------------------------------------------------------
// planar_code

inline constexpr std::string_view planar_code_header = ">>planar_code<<";

/// One record per graph; records that fail plane-graph validation are
/// skipped and reported through `diagnostic` (if given).
inline auto parse_planar_code(std::string_view bytes, const std::function<void(const std::string &)> & diagnostic = {})
    -> std::vector<PlaneGraph>
{
    if (bytes.substr(0, planar_code_header.size()) != planar_code_header)
        throw Error{ Errc::bad_header, "missing >>planar_code<< header" };
    std::vector<PlaneGraph> graphs;
    std::size_t pos = planar_code_header.size();
    std::size_t record = 0;
    auto next = [&]() -> int {
        if (pos >= bytes.size())
            throw Error{ Errc::truncated_record, "record " + std::to_string(record + 1) + " ends early" };
        return static_cast<unsigned char>(bytes[pos++]);
    };
    while (pos < bytes.size()) {
        const int n = next();
        std::vector<std::vector<int>> rotation(n);
        bool in_range = true;
        for (int v = 0; v < n; ++v)
            for (int w = next(); w != 0; w = next()) {
                in_range = in_range && w <= n;
                rotation[v].push_back(w - 1);
            }
        ++record;
        try {
            if (n == 0)
                throw Error{ Errc::invalid_rotation, "empty graph" };
            if (! in_range)
                throw Error{ Errc::invalid_rotation, "neighbor id out of range" };
            Dart outer = rotation[0].empty() ? Dart{ 0, 0 } : Dart{ 0, rotation[0][0] };
            graphs.push_back(PlaneGraph::from_rotation(rotation, outer));
        }
        catch (const Error & e) {
            if (diagnostic)
                diagnostic("record " + std::to_string(record) + " skipped (InvalidRotation): " + e.what());
        }
    }
    return graphs;
}

inline auto emit_planar_code(const std::vector<PlaneGraph> & graphs) -> std::string
{
    std::string out{ planar_code_header };
    for (const auto & g : graphs) {
        if (g.vertex_count() > 255)
            throw Error{ Errc::too_large, "planar_code supports at most 255 vertices" };
        // the first dart of vertex 1 must bound the outer face
        auto rot = g.rotations();
        if (! rot[0].empty()) {
            auto first = std::find_if(rot[0].begin(), rot[0].end(), [&](int w) { return g.face_of_dart(0, w) == g.outer_face_id(); });
            if (first == rot[0].end())
                throw Error{ Errc::bad_outer_edge, "vertex 1 is not on the outer face; planar_code cannot record it" };
            std::rotate(rot[0].begin(), first, rot[0].end());
        }
        out.push_back(static_cast<char>(g.vertex_count()));
        for (const auto & row : rot) {
            for (int w : row)
                out.push_back(static_cast<char>(w + 1));
            out.push_back('\0');
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// rotlist: `n <n> outer <u> <v>` then `<v>: <w1> ... <wk>`, 1-based

namespace detail
{

inline auto syntax_error(int line, const std::string & what) -> Error
{
    return Error{ Errc::syntax_error, "line " + std::to_string(line) + ": " + what };
}

inline auto strip(std::string s) -> std::string
{
    if (auto hash = s.find('#'); hash != std::string::npos)
        s.erase(hash);
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

} // namespace detail

/// Parses every graph in the text (blocks may follow each other; blank lines
/// and `#` comments are ignored).
inline auto parse_rotlist_all(std::string_view text) -> std::vector<PlaneGraph>
{
    std::vector<PlaneGraph> graphs;
    std::istringstream in{ std::string(text) };
    std::string raw;
    int line = 0;
    auto next_line = [&](std::string & out) {
        while (std::getline(in, raw)) {
            ++line;
            out = detail::strip(raw);
            if (! out.empty())
                return true;
        }
        return false;
    };
    std::string header;
    while (next_line(header)) {
        std::istringstream hs{ header };
        std::string kw_n, kw_outer, extra;
        int n = 0, ou = 0, ov = 0;
        if (! (hs >> kw_n >> n >> kw_outer >> ou >> ov) || kw_n != "n" || kw_outer != "outer" || (hs >> extra))
            throw detail::syntax_error(line, "expected 'n <n> outer <u> <v>'");
        if (n < 1)
            throw detail::syntax_error(line, "vertex count must be positive");
        std::vector<std::vector<int>> rotation(n);
        std::vector<bool> seen(n, false);
        for (int k = 0; k < n; ++k) {
            std::string body;
            if (! next_line(body))
                throw detail::syntax_error(line + 1, "missing rotation line");
            auto colon = body.find(':');
            if (colon == std::string::npos)
                throw detail::syntax_error(line, "expected '<v>: <neighbors>'");
            int v = 0;
            try {
                std::size_t used = 0;
                auto label = detail::strip(body.substr(0, colon));
                v = std::stoi(label, &used);
                if (used != label.size())
                    throw std::invalid_argument("label");
            }
            catch (const std::exception &) {
                throw detail::syntax_error(line, "bad vertex label");
            }
            if (v < 1 || v > n || seen[v - 1])
                throw detail::syntax_error(line, "vertex label out of range or repeated");
            seen[v - 1] = true;
            std::istringstream ns{ body.substr(colon + 1) };
            std::string token;
            while (ns >> token) {
                int w = 0;
                try {
                    std::size_t used = 0;
                    w = std::stoi(token, &used);
                    if (used != token.size())
                        throw std::invalid_argument("token");
                }
                catch (const std::exception &) {
                    throw detail::syntax_error(line, "bad neighbor '" + token + "'");
                }
                if (w < 1 || w > n)
                    throw detail::syntax_error(line, "neighbor out of range");
                auto & row = rotation[v - 1];
                if (std::find(row.begin(), row.end(), w - 1) != row.end())
                    throw detail::syntax_error(line, "duplicate neighbor " + std::to_string(w));
                row.push_back(w - 1);
            }
        }
        // an edgeless graph has no outer dart and is written "outer 0 0"
        bool edgeless = std::all_of(rotation.begin(), rotation.end(), [](const auto & row) { return row.empty(); });
        if (edgeless && ou == 0 && ov == 0) {
            graphs.push_back(PlaneGraph::from_rotation(rotation, Dart{}));
            continue;
        }
        if (ou < 1 || ou > n || ov < 1 || ov > n)
            throw detail::syntax_error(line, "outer edge out of range");
        graphs.push_back(PlaneGraph::from_rotation(rotation, Dart{ ou - 1, ov - 1 }));
    }
    return graphs;
}

inline auto parse_rotlist(std::string_view text) -> PlaneGraph
{
    auto graphs = parse_rotlist_all(text);
    if (graphs.size() != 1)
        throw Error{ Errc::syntax_error, "expected exactly one graph, found " + std::to_string(graphs.size()) };
    return std::move(graphs.front());
}

inline auto emit_rotlist(const PlaneGraph & g) -> std::string
{
    std::ostringstream out;
    auto [u, v] = g.outer_edge();
    out << "n " << g.vertex_count() << " outer " << u + 1 << ' ' << v + 1 << '\n';
    for (int x = 0; x < g.vertex_count(); ++x) {
        out << x + 1 << ':';
        for (int w : g.rotation(x))
            out << ' ' << w + 1;
        out << '\n';
    }
    return out.str();
}

enum class GraphFormat { planar_code, rotlist };

inline auto read_graphs(std::string_view bytes, GraphFormat format, const std::function<void(const std::string &)> & diagnostic = {})
    -> std::vector<PlaneGraph>
{
    return format == GraphFormat::planar_code ? parse_planar_code(bytes, diagnostic) : parse_rotlist_all(bytes);
}

inline auto read_file(const std::string & path) -> std::string
{
    std::ifstream in{ path, std::ios::binary };
    if (! in)
        throw Error{ Errc::io_error, "cannot open " + path };
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// planar_code when the bytes start with its header, rotlist otherwise.
inline auto sniff_format(std::string_view bytes) -> GraphFormat
{
    return bytes.substr(0, planar_code_header.size()) == planar_code_header ? GraphFormat::planar_code : GraphFormat::rotlist;
}

// ---------------------------------------------------------------------------
// small-graph enumeration

namespace detail
{

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
    boost::property<boost::vertex_index_t, int>, boost::property<boost::edge_index_t, int>>;

inline auto to_boost(const SimpleGraph & g) -> BoostGraph
{
    BoostGraph b(g.vertex_count());
    int index = 0;
    for (auto [u, v] : g.edges()) {
        auto e = boost::add_edge(u, v, b).first;
        boost::put(boost::edge_index, b, e, index++);
    }
    return b;
}

/// Isomorphism-invariant fingerprint used to bucket candidates.
inline auto fingerprint(const SimpleGraph & g) -> std::vector<int>
{
    const int n = g.vertex_count();
    std::vector<std::vector<int>> local(n);
    for (int v = 0; v < n; ++v) {
        int tri = 0;
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                tri += g.adjacent(nb[i], nb[j]);
        local[v] = { g.degree(v), tri };
        std::vector<int> nd;
        for (int w : nb)
            nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        local[v].insert(local[v].end(), nd.begin(), nd.end());
    }
    std::sort(local.begin(), local.end());
    std::vector<int> key{ n, g.edge_count() };
    for (const auto & l : local) {
        key.push_back(static_cast<int>(l.size()));
        key.insert(key.end(), l.begin(), l.end());
    }
    return key;
}

struct FingerprintHash {
    auto operator()(const std::vector<int> & key) const -> std::size_t
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : key)
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

/// Adds graphs to a set of isomorphism-class representatives.
class IsoDedupe {
public:
    auto insert(const SimpleGraph & g) -> bool
    {
        auto & bucket = buckets_[fingerprint(g)];
        auto b = to_boost(g);
        for (int index : bucket)
            if (boost::isomorphism(b, boosted_[index]))
                return false;
        bucket.push_back(static_cast<int>(graphs_.size()));
        graphs_.push_back(g);
        boosted_.push_back(std::move(b));
        return true;
    }

    auto graphs() const -> const std::vector<SimpleGraph> & { return graphs_; }

private:
    std::unordered_map<std::vector<int>, std::vector<int>, FingerprintHash> buckets_;
    std::vector<SimpleGraph> graphs_;
    std::vector<BoostGraph> boosted_;
};

} // namespace detail

/// A plane embedding of a planar graph, or nullopt when it is not planar.
/// The outer face is the one left of the first dart at vertex 1.
inline auto embed(const SimpleGraph & g) -> std::optional<PlaneGraph>
{
    const int n = g.vertex_count();
    if (n == 0)
        return std::nullopt;
    auto b = detail::to_boost(g);
    using Edge = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(n);
    bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = b,
        boost::boyer_myrvold_params::embedding = boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, b)));
    if (! planar)
        return std::nullopt;
    std::vector<std::vector<int>> rotation(n);
    for (int v = 0; v < n; ++v)
        for (auto e : embedding[v]) {
            int a = static_cast<int>(boost::source(e, b)), c = static_cast<int>(boost::target(e, b));
            rotation[v].push_back(a == v ? c : a);
        }
    Dart outer = rotation[0].empty() ? Dart{ 0, 0 } : Dart{ 0, rotation[0][0] };
    return PlaneGraph::from_rotation(rotation, outer);
}

inline constexpr int enumeration_limit = 8;

/// Connected simple graphs on exactly n vertices, one per isomorphism class,
/// optionally only the planar ones. Built by adding a vertex to every graph
/// on n-1 vertices (every connected graph has a non-cut vertex).
inline auto connected_graphs(int n, bool planar_only) -> std::vector<SimpleGraph>
{
    if (n < 1)
        return {};
    if (n > enumeration_limit)
        throw Error{ Errc::too_large, "enumeration is limited to " + std::to_string(enumeration_limit) + " vertices" };
    std::vector<SimpleGraph> level{ SimpleGraph{ 1 } };
    for (int k = 2; k <= n; ++k) {
        detail::IsoDedupe seen;
        for (const auto & base : level)
            for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
                SimpleGraph g{ k };
                for (auto [u, v] : base.edges())
                    g.add_edge(u, v);
                for (int v = 0; v < k - 1; ++v)
                    if (mask & (1u << v))
                        g.add_edge(v, k - 1);
                if (planar_only && g.edge_count() > 3 * k - 6 && k >= 3)
                    continue;
                if (planar_only && ! embed(g))
                    continue;
                seen.insert(g);
            }
        level = seen.graphs();
    }
    return level;
}

/// Connected planar graphs on exactly n vertices up to isomorphism, each with
/// one embedding.
inline auto enumerate_small(int n) -> std::vector<PlaneGraph>
{
    std::vector<PlaneGraph> out;
    for (const auto & g : connected_graphs(n, true))
        out.push_back(*embed(g));
    return out;
}

// ---------------------------------------------------------------------------
// superextension runs

struct SuperextensionTally {
    int pinnings = 0;
    int sat = 0;
    std::vector<std::vector<int>> failures; // C0 colors that did not superextend
};

/// Canonical-least facial-or-not cycle of the given length, if any.
inline auto least_cycle(const SimpleGraph & g, int length) -> std::optional<Cycle>
{
    auto cycles = cycles_of_length(g, length);
    if (cycles.empty())
        return std::nullopt;
    return *std::min_element(cycles.begin(), cycles.end());
}

/// Tries every valid pinning of C0 when there are at most `budget`, otherwise
/// `budget` pinnings at an even stride through the sorted list.
inline auto superextend_pinnings(const SimpleGraph & g, const Cycle & c0, int budget) -> SuperextensionTally
{
    auto all = valid_cycle_pinnings(g, c0);
    std::vector<std::vector<int>> chosen;
    if (static_cast<int>(all.size()) <= budget)
        chosen = all;
    else
        for (int i = 0; i < budget; ++i)
            chosen.push_back(all[static_cast<std::size_t>(i) * all.size() / static_cast<std::size_t>(budget)]);
    SuperextensionTally tally;
    for (const auto & colors : chosen) {
        ++tally.pinnings;
        if (superextend(g, c0, colors))
            ++tally.sat;
        else
            tally.failures.push_back(colors);
    }
    return tally;
}

inline constexpr int triangle_pinning_budget = 27;
inline constexpr int seven_cycle_pinning_budget = 64;

// ---------------------------------------------------------------------------
// sweeps

enum class SweepCheck { membership, color_200, superextend_all_triangles, discharge_audit, lemma_scan };

inline auto check_name(SweepCheck c) -> std::string_view
{
    switch (c) {
    case SweepCheck::membership: return "membership";
    case SweepCheck::color_200: return "color_200";
    case SweepCheck::superextend_all_triangles: return "superextend_all_triangles";
    case SweepCheck::discharge_audit: return "discharge_audit";
    case SweepCheck::lemma_scan: return "lemma_scan";
    }
    return "?";
}

inline auto parse_check(std::string_view name) -> SweepCheck
{
    for (auto c : { SweepCheck::membership, SweepCheck::color_200, SweepCheck::superextend_all_triangles,
             SweepCheck::discharge_audit, SweepCheck::lemma_scan })
        if (check_name(c) == name)
            return c;
    throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

struct CorpusRecord {
    int index = 0;
    PlaneGraph graph;
    std::vector<std::pair<std::string, std::string>> verdicts; // in check order

    bool member = true;
    bool has_coloring_result = false;
    bool all_sat = true;
    bool negative = false;
    std::map<LemmaId, int> matches;
};

struct SweepSummary {
    int total = 0, members = 0, sat = 0, unsat = 0, negcharge = 0;
    std::map<LemmaId, int> matches;
    std::string run_id;
};

namespace detail
{

inline auto run_checks(int index, const PlaneGraph & g, const std::vector<SweepCheck> & checks) -> CorpusRecord
{
    CorpusRecord r{ .index = index, .graph = g };
    auto has = [&](SweepCheck c) { return std::find(checks.begin(), checks.end(), c) != checks.end(); };
    const auto abstract = g.abstract();
    try {
        if (has(SweepCheck::membership)) {
            r.member = is_member(abstract);
            r.verdicts.emplace_back("membership", r.member ? "member" : "non-member");
            if (! r.member)
                return r;
        }
        if (has(SweepCheck::color_200)) {
            ExtensionProblem p{ .graph = abstract };
            bool sat = solve(p, { .break_symmetry = true }).has_value();
            r.verdicts.emplace_back("color_200", sat ? "SAT" : "UNSAT");
            r.has_coloring_result = true;
            r.all_sat = r.all_sat && sat;
        }
        if (has(SweepCheck::superextend_all_triangles)) {
            std::string verdict;
            for (auto [length, budget] : { std::pair{ 3, triangle_pinning_budget }, std::pair{ 7, seven_cycle_pinning_budget } }) {
                auto c0 = least_cycle(abstract, length);
                if (! c0)
                    continue;
                auto tally = superextend_pinnings(abstract, *c0, budget);
                verdict += (verdict.empty() ? "" : " ") + std::string(length == 3 ? "c3=" : "c7=") + std::to_string(tally.sat)
                    + "/" + std::to_string(tally.pinnings);
                r.has_coloring_result = true;
                r.all_sat = r.all_sat && tally.sat == tally.pinnings;
            }
            r.verdicts.emplace_back("superextend_all_triangles", verdict.empty() ? "none" : verdict);
        }
        if (has(SweepCheck::discharge_audit)) {
            auto report = audit(g);
            r.negative = ! report.negatives.empty();
            r.verdicts.emplace_back("discharge_audit", "neg=" + std::to_string(report.negatives.size()) + " initial="
                + to_string(report.initial_sum) + " final=" + to_string(report.final_sum));
        }
        if (has(SweepCheck::lemma_scan)) {
            int total = 0;
            for (const auto & m : scan_configurations(g)) {
                ++r.matches[m.lemma];
                ++total;
            }
            r.verdicts.emplace_back("lemma_scan", std::to_string(total));
        }
    }
    catch (const std::exception & e) {
        r.verdicts.emplace_back("error", e.what());
    }
    return r;
}

inline auto record_line(const CorpusRecord & r) -> std::string
{
    std::string line = "GRAPH " + std::to_string(r.index + 1) + " n=" + std::to_string(r.graph.vertex_count())
        + " m=" + std::to_string(r.graph.edge_count());
    for (const auto & [name, verdict] : r.verdicts)
        line += " " + name + "=" + (verdict.find(' ') == std::string::npos ? verdict : "[" + verdict + "]");
    return line;
}

inline auto fnv1a(std::string_view text, std::uint64_t h = 1469598103934665603ull) -> std::uint64_t
{
    for (unsigned char c : text)
        h = (h ^ c) * 1099511628211ull;
    return h;
}

} // namespace detail

/// Runs the checks on every graph with `workers` threads. Records come back
/// in input order and the report does not depend on the worker count. A
/// non-member skips the checks after membership.
inline auto sweep(const std::vector<PlaneGraph> & graphs, const std::vector<SweepCheck> & checks, int workers,
    std::ostream & records, std::ostream & summary_out) -> SweepSummary
{
    std::vector<std::optional<CorpusRecord>> results(graphs.size());
    std::atomic<std::size_t> next{ 0 };
    auto work = [&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++)
            results[i] = detail::run_checks(static_cast<int>(i), graphs[i], checks);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(workers, 1); ++t)
        pool.emplace_back(work);
    work();
    for (auto & t : pool)
        t.join();

    SweepSummary s;
    std::uint64_t h = 1469598103934665603ull;
    for (auto c : checks)
        h = detail::fnv1a(check_name(c), h);
    const bool scanned = std::find(checks.begin(), checks.end(), SweepCheck::lemma_scan) != checks.end();
    for (const auto & slot : results) {
        const auto & r = *slot;
        auto line = detail::record_line(r);
        h = detail::fnv1a(line + "\n", h);
        records << line << '\n';
        ++s.total;
        s.members += r.member;
        if (r.has_coloring_result)
            ++(r.all_sat ? s.sat : s.unsat);
        s.negcharge += r.negative;
        for (auto [lemma, count] : r.matches)
            s.matches[lemma] += count;
    }
    std::ostringstream id;
    id << std::hex << std::setw(16) << std::setfill('0') << h;
    s.run_id = id.str();

    summary_out << "# sweep " << s.run_id << '\n';
    summary_out << "TOTAL " << s.total << " MEMBERS " << s.members << " SAT " << s.sat << " UNSAT " << s.unsat
                << " NEGCHARGE " << s.negcharge << '\n';
    if (scanned)
        for (auto id : all_lemmas)
            if (is_scanned(id))
                summary_out << "MATCHES " << lemma_name(id) << ' ' << s.matches[id] << '\n';
    return s;
}

/// File form: records to `path`, summary to `path.summary`.
inline auto sweep_to_file(const std::vector<PlaneGraph> & graphs, const std::vector<SweepCheck> & checks, int workers,
    const std::string & path) -> SweepSummary
{
    std::ofstream records{ path };
    std::ofstream summary{ path + ".summary" };
    if (! records || ! summary)
        throw Error{ Errc::io_error, "cannot write " + path };
    auto s = sweep(graphs, checks, workers, records, summary);
    if (! records || ! summary)
        throw Error{ Errc::io_error, "write to " + path + " failed" };
    return s;
}

} // namespace pglab

// pglab command-line driver.

#include <pglab/pglab.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

namespace
{

using namespace pglab;

struct RunConfig {
    std::string input = "-";
    std::string format = "auto";
    std::string c0;
    std::string dv = "2,0,0";
    int workers = 1;
    int enumeration_cap = default_enumeration_cap;
    int witness_cap = default_witness_cap;
    int samples = 500;
    int pin_budget = 64;
    bool verbose = false;

    // per subcommand
    std::string pin;
    bool all_pins = false;
    bool verify = false;
    std::string lemma;
    int n = 0;
    std::string output_format = "rotlist";
    std::string output;
    std::vector<std::string> checks{ "membership", "color_200", "superextend_all_triangles", "discharge_audit", "lemma_scan" };
};

/// Usage problems detected after parsing; exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

auto load(const RunConfig & cfg) -> std::vector<PlaneGraph>
{
    std::string bytes;
    if (cfg.input == "-")
        bytes.assign(std::istreambuf_iterator<char>(std::cin), {});
    else
        bytes = read_file(cfg.input);
    GraphFormat format;
    if (cfg.format == "auto")
        format = sniff_format(bytes);
    else if (cfg.format == "planar_code")
        format = GraphFormat::planar_code;
    else if (cfg.format == "rotlist")
        format = GraphFormat::rotlist;
    else
        throw UsageError("unknown format '" + cfg.format + "'");
    return read_graphs(bytes, format, [](const std::string & msg) { std::cerr << "warning: " << msg << '\n'; });
}

auto parse_int_list(const std::string & text) -> std::vector<int>
{
    std::vector<int> out;
    std::stringstream in{ text };
    std::string item;
    while (std::getline(in, item, ','))
        try {
            out.push_back(std::stoi(item));
        }
        catch (const std::exception &) {
            throw UsageError("bad number '" + item + "'");
        }
    return out;
}

/// C0 from --c0: an explicit 1-based vertex list, auto-triangle or
/// auto-7cycle. nullopt when the flag is empty.
auto choose_c0(const PlaneGraph & g, const std::string & designation) -> std::optional<Cycle>
{
    if (designation.empty())
        return std::nullopt;
    auto abstract = g.abstract();
    if (designation == "auto-triangle" || designation == "auto-7cycle") {
        auto c = least_cycle(abstract, designation == "auto-triangle" ? 3 : 7);
        if (! c)
            throw UsageError("graph has no " + std::string(designation == "auto-triangle" ? "triangle" : "7-cycle"));
        return c;
    }
    auto ids = parse_int_list(designation);
    for (int & v : ids) {
        if (v < 1 || v > g.vertex_count())
            throw UsageError("C0 vertex out of range");
        --v;
    }
    if (ids.size() != 3 && ids.size() != 7)
        throw UsageError("C0 must be a triangle or a 7-cycle");
    Cycle c{ ids };
    if (! is_cycle_of(abstract, c))
        throw UsageError("C0 vertices do not form a cycle in the given order");
    return c;
}

auto format_cycle(const Cycle & c) -> std::string
{
    std::string s;
    for (int v : c.vertices)
        s += (s.empty() ? "" : " ") + std::to_string(v + 1);
    return s;
}

auto format_colors(const ColorAssignment & a) -> std::string
{
    std::string s;
    for (int c : a.values())
        s += " " + std::to_string(c);
    return s;
}

auto cmd_check(const RunConfig & cfg) -> int
{
    int code = 0;
    for (const auto & g : load(cfg)) {
        auto r = check_membership(g.abstract(), cfg.witness_cap);
        std::cout << "MEMBERSHIP " << (r.is_member ? "member" : "non-member") << " five_cycle=" << (r.has_5_cycle ? "yes" : "no")
                  << " triangle_distance=" << (r.triangle_distance ? std::to_string(*r.triangle_distance) : "inf") << '\n';
        for (const auto & c : r.five_cycles)
            std::cout << "FIVE_CYCLE " << format_cycle(c) << '\n';
        if (r.closest_triangles)
            std::cout << "CLOSEST_TRIANGLES " << format_cycle(r.closest_triangles->first) << " | "
                      << format_cycle(r.closest_triangles->second) << '\n';
        if (! r.is_member)
            code = 1;
    }
    return code;
}

auto cmd_color(const RunConfig & cfg) -> int
{
    auto dv = DeficiencyVector::parse(cfg.dv);
    int code = 0;
    for (const auto & g : load(cfg)) {
        ExtensionProblem p{ .graph = g.abstract(), .deficiencies = dv };
        if (auto a = solve(p, { .break_symmetry = true }))
            std::cout << "SAT" << format_colors(*a) << '\n';
        else {
            std::cout << "UNSAT\n";
            code = 1;
        }
    }
    return code;
}

auto cmd_superextend(const RunConfig & cfg) -> int
{
    int code = 0;
    for (const auto & g : load(cfg)) {
        auto c0 = choose_c0(g, cfg.c0.empty() ? "auto-triangle" : cfg.c0);
        auto abstract = g.abstract();
        std::cout << "C0 " << format_cycle(*c0) << '\n';
        if (cfg.all_pins) {
            auto tally = superextend_pinnings(abstract, *c0, cfg.pin_budget);
            for (const auto & colors : tally.failures) {
                std::cout << "UNSAT pin";
                for (int c : colors)
                    std::cout << ' ' << c;
                std::cout << '\n';
            }
            std::cout << "PINNINGS " << tally.pinnings << " SAT " << tally.sat << " UNSAT " << tally.pinnings - tally.sat << '\n';
            if (tally.sat != tally.pinnings)
                code = 1;
            continue;
        }
        if (cfg.pin.empty())
            throw UsageError("superextend needs --pin v=c,... or --all-pins");
        std::vector<int> colors(c0->vertices.size(), 0);
        std::stringstream in{ cfg.pin };
        std::string item;
        while (std::getline(in, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw UsageError("pin entries look like v=c");
            int v = 0, c = 0;
            try {
                v = std::stoi(item.substr(0, eq)) - 1;
                c = std::stoi(item.substr(eq + 1));
            }
            catch (const std::exception &) {
                throw UsageError("bad pin entry '" + item + "'");
            }
            auto at = std::find(c0->vertices.begin(), c0->vertices.end(), v);
            if (at == c0->vertices.end())
                throw UsageError("pinned vertex " + std::to_string(v + 1) + " is not on C0");
            colors[at - c0->vertices.begin()] = c;
        }
        if (std::find(colors.begin(), colors.end(), 0) != colors.end())
            throw UsageError("every C0 vertex needs a pin");
        if (auto a = superextend(abstract, *c0, colors))
            std::cout << "SAT" << format_colors(*a) << '\n';
        else {
            std::cout << "UNSAT\n";
            code = 1;
        }
    }
    return code;
}

auto rooted(const PlaneGraph & g, const RunConfig & cfg) -> PlaneGraph
{
    auto c0 = choose_c0(g, cfg.c0);
    return c0 ? rooted_at(g, *c0) : g;
}

auto cmd_discharge(const RunConfig & cfg) -> int
{
    int code = 0;
    for (const auto & input : load(cfg)) {
        auto g = rooted(input, cfg);
        auto ledger = apply_rules(g);
        if (cfg.verbose)
            for (const auto & t : ledger.transfers)
                std::cout << "TRANSFER " << t.rule << ' ' << t.giver + 1 << ' ' << t.receiver + 1 << ' ' << to_string(t.amount) << '\n';
        auto report = audit(g, ledger);
        write_audit(std::cout, report);
        if (! report.negatives.empty())
            code = 1;
    }
    return code;
}

auto cmd_lemmas(const RunConfig & cfg) -> int
{
    int code = 0;
    VerifyOptions options{ .enumeration_cap = cfg.enumeration_cap, .samples = cfg.samples };
    for (const auto & input : load(cfg)) {
        auto g = rooted(input, cfg);
        auto ctx = make_context(g);
        std::vector<ConfigurationMatch> matches;
        if (cfg.lemma.empty())
            matches = scan_configurations(g, ctx);
        else
            matches = find_lemma_instances(g, ctx, parse_lemma(cfg.lemma));
        std::map<LemmaId, int> counts;
        for (const auto & m : matches) {
            std::cout << format_match(m) << '\n';
            ++counts[m.lemma];
        }
        for (auto id : all_lemmas)
            if (is_scanned(id) || counts.count(id))
                std::cout << "MATCHES " << lemma_name(id) << ' ' << counts[id] << '\n';
        if (! cfg.verify)
            continue;
        for (const auto & m : matches) {
            if (! is_constructive(m.lemma))
                continue;
            auto verdict = verify_reduction(g, m, options);
            std::cout << format_verdict(verdict) << '\n';
            if (cfg.verbose) {
                for (const auto & d : verdict.discrepancies)
                    std::cout << "DISCREPANCY " << d << '\n';
                for (const auto & f : verdict.findings)
                    std::cout << "FINDING " << f << '\n';
            }
            if (! verdict.clean())
                code = 1;
        }
    }
    return code;
}

auto cmd_enumerate(const RunConfig & cfg) -> int
{
    auto graphs = enumerate_small(cfg.n);
    if (cfg.output_format == "planar_code")
        std::cout << emit_planar_code(graphs);
    else if (cfg.output_format == "rotlist")
        for (const auto & g : graphs)
            std::cout << emit_rotlist(g) << '\n';
    else
        throw UsageError("unknown output format '" + cfg.output_format + "'");
    if (cfg.verbose)
        std::cerr << graphs.size() << " graphs\n";
    return 0;
}

auto cmd_sweep(const RunConfig & cfg) -> int
{
    std::vector<SweepCheck> checks;
    for (const auto & name : cfg.checks)
        try {
            checks.push_back(parse_check(name));
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }
    auto graphs = load(cfg);
    SweepSummary s;
    if (cfg.output.empty())
        s = sweep(graphs, checks, cfg.workers, std::cout, std::cout);
    else {
        s = sweep_to_file(graphs, checks, cfg.workers, cfg.output);
        std::cout << read_file(cfg.output + ".summary");
    }
    return s.unsat > 0 ? 1 : 0;
}

constexpr const char * footer = R"(Machine-readable line prefixes:
  SAT <c1> ... <cn>       coloring found (colors in vertex order)
  UNSAT                   no coloring / pinning does not superextend
  MEMBERSHIP, FIVE_CYCLE, CLOSEST_TRIANGLES   membership report (check)
  NEG vertex|face <id> <charge>   negative final charge (discharge)
  SUM initial=<q> final=<q> outer=<q>         charge totals (discharge)
  MATCH <lemma> v=<ids> ...       configuration found (lemmas)
  MATCHES <lemma> <n>             per-lemma match count (lemmas, sweep)
  LEMMA <id> tested= ok= oracle_ok= discrepancies=   reduction check
  TOTAL ... / GRAPH <index> ...   sweep summary and records
Exit codes: 0 success, 1 UNSAT / non-member / negative charge /
discrepancy, 2 input or usage error.)";

} // namespace

int main(int argc, char ** argv)
{
    RunConfig cfg;
    CLI::App app{ "Plane-graph lab for (2,0,0)-coloring graphs without 5-cycles and with disjoint triangles" };
    app.footer(footer);
    app.require_subcommand(1);

    auto common = [&](CLI::App * sub) {
        sub->add_option("input", cfg.input, "graph file, or - for standard input");
        sub->add_option("--format", cfg.format, "planar_code, rotlist or auto")->check(CLI::IsMember({ "auto", "planar_code", "rotlist" }));
        sub->add_option("--c0", cfg.c0, "C0 as 1-based vertex list, auto-triangle or auto-7cycle");
        sub->add_flag("--verbose", cfg.verbose, "extra diagnostic lines");
    };

    auto * check = app.add_subcommand("check", "membership report");
    common(check);
    check->add_option("--witness-cap", cfg.witness_cap, "maximum 5-cycles listed");

    auto * color = app.add_subcommand("color", "find a coloring");
    common(color);
    color->add_option("--dv", cfg.dv, "deficiency vector, e.g. 2,0,0");

    auto * superext = app.add_subcommand("superextend", "extend a C0 pinning so no vertex repeats a C0 neighbor's color");
    common(superext);
    superext->add_option("--pin", cfg.pin, "C0 colors as v=c,... (1-based vertices)");
    superext->add_flag("--all-pins", cfg.all_pins, "try every valid C0 pinning (stride sample beyond --pin-budget)");
    superext->add_option("--pin-budget", cfg.pin_budget, "pinnings tried with --all-pins");

    auto * discharge = app.add_subcommand("discharge", "apply the discharging rules and audit final charges");
    common(discharge);

    auto * lemmas = app.add_subcommand("lemmas", "scan for reducible configurations");
    common(lemmas);
    lemmas->add_flag("--verify", cfg.verify, "run reduction checks on constructive matches");
    lemmas->add_option("--lemma", cfg.lemma, "only instances of this lemma (e.g. L3.10)");
    lemmas->add_option("--enumeration-cap", cfg.enumeration_cap, "exhaustive base colorings up to this many vertices");
    lemmas->add_option("--samples", cfg.samples, "sampled base colorings beyond the cap");

    auto * enumerate = app.add_subcommand("enumerate", "connected planar graphs on n vertices up to isomorphism");
    enumerate->add_option("n", cfg.n, "vertex count (at most 8)")->required();
    enumerate->add_option("--output-format", cfg.output_format, "rotlist or planar_code");
    enumerate->add_flag("--verbose", cfg.verbose, "report the count on standard error");

    auto * sweep_cmd = app.add_subcommand("sweep", "run checks over a corpus");
    common(sweep_cmd);
    sweep_cmd->add_option("--checks", cfg.checks, "membership,color_200,superextend_all_triangles,discharge_audit,lemma_scan")->delimiter(',');
    sweep_cmd->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--output", cfg.output, "record file (summary goes to <output>.summary)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check)
            return cmd_check(cfg);
        if (*color)
            return cmd_color(cfg);
        if (*superext)
            return cmd_superextend(cfg);
        if (*discharge)
            return cmd_discharge(cfg);
        if (*lemmas)
            return cmd_lemmas(cfg);
        if (*enumerate)
            return cmd_enumerate(cfg);
        if (*sweep_cmd)
            return cmd_sweep(cfg);
    }
    catch (const UsageError & e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

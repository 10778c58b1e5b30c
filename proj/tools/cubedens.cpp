#include "report.hpp"

#include <cubedens/configurations.hpp>
#include <cubedens/constructions.hpp>
#include <cubedens/density.hpp>
#include <cubedens/error.hpp>
#include <cubedens/graphlab.hpp>
#include <cubedens/parallel.hpp>
#include <cubedens/seqfam.hpp>
#include <cubedens/verify.hpp>

#include <CLI11.hpp>
#include <fmt/core.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace cubedens;
using namespace cubedens::cli;
using nlohmann::ordered_json;

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_usage = 1,
        exit_refused = 2,
        exit_failed = 3
    };

    struct Globals
    {
        unsigned threads = 1;
        std::optional<std::filesystem::path> cache_dir;
        std::optional<std::filesystem::path> report_path;
        bool json = false;
        std::vector<std::string> argv;
    };

    struct DensityArgs
    {
        std::string config;
        std::optional<int> dim;
        int n = 0;
        std::optional<std::string> set_file;
        std::optional<std::string> construction;
        std::optional<std::string> spec_file;
        std::optional<std::string> save_set;
        std::optional<std::string> local;
        std::string side = "in";
        bool exact = false;
        bool search = false;
        bool facets = false;
        std::uint64_t budget = 20000;
        std::uint64_t seed = 1;
        unsigned restarts = 4;
    };

    struct SeqfamArgs
    {
        std::string action;
        std::string kind = "U";
        std::optional<int> d;
        std::optional<int> n;
        std::optional<std::string> family;
        std::optional<double> time_limit;
        bool no_symmetry = false;
        bool letters = false;
    };

    struct GraphArgs
    {
        std::string action;
        std::optional<std::string> graph_file;
        std::optional<std::size_t> extremal;
        std::optional<std::string> family;
        std::optional<int> n;
    };

    struct VerifyArgs
    {
        std::string suite = "all";
        bool list = false;
    };

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidArgument(fmt::format("cannot read '{}'", path));
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    /// A file's contents when the argument names an existing file, else the argument itself.
    auto file_or_text(const std::string & arg, Report & report) -> std::string
    {
        std::error_code ec;
        auto text = std::filesystem::is_regular_file(arg, ec) ? read_file(arg) : arg;
        report.add_input(text);
        return text;
    }

    auto resolve_config(const std::string & arg, std::optional<int> dim, Report & report) -> Configuration
    {
        try {
            auto h = catalog_lookup(arg);
            if (dim && *dim != h.dim())
                throw InvalidArgument(fmt::format("{} lives in Q_{}, not Q_{}", arg, h.dim(), *dim));
            return h;
        }
        catch (const InvalidArgument &) {
            if (arg.find('@') != std::string::npos)
                throw;
        }
        return parse_configuration(file_or_text(arg, report), dim);
    }

    auto config_label(const std::string & arg, const Configuration & h) -> std::string
    {
        auto inline_text = to_string(h);
        return arg.find('@') != std::string::npos ? fmt::format("{} {}", arg, inline_text) : inline_text;
    }

    auto density_json(const DensityReport & r) -> ordered_json
    {
        ordered_json j;
        j["count"] = to_string(r.count);
        j["total"] = to_string(r.total);
        j["fraction"] = to_string(r.fraction);
        j["mode"] = to_string(r.mode);
        j["exact"] = r.exact();
        if (r.witness) {
            j["witness_n"] = r.witness->dim();
            j["witness_hex"] = r.witness->to_hex();
        }
        return j;
    }

    auto density_from_json(const nlohmann::json & j) -> DensityReport
    {
        DensityReport r;
        r.count = BigInt(j.at("count").get<std::string>());
        r.total = BigInt(j.at("total").get<std::string>());
        r.fraction = make_rational(r.count, r.total);
        auto mode = j.at("mode").get<std::string>();
        r.mode = mode == "exhaustive" ? ProofMode::exhaustive : mode == "heuristic" ? ProofMode::heuristic : ProofMode::counted;
        if (j.contains("witness_hex"))
            r.witness = VertexSet::from_hex(j.at("witness_n").get<int>(), j.at("witness_hex").get<std::string>());
        return r;
    }

    auto parse_vertex(const std::string & text, int n) -> VertexBits
    {
        auto c = parse_configuration(text, n);
        if (c.size() != 1)
            throw ParseError(fmt::format("expected a single vertex, got '{}'", text));
        return c.vertices()[0];
    }

    auto run_density(const DensityArgs & a, const Globals & g) -> int
    {
        Report report("density", g.argv);
        ResultCache cache(g.cache_dir);
        auto h = resolve_config(a.config, a.dim, report);
        auto d = h.dim();
        if (a.n < d || a.n > max_dimension)
            throw InvalidArgument(fmt::format("need {} <= n <= {}, got {}", d, max_dimension, a.n));

        int sources = (a.set_file ? 1 : 0) + (a.construction ? 1 : 0) + (a.exact ? 1 : 0) + (a.search ? 1 : 0);
        if (sources != 1)
            throw InvalidArgument("give exactly one of --set, --construction, --exact, --search");

        report.line(fmt::format("configuration: {} (d = {})", config_label(a.config, h), d));
        report.line(fmt::format("n: {}", a.n));
        report.set("configuration", to_string(h));
        report.set("d", d);
        report.set("n", a.n);

        auto print_density = [&](const DensityReport & r, const std::string & what) {
            report.line(fmt::format("{}: {} of {}", what, to_string(r.count), to_string(r.total)));
            report.line(fmt::format("fraction: {}", to_string(r.fraction)));
            report.line(fmt::format("mode: {}{}", to_string(r.mode), r.exact() ? "" : " (lower bound only)"));
        };

        if (a.exact || a.search) {
            DensityReport r;
            if (a.exact) {
                auto key = fmt::format("density-exact|{}|{}", to_string(canonical_form(h)), a.n);
                if (auto cached = cache.load(key)) {
                    r = density_from_json(*cached);
                    report.transcript("loaded from cache");
                }
                else {
                    r = max_density_exact(h, a.n);
                    cache.store(key, density_json(r));
                }
            }
            else {
                SearchOptions options;
                options.budget = a.budget;
                options.seed = a.seed;
                options.restarts = a.restarts;
                options.threads = g.threads;
                r = max_density_search(h, a.n, options);
            }
            print_density(r, a.exact ? "maximum good sub-d-cubes" : "best good sub-d-cubes found");
            if (r.witness) {
                auto recount = count_exact_copies(h, a.n, *r.witness, g.threads);
                report.transcript(fmt::format("witness recount {} of {}: {}", to_string(recount.count),
                    to_string(recount.total), recount.count == r.count ? "ok" : "MISMATCH"));
                report.line(fmt::format("witness: {}", r.witness->to_hex()));
                if (recount.count != r.count) {
                    report.set("density", density_json(r));
                    report.emit(g.json, g.report_path);
                    return exit_failed;
                }
                if (a.save_set)
                    std::ofstream(*a.save_set) << serialize_vertex_set(*r.witness);
            }
            report.set("density", density_json(r));
            report.emit(g.json, g.report_path);
            return exit_ok;
        }

        VertexSet s(a.n);
        std::optional<BlowupSpec> spec;
        std::string source;
        if (a.set_file) {
            s = parse_vertex_set(file_or_text(*a.set_file, report));
            if (s.dim() != a.n)
                throw InvalidArgument(fmt::format("set lives in Q_{}, but n = {}", s.dim(), a.n));
            source = *a.set_file;
        }
        else {
            const auto & name = *a.construction;
            source = name;
            if (name == "blowup-equi")
                spec = equipartition_blowup(h, a.n);
            else if (name == "blowup-path")
                spec = path_blowup(d, a.n);
            else if (name == "blowup-spec") {
                if (! a.spec_file)
                    throw InvalidArgument("blowup-spec needs --spec FILE");
                spec = parse_blowup_spec(file_or_text(*a.spec_file, report));
                if (spec->n > a.n)
                    throw InvalidArgument(fmt::format("blow-up uses coordinate {} but n = {}", spec->n, a.n));
                spec->n = a.n;
                if (spec->parts() > 0) {
                    std::vector<bool> used(static_cast<std::size_t>(a.n), false);
                    for (const auto & b : spec->blocks)
                        for (int c : b)
                            used[static_cast<std::size_t>(c)] = true;
                    for (int c = 0; c < a.n; ++c)
                        if (! used[static_cast<std::size_t>(c)])
                            throw InvalidArgument(fmt::format("coordinate {} is in no block", c + 1));
                }
            }
            else if (name == "mod3")
                s = modular_weight_set(a.n, {1, 2}, 3);
            else if (name == "half-parity")
                s = half_parity_set(a.n);
            else
                throw InvalidArgument(fmt::format(
                    "unknown construction '{}' (blowup-equi, blowup-path, blowup-spec, mod3, half-parity)", name));
            if (spec)
                s = blowup(*spec);
        }
        if (a.save_set)
            std::ofstream(*a.save_set) << serialize_vertex_set(s);
        report.line(fmt::format("set: {} (|S| = {})", source, s.count()));
        report.set("set", source);
        report.set("set_size", s.count());

        if (a.local) {
            auto v = parse_vertex(*a.local, a.n);
            auto side = a.side == "out" ? Side::out : Side::in;
            if (a.side != "in" && a.side != "out")
                throw InvalidArgument(fmt::format("--side must be in or out, got '{}'", a.side));
            auto r = local_count(h, a.n, s, v, side);
            report.line(fmt::format("vertex: {} ({})", vertex_to_subset_string(v), a.side));
            print_density(r, "good sub-d-cubes through the vertex");
            report.set("vertex", vertex_to_subset_string(v));
            report.set("side", a.side);
            report.set("local", density_json(r));
            report.emit(g.json, g.report_path);
            return exit_ok;
        }

        auto r = count_exact_copies(h, a.n, s, g.threads);
        print_density(r, "good sub-d-cubes");
        report.set("density", density_json(r));
        int code = exit_ok;
        if (spec) {
            try {
                auto guarantee = blowup_guarantee(*spec, h);
                report.line(fmt::format("guarantee: {} of {} ({})", to_string(guarantee), to_string(r.total),
                    to_string(make_rational(guarantee, r.total))));
                report.set("guarantee", to_string(guarantee));
                bool ok = guarantee <= r.count;
                report.transcript(fmt::format("guarantee {} <= count {}: {}", to_string(guarantee), to_string(r.count),
                    ok ? "ok" : "FAILED"));
                if (! ok)
                    code = exit_failed;
            }
            catch (const InvalidArgument & e) {
                report.transcript(fmt::format("no guarantee: {}", e.what()));
            }
        }
        if (a.facets && d < a.n) {
            auto facets = facet_densities(h, a.n, s);
            Rational sum = 0;
            ordered_json list = ordered_json::array();
            for (const auto & f : facets) {
                sum += f;
                list.push_back(to_string(f));
            }
            auto mean = sum / static_cast<int>(facets.size());
            report.line(fmt::format("facet mean: {}", to_string(mean)));
            report.set("facets", list);
            bool ok = mean == r.fraction;
            report.transcript(fmt::format("facet mean equals the fraction: {}", ok ? "ok" : "FAILED"));
            if (! ok)
                code = exit_failed;
        }
        report.emit(g.json, g.report_path);
        return code;
    }

    auto parse_kind(const std::string & kind) -> FamilyKind
    {
        if (kind == "U" || kind == "u")
            return FamilyKind::U;
        if (kind == "V" || kind == "v")
            return FamilyKind::V;
        throw InvalidArgument(fmt::format("--kind must be U or V, got '{}'", kind));
    }

    auto family_json(const SeqFamily & f, SymbolStyle style) -> ordered_json
    {
        ordered_json members = ordered_json::array();
        for (const auto & s : f.sequences)
            members.push_back(format_member(s, style));
        for (const auto & b : f.bisequences)
            members.push_back(format_member(b, style));
        return members;
    }

    auto family_from_json(const nlohmann::json & j, FamilyKind kind, int d, int n) -> SeqFamily
    {
        std::string text;
        for (const auto & m : j)
            text += m.get<std::string>() + "\n";
        return parse_family(text, kind, d, n);
    }

    auto add_family_lines(Report & report, const SeqFamily & f, SymbolStyle style) -> void
    {
        for (const auto & s : f.sequences)
            report.line("  " + format_member(s, style));
        for (const auto & b : f.bisequences)
            report.line("  " + format_member(b, style));
    }

    auto member_text(const SeqFamily & f, std::size_t i, SymbolStyle style) -> std::string
    {
        return f.kind == FamilyKind::U ? format_member(f.sequences[i], style) : format_member(f.bisequences[i], style);
    }

    auto run_seqfam(const SeqfamArgs & a, const Globals & g) -> int
    {
        Report report("seqfam " + a.action, g.argv);
        ResultCache cache(g.cache_dir);
        auto kind = parse_kind(a.kind);
        auto style = a.letters ? SymbolStyle::letters : SymbolStyle::numbers;

        std::optional<SeqFamily> given;
        if (a.family) {
            auto text = file_or_text(*a.family, report);
            if (uses_letters(text))
                style = SymbolStyle::letters;
            given = parse_family(text, kind, a.d, a.n);
        }
        auto d = a.d ? *a.d : given ? given->d : 0;
        auto n = a.n ? *a.n : given ? given->n : 0;
        if (a.action != "check" || ! given) {
            if (! a.d || ! a.n)
                if (! given)
                    throw InvalidArgument("give --d and --n, or a --family");
        }
        if (d < 3)
            throw InvalidArgument(fmt::format("sequence families need d >= 3, got {}", d));
        report.line(fmt::format("kind: {}  d: {}  n: {}", to_string(kind), d, n));
        report.set("kind", to_string(kind));
        report.set("d", d);
        report.set("n", n);

        if (a.action == "check") {
            if (! given)
                throw InvalidArgument("check needs --family");
            auto violation = check_family(*given);
            report.set("size", given->size());
            report.set("valid", ! violation);
            if (! violation) {
                report.line(fmt::format("valid: {} members satisfy Property {}", given->size(), to_string(kind)));
                report.emit(g.json, g.report_path);
                return exit_ok;
            }
            auto first = std::min(violation->owner, violation->other);
            auto second = std::max(violation->owner, violation->other);
            auto w = member_text(*given, first, style);
            auto x = member_text(*given, second, style);
            auto owner = member_text(*given, violation->owner, style);
            ordered_json j;
            j["w"] = w;
            j["x"] = x;
            if (violation->reason == Violation::Reason::reversal) {
                report.line(fmt::format("violation: w={} x={} (a member and its reversal)", w, x));
                j["reason"] = "reversal";
            }
            else {
                auto segment = format_symbols(violation->segment, style);
                report.line(fmt::format("violation: w={} x={} segment={} ({} of {})", w, x, segment,
                    kind == FamilyKind::U ? "end-segment" : "initial segment", owner));
                j["reason"] = "segment";
                j["segment"] = segment;
                j["segment_of"] = owner;
            }
            report.set("violation", j);
            report.emit(g.json, g.report_path);
            return exit_failed;
        }

        if (a.action == "max") {
            MaxFamilyOptions options;
            options.threads = g.threads;
            options.use_symmetry = ! a.no_symmetry;
            if (a.time_limit)
                options.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(*a.time_limit * 1000));
            auto key = fmt::format("seqfam-max|{}|{}|{}", to_string(kind), d, n);
            MaxFamilyResult r;
            bool cached = false;
            if (auto c = cache.load(key)) {
                r.size = c->at("size").get<std::size_t>();
                r.exact = true;
                r.universe = c->at("universe").get<std::size_t>();
                r.witness = family_from_json(c->at("witness"), kind, d, n);
                cached = true;
                report.transcript("loaded from cache");
            }
            else {
                r = max_family(kind, d, n, options);
                if (r.exact)
                    cache.store(key, {{"size", r.size}, {"universe", r.universe},
                        {"witness", family_json(r.witness, SymbolStyle::numbers)}});
            }
            auto binom = binomial(static_cast<unsigned>(n), static_cast<unsigned>(d));
            report.line(fmt::format("maximum family: {} ({})", r.size, r.exact ? "exact, search closed" : "lower bound, time limit hit"));
            report.line(fmt::format("normalized: {}", to_string(make_rational(r.size, binom))));
            report.line(fmt::format("universe: {} classes", r.universe));
            if (! cached)
                report.line(fmt::format("search nodes: {}", r.nodes));
            report.line("witness:");
            add_family_lines(report, r.witness, style);
            auto violation = check_family(r.witness);
            report.transcript(fmt::format("witness passes the Property {} checker: {}", to_string(kind), violation ? "FAILED" : "ok"));
            report.set("size", r.size);
            report.set("exact", r.exact);
            report.set("mode", r.exact ? "exhaustive" : "heuristic");
            report.set("normalized", to_string(make_rational(r.size, binom)));
            report.set("witness", family_json(r.witness, style));
            report.emit(g.json, g.report_path);
            return violation ? exit_failed : exit_ok;
        }

        if (a.action == "extremal") {
            if (kind != FamilyKind::U || d != 3)
                throw InvalidArgument("extremal families are available for --kind U --d 3");
            auto f = extremal_U3(n);
            auto violation = check_property_U(f);
            report.line(fmt::format("extremal family: {} members (max_m C(m,2)(n-m) = {})", f.size(), extremal_U3_size(n)));
            add_family_lines(report, f, style);
            report.transcript(fmt::format("family passes the Property U checker: {}", violation ? "FAILED" : "ok"));
            report.set("size", f.size());
            report.set("family", family_json(f, style));
            report.emit(g.json, g.report_path);
            return violation ? exit_failed : exit_ok;
        }

        if (a.action == "roundtrip") {
            auto f = given ? *given : max_family(kind, d, n).witness;
            if (auto violation = check_family(f)) {
                report.line("family violates its property; nothing to round-trip");
                report.emit(g.json, g.report_path);
                return exit_failed;
            }
            auto h = kind == FamilyKind::U ? make_perfect_cycle(d) : make_perfect_path(d);
            auto s = pointed_set_from_family(f);
            auto back = family_from_pointed_set(h, f.n, s, 0);
            auto local = local_count(h, f.n, s, 0, Side::in);
            auto norm = f.normalized(), back_norm = back.normalized();
            bool contains = std::includes(back_norm.sequences.begin(), back_norm.sequences.end(),
                                norm.sequences.begin(), norm.sequences.end())
                && std::includes(back_norm.bisequences.begin(), back_norm.bisequences.end(), norm.bisequences.begin(),
                    norm.bisequences.end());
            report.line(fmt::format("family: {} members", f.size()));
            report.line(fmt::format("pointed set: {} vertices in Q_{}", s.count(), f.n));
            report.line(fmt::format("recovered family: {} members", back.size()));
            report.line(fmt::format("local count at the base vertex: {} of {}", to_string(local.count), to_string(local.total)));
            report.transcript(fmt::format("recovered family contains the original: {}", contains ? "ok" : "FAILED"));
            report.transcript(fmt::format("sizes agree: {}", back.size() == f.size() ? "ok" : "no (extra members recovered)"));
            report.set("size", f.size());
            report.set("recovered", back.size());
            report.set("local_count", to_string(local.count));
            report.set("set_hex", s.to_hex());
            report.emit(g.json, g.report_path);
            return contains ? exit_ok : exit_failed;
        }
        throw InvalidArgument(fmt::format("unknown seqfam action '{}'", a.action));
    }

    auto run_graph(const GraphArgs & a, const Globals & g) -> int
    {
        Report report("graph " + a.action, g.argv);
        if (a.action == "count2k2") {
            int sources = (a.graph_file ? 1 : 0) + (a.extremal ? 1 : 0) + (a.family ? 1 : 0);
            if (sources != 1)
                throw InvalidArgument("give exactly one of --graph, --extremal, --family");
            std::optional<LabelledBipartite> labelled;
            std::optional<SeqFamily> family;
            BipartiteGraph graph(0, 0);
            if (a.graph_file)
                graph = parse_bipartite(file_or_text(*a.graph_file, report));
            else if (a.extremal)
                graph = extremal_2k2_graph(*a.extremal);
            else {
                family = parse_family(file_or_text(*a.family, report), FamilyKind::U, 4, a.n);
                labelled = sequence_conflict_bipartite(*family);
                graph = labelled->graph;
            }
            auto vertices = graph.m() + graph.p();
            auto formula = count_2k2_formula(graph, g.threads);
            report.line(fmt::format("parts: m = {}, p = {}, edges = {}", graph.m(), graph.p(), graph.edge_count()));
            report.line(fmt::format("induced 2K2 (degree/codegree formula): {}", formula));
            report.set("m", graph.m());
            report.set("p", graph.p());
            report.set("edges", graph.edge_count());
            report.set("formula", formula);
            int code = exit_ok;
            if (vertices <= max_direct_vertices) {
                auto direct = count_2k2_direct(graph);
                report.line(fmt::format("induced 2K2 (enumeration): {}", direct));
                report.set("direct", direct);
                report.transcript(fmt::format("formula equals enumeration: {}", direct == formula ? "ok" : "FAILED"));
                if (direct != formula)
                    code = exit_failed;
            }
            auto v = static_cast<std::uint64_t>(vertices);
            report.line(fmt::format("n^4/256 with n = {}: {}", vertices, to_string(make_rational(BigInt(v * v) * v * v, 256))));
            if (family) {
                auto mapped = std::all_of(family->sequences.begin(), family->sequences.end(),
                    [&](const Seq & s) { return member_induces_2k2(*labelled, s); });
                report.line(fmt::format("family size: {}", family->size()));
                report.transcript(fmt::format("every member induces two disjoint edges: {}", mapped ? "ok" : "FAILED"));
                report.transcript(fmt::format("family size <= 2K2 count: {}", family->size() <= formula ? "ok" : "FAILED"));
                if (! mapped || family->size() > formula)
                    code = exit_failed;
            }
            report.emit(g.json, g.report_path);
            return code;
        }
        if (a.action == "turan") {
            if (! a.family)
                throw InvalidArgument("turan needs --family (a V family with d = 3)");
            auto family = parse_family(file_or_text(*a.family, report), FamilyKind::V, 3, a.n);
            if (check_property_V(family))
                throw InvalidArgument("family violates Property V");
            auto firsts = first_symbols(family);
            bool all_free = true;
            ordered_json graphs = ordered_json::array();
            auto audit = [&](const std::string & label, const LabelledGraph & lg) {
                auto t = turan_triangle_bound(lg.graph);
                all_free = all_free && t.triangle_free;
                report.line(fmt::format("{}: {} vertices, {} edges, bound {}, {}", label, lg.graph.size(), t.edges,
                    t.edge_bound, t.triangle_free ? "triangle-free" : "HAS A TRIANGLE"));
                graphs.push_back({{"graph", label}, {"vertices", lg.graph.size()}, {"edges", t.edges},
                    {"bound", t.edge_bound}, {"triangle_free", t.triangle_free}});
            };
            for (int e : firsts)
                audit(fmt::format("G_{} (first symbol)", e), graph_for_first(family, e));
            std::set<int> used;
            for (const auto & b : family.bisequences) {
                used.insert(b.left.begin(), b.left.end());
                used.insert(b.right.begin(), b.right.end());
            }
            for (int x : used)
                if (! std::binary_search(firsts.begin(), firsts.end(), x))
                    audit(fmt::format("G_{} (non-first symbol)", x), graph_for_second(family, x));
            report.transcript(fmt::format("all graphs triangle-free: {}", all_free ? "ok" : "FAILED"));
            report.set("graphs", graphs);
            report.emit(g.json, g.report_path);
            return all_free ? exit_ok : exit_failed;
        }
        throw InvalidArgument(fmt::format("unknown graph action '{}'", a.action));
    }

    auto run_verify(const VerifyArgs & a, const Globals & g) -> int
    {
        if (a.list) {
            for (const auto & c : list_checks())
                std::cout << fmt::format("{:<20} {:>4} {:>5}s  {}\n", c.name,
                    c.criterion ? fmt::format("[{}]", *c.criterion) : std::string("[-]"), c.limit_seconds, c.summary);
            std::cout << "groups: all, acceptance, cycle-d4\n";
            return exit_ok;
        }
        Report report("verify", g.argv);
        auto results = run_suite(a.suite);
        bool ok = true;
        ordered_json list = ordered_json::array();
        for (const auto & r : results) {
            ok = ok && r.passed;
            report.line(format_result_line(r));
            ordered_json measured = ordered_json::object();
            for (const auto & [k, v] : r.measured)
                measured[k] = v;
            list.push_back({{"name", r.name}, {"criterion", r.criterion ? ordered_json(*r.criterion) : ordered_json()},
                {"passed", r.passed}, {"measured", measured}, {"failures", r.failures}, {"limit_seconds", r.limit_seconds}});
        }
        report.line(fmt::format("{} of {} checks passed", std::count_if(results.begin(), results.end(),
            [](const CheckResult & r) { return r.passed; }), results.size()));
        report.set("suite", a.suite);
        report.set("checks", list);
        report.set("passed", ok);
        report.emit(g.json, g.report_path);
        return ok ? exit_ok : exit_failed;
    }
}

int main(int argc, char ** argv)
{
    Globals g;
    g.argv.assign(argv, argv + argc);

    CLI::App app{"Exact-copy densities of hypercube configurations, sequence families and 2K2 counting"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version));
    std::string cache_dir, report_path;
    app.add_option("--threads", g.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--cache", cache_dir, "directory for cached exact results");
    app.add_option("--report", report_path, "also write the report to FILE and FILE.json");
    app.add_flag("--json", g.json, "print the JSON record instead of text");

    DensityArgs da;
    auto * density = app.add_subcommand("density", "count or maximize good sub-d-cubes");
    density->add_option("--config", da.config, "catalog name (C8@4, P4@3, ...), file, or vertex list")->required();
    density->add_option("--dim", da.dim, "dimension of the configuration");
    density->add_option("--n", da.n, "ambient dimension")->required();
    density->add_option("--set", da.set_file, "vertex set file ('n N' then hex)");
    density->add_option("--construction", da.construction, "blowup-equi, blowup-path, blowup-spec, mod3, half-parity");
    density->add_option("--spec", da.spec_file, "blow-up description for blowup-spec");
    density->add_option("--save-set", da.save_set, "write the set used (or the witness) to FILE");
    density->add_option("--local", da.local, "count only sub-d-cubes through this vertex");
    density->add_option("--side", da.side, "in or out, for --local");
    density->add_flag("--exact", da.exact, "exact maximum over all sets (n <= 4)");
    density->add_flag("--search", da.search, "local search for a good set");
    density->add_flag("--facets", da.facets, "check the facet averaging identity");
    density->add_option("--budget", da.budget, "search evaluations");
    density->add_option("--seed", da.seed, "search seed");
    density->add_option("--restarts", da.restarts, "search restarts");

    SeqfamArgs sa;
    auto * seqfam = app.add_subcommand("seqfam", "sequence and bisequence families");
    seqfam->add_option("action", sa.action, "check, max, extremal or roundtrip")
        ->required()
        ->check(CLI::IsMember({"check", "max", "extremal", "roundtrip"}));
    seqfam->add_option("--kind", sa.kind, "U or V");
    seqfam->add_option("--d", sa.d, "member length");
    seqfam->add_option("--n", sa.n, "number of symbols");
    seqfam->add_option("--family", sa.family, "family file, or inline '[abcde, abceg]'");
    seqfam->add_option("--time-limit", sa.time_limit, "seconds before max gives up exactness");
    seqfam->add_flag("--no-symmetry", sa.no_symmetry, "search without orbit rooting");
    seqfam->add_flag("--letters", sa.letters, "print symbols as letters");

    GraphArgs ga;
    auto * graph = app.add_subcommand("graph", "induced 2K2 counting and triangle audits");
    graph->add_option("action", ga.action, "count2k2 or turan")->required()->check(CLI::IsMember({"count2k2", "turan"}));
    graph->add_option("--graph", ga.graph_file, "edge list ('parts M P' then 'mI pJ' lines)");
    graph->add_option("--extremal", ga.extremal, "two disjoint K_{n/4,n/4}");
    graph->add_option("--family", ga.family, "family file or inline list");
    graph->add_option("--n", ga.n, "number of symbols of the family");

    VerifyArgs va;
    auto * verify = app.add_subcommand("verify", "run the built-in checks");
    verify->add_option("--suite", va.suite, "check or group name");
    verify->add_flag("--list", va.list, "list checks and exit");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (! cache_dir.empty())
            g.cache_dir = cache_dir;
        if (! report_path.empty())
            g.report_path = report_path;
        set_default_threads(g.threads);
        if (*density)
            return run_density(da, g);
        if (*seqfam)
            return run_seqfam(sa, g);
        if (*graph)
            return run_graph(ga, g);
        return run_verify(va, g);
    }
    catch (const ComputationRefused & e) {
        std::cerr << "refused: " << e.what() << "\n";
        return exit_refused;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

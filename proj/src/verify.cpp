#include <cubedens/configurations.hpp>
#include <cubedens/constructions.hpp>
#include <cubedens/density.hpp>
#include <cubedens/error.hpp>
#include <cubedens/graphlab.hpp>
#include <cubedens/seqfam.hpp>
#include <cubedens/verify.hpp>

#include <fmt/core.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <random>

using namespace cubedens;

namespace
{
    class Recorder
    {
    public:
        explicit Recorder(CheckResult & result) : _result(result) {}

        template <typename T>
        auto value(std::string key, const T & v) -> void
        {
            if constexpr (std::is_convertible_v<T, std::string>)
                _result.measured.emplace_back(std::move(key), std::string(v));
            else if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, BigInt>)
                _result.measured.emplace_back(std::move(key), to_string(v));
            else
                _result.measured.emplace_back(std::move(key), fmt::format("{}", v));
        }

        auto expect(bool ok, std::string what) -> void
        {
            if (! ok)
                _result.failures.push_back(std::move(what));
        }

    private:
        CheckResult & _result;
    };

    struct Check
    {
        CheckInfo info;
        std::function<void (Recorder &)> body;
    };

    auto parse_u(std::string_view text) -> SeqFamily { return parse_family(text, FamilyKind::U); }
    auto parse_v(std::string_view text) -> SeqFamily { return parse_family(text, FamilyKind::V); }

    auto check_exact_copy(Recorder & r) -> void
    {
        auto h = parse_configuration("- 12", 3);
        bool yes = exact_copy(h, parse_configuration("2 123", 3));
        bool no = exact_copy(h, parse_configuration("2 13", 3));
        r.value("{-,12}~{2,123}", yes);
        r.value("{-,12}~{2,13}", no);
        r.expect(yes, "{-,12} and {2,123} should be exact copies in Q_3");
        r.expect(! no, "{-,12} and {2,13} should not be exact copies in Q_3");
    }

    auto check_self_complementary(Recorder & r) -> void
    {
        bool c8 = is_self_complementary(catalog_lookup("C8@4"));
        bool a = is_self_complementary(catalog_lookup("badcycleA@4"));
        bool b = is_self_complementary(catalog_lookup("badcycleB@4"));
        int total = 0, self = 0;
        for (PatternMask m = 0; m < 256; ++m)
            if (std::popcount(m) == 4) {
                ++total;
                self += is_self_complementary(Configuration::from_mask(3, m)) ? 1 : 0;
            }
        r.value("C8@4", c8);
        r.value("badcycleA@4", a);
        r.value("badcycleB@4", b);
        r.value("Q3 4-sets self-complementary", fmt::format("{}/{}", self, total));
        r.expect(c8, "C8@4 should be self-complementary");
        r.expect(! a && ! b, "the two non-perfect 8-cycles should not be self-complementary");
        r.expect(total == 70 && self == total, "every 4-vertex configuration of Q_3 should be self-complementary");
    }

    auto check_c8_lower(Recorder & r) -> void
    {
        constexpr int regression_count = 256;
        auto c8 = make_perfect_cycle(4);
        auto spec = equipartition_blowup(c8, 8);
        auto report = count_exact_copies(c8, 8, blowup(spec));
        auto guarantee = blowup_guarantee(spec, c8);
        auto bound = equipartition_bound(4, BoundKind::cycle);
        r.value("count", report.count);
        r.value("total", report.total);
        r.value("guarantee", guarantee);
        r.value("d!/d^d", bound);
        r.expect(report.total == 1120, "n = 8 should have 1120 sub-4-cubes");
        r.expect(report.count >= 256, "blow-up should give at least 256 good sub-4-cubes");
        r.expect(report.count == regression_count, fmt::format("regression value {} changed", regression_count));
        r.expect(guarantee <= report.count, "guarantee exceeds the enumerated count");
        r.expect(bound == make_rational(3, 32), "d!/d^d at d = 4 should be 3/32");
    }

    auto check_c8_upper(Recorder & r) -> void
    {
        auto best = max_family(FamilyKind::U, 4, 8);
        r.value("T(4,8)", best.size);
        r.value("exact", best.exact);
        r.expect(best.size == 16 && best.exact, "max_family(U,4,8) should be exactly 16");
        r.expect(! check_property_U(best.witness), "witness should satisfy the end-segment property");

        auto g = sequence_conflict_bipartite(best.witness);
        auto formula = count_2k2_formula(g.graph);
        auto direct = count_2k2_direct(g.graph);
        r.value("2K2 formula", formula);
        r.value("2K2 direct", direct);
        r.value("8^4/256", 8 * 8 * 8 * 8 / 256);
        r.expect(formula == 16 && direct == 16, "witness graph should have exactly 16 induced 2K2");
        bool mapped = std::all_of(best.witness.sequences.begin(), best.witness.sequences.end(),
            [&](const Seq & s) { return member_induces_2k2(g, s); });
        r.expect(mapped, "every witness member should induce two disjoint edges");

        std::mt19937_64 rng(20240901);
        int discrepancies = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            auto total = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
            auto m = std::uniform_int_distribution<std::size_t>(0, total)(rng);
            BipartiteGraph h(m, total - m);
            auto density = std::uniform_real_distribution<double>(0, 1)(rng);
            std::bernoulli_distribution edge(density);
            for (std::size_t i = 0; i < h.m(); ++i)
                for (std::size_t j = 0; j < h.p(); ++j)
                    if (edge(rng))
                        h.add_edge(i, j);
            if (count_2k2_formula(h) != count_2k2_direct(h))
                ++discrepancies;
        }
        r.value("random graphs", 1000);
        r.value("discrepancies", discrepancies);
        r.expect(discrepancies == 0, "formula and enumeration disagree on random graphs");
    }

    auto check_p4_path(Recorder & r) -> void
    {
        auto best = max_family(FamilyKind::V, 3, 4);
        r.value("B(3,4)", best.size);
        r.expect(best.size == 4 && best.exact, "max_family(V,3,4) should be exactly 4 = 4^3/16");
        r.expect(! check_property_V(best.witness), "witness should satisfy the initial-segment property");

        auto path = make_perfect_path(3);
        auto s = blowup(path_blowup(3, 4));
        auto family = family_from_pointed_set(path, 4, s, 0);
        auto local = local_count(path, 4, s, 0, Side::in);
        r.value("path blow-up family", family.size());
        r.value("local count", local.count);
        r.expect(family.size() == 4 && local.count == 4, "path blow-up at n = 4 should give a family of size 4");
        r.expect(! check_property_V(family), "extracted family should satisfy the initial-segment property");

        auto bound = equipartition_bound(3, BoundKind::path);
        r.value("d!/(d+1)^(d-1)", bound);
        r.expect(bound == make_rational(3, 8), "d!/(d+1)^(d-1) at d = 3 should be 3/8");
    }

    auto check_t3(Recorder & r) -> void
    {
        constexpr std::array<std::size_t, 5> expected{1, 3, 6, 12, 20};
        Rational previous{2};
        for (int n = 3; n <= 7; ++n) {
            auto best = max_family(FamilyKind::U, 3, n);
            auto closed = extremal_U3_size(n);
            auto family = extremal_U3(n);
            auto ratio = make_rational(best.size, binomial(static_cast<unsigned>(n), 3));
            r.value(fmt::format("T(3,{})", n), best.size);
            r.value(fmt::format("t(3,{})", n), ratio);
            r.expect(best.exact && best.size == expected[static_cast<std::size_t>(n - 3)],
                fmt::format("T(3,{}) should be {}", n, expected[static_cast<std::size_t>(n - 3)]));
            r.expect(closed == best.size, fmt::format("max_m C(m,2)(n-m) disagrees with the solver at n = {}", n));
            r.expect(family.size() == closed && ! check_property_U(family),
                fmt::format("extremal family at n = {} should be valid of size {}", n, closed));
            r.expect(ratio <= previous, fmt::format("t(3,n) increases at n = {}", n));
            previous = ratio;
        }
    }

    auto exhaust_local(const Configuration & h, int n) -> std::pair<BigInt, VertexSet>
    {
        auto verts = std::uint64_t{1} << n;
        BigInt best = -1;
        VertexSet argmax(n);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (verts - 1)); ++bits) {
            VertexSet s(n);
            s.insert(0);
            for (std::uint64_t v = 1; v < verts; ++v)
                if ((bits >> (v - 1)) & 1U)
                    s.insert(static_cast<VertexBits>(v));
            auto c = local_count(h, n, s, 0, Side::in).count;
            if (c > best) {
                best = c;
                argmax = s;
            }
        }
        return {best, argmax};
    }

    auto check_correspondence(Recorder & r) -> void
    {
        for (auto [d, n] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 4}}) {
            auto cycle = make_perfect_cycle(d);
            auto [best, argmax] = exhaust_local(cycle, n);
            auto family = max_family(FamilyKind::U, d, n);
            auto extracted = family_from_pointed_set(cycle, n, argmax, 0);
            r.value(fmt::format("max local ({},{})", d, n), best);
            r.value(fmt::format("T({},{})", d, n), family.size);
            r.expect(best == family.size, fmt::format("local maximum differs from T({},{})", d, n));
            r.expect(extracted.size() == family.size && ! check_property_U(extracted),
                fmt::format("family read from the best set at ({},{}) is wrong", d, n));
        }

        std::size_t trips = 0;
        auto round_trip = [&](FamilyKind kind, int d, int n) {
            auto witness = max_family(kind, d, n).witness;
            auto h = kind == FamilyKind::U ? make_perfect_cycle(d) : make_perfect_path(d);
            auto s = pointed_set_from_family(witness);
            auto back = family_from_pointed_set(h, n, s, 0);
            auto local = local_count(h, n, s, 0, Side::in).count;
            ++trips;
            r.expect(back.size() == witness.size() && local == witness.size()
                    && back.normalized().sequences == witness.normalized().sequences
                    && back.normalized().bisequences == witness.normalized().bisequences,
                fmt::format("round trip changes the {} witness at d = {}, n = {}", to_string(kind), d, n));
        };
        for (int n = 3; n <= 7; ++n)
            round_trip(FamilyKind::U, 3, n);
        for (int n = 4; n <= 8; ++n)
            round_trip(FamilyKind::U, 4, n);
        for (int n = 3; n <= 6; ++n)
            round_trip(FamilyKind::V, 3, n);
        round_trip(FamilyKind::V, 4, 5);
        r.value("round trips", trips);
    }

    auto check_c6(Recorder & r) -> void
    {
        constexpr int regression_count = 40;
        auto c6 = make_perfect_cycle(3);
        for (int n = 3; n <= 6; ++n) {
            auto s = modular_weight_set(n, {1, 2}, 3);
            auto local = local_count(c6, n, s, 0, Side::out);
            r.value(fmt::format("local out n={}", n), local.fraction);
            r.expect(local.fraction == 1, fmt::format("local fraction at n = {} should be 1", n));
        }
        auto s = modular_weight_set(6, {1, 2}, 3);
        auto global = count_exact_copies(c6, 6, s);
        std::uint64_t bases = 0;
        for_each_subcube(6, 3, [&](const Subcube & q) { bases += std::popcount(q.base()) % 3 == 0 ? 1 : 0; });
        r.value("global n=6", global.fraction);
        r.value("base weight 0 mod 3", bases);
        r.expect(global.count == bases, "good subcubes should be those with base weight 0 mod 3");
        r.expect(global.count == regression_count && global.total == 160,
            fmt::format("regression value {}/160 changed", regression_count));
    }

    auto check_monotonicity(Recorder & r) -> void
    {
        auto h = adjacent_pair();
        Rational previous{2};
        for (int n = 2; n <= 4; ++n) {
            auto ex = max_density_exact(h, n);
            r.value(fmt::format("ex(n={})", n), ex.fraction);
            r.expect(ex.mode == ProofMode::exhaustive, "exhaustive mode expected");
            r.expect(ex.fraction <= previous, fmt::format("ex increases at n = {}", n));
            r.expect(ex.fraction >= make_rational(1, 2), fmt::format("ex falls below 1/2 at n = {}", n));
            previous = ex.fraction;
        }
    }

    auto check_checkers(Recorder & r) -> void
    {
        int violations = 0, accepted = 0;
        auto expect_u = [&](std::string_view text, bool valid) {
            bool ok = ! check_property_U(parse_u(text));
            r.expect(ok == valid, fmt::format("{} should be {}", text, valid ? "valid" : "a violation"));
            (valid ? accepted : violations) += 1;
        };
        auto expect_v = [&](std::string_view text, bool valid) {
            bool ok = ! check_property_V(parse_v(text));
            r.expect(ok == valid, fmt::format("{} should be {}", text, valid ? "valid" : "a violation"));
            (valid ? accepted : violations) += 1;
        };

        for (auto w : {"abceg", "gecba", "abegh", "hgeba", "ghiaj", "jaihg"})
            expect_u(fmt::format("[abcde, {}]", w), false);
        for (auto w : {"fbdcg", "gcdbf", "edgbh", "hbgde"})
            expect_u(fmt::format("[abcde, {}]", w), true);
        expect_u("[abc]", true);
        expect_u("[abcde, edcba]", false);

        auto segment = check_property_U(parse_u("[abcde, abceg]"));
        r.expect(segment && format_symbols(segment->segment, SymbolStyle::letters) == "abce",
            "[abcde, abceg] should report the segment abce");

        expect_v("[bxy|, bxz|, byz|]", false);
        expect_v("[bxz|, byz|, bxy|]", false);
        expect_v("[bx|c, bx|d, dx|c]", false);
        expect_v("[bx|c, dx|c, dx|b]", false);
        expect_v("[bxy|, bxz|]", true);
        expect_v("[bxz|, byz|]", true);
        expect_v("[bx|c, bx|d]", true);
        expect_v("[bx|c, dx|c]", true);
        expect_v("[a|bc]", true);
        expect_v("[a|bc, bc|a]", false);

        r.value("violations", violations);
        r.value("accepted", accepted);
    }

    auto check_limits(Recorder & r) -> void
    {
        for (int d = 2; d <= 6; ++d) {
            auto cycle = equipartition_bound(d, BoundKind::cycle);
            auto path = equipartition_bound(d, BoundKind::path);
            auto ud = static_cast<unsigned>(d);
            BigInt dd = 1, d1 = 1;
            for (int i = 0; i < d; ++i)
                dd *= d;
            for (int i = 0; i < d - 1; ++i)
                d1 *= d + 1;
            r.value(fmt::format("d={} cycle", d), cycle);
            r.value(fmt::format("d={} path", d), path);
            r.expect(cycle == make_rational(factorial(ud), dd) && path == make_rational(factorial(ud), d1),
                fmt::format("closed forms disagree at d = {}", d));
        }
    }

    auto checks() -> const std::vector<Check> &
    {
        static const std::vector<Check> all{
            {{"exact-copy", 1, "exact copies of {-,12} in Q_3", 1}, check_exact_copy},
            {{"self-complementary", 2, "self-complementary configurations", 1}, check_self_complementary},
            {{"c8-lower", 3, "C_8 blow-up at n = 8 and d!/d^d", 10}, check_c8_lower},
            {{"c8-upper", 4, "T(4,8) and induced 2K2 counting", 300}, check_c8_upper},
            {{"p4-path", 5, "B(3,4), path blow-up and d!/(d+1)^(d-1)", 60}, check_p4_path},
            {{"t3", 6, "T(3,n) for n = 3..7", 600}, check_t3},
            {{"correspondence", 7, "local maxima against family maxima, round trips", 600}, check_correspondence},
            {{"c6", 8, "C_6 modular weight construction", 10}, check_c6},
            {{"monotonicity", 9, "ex for the adjacent pair, n = 2..4", 300}, check_monotonicity},
            {{"checkers", 10, "property checker examples", 1}, check_checkers},
            {{"limits", std::nullopt, "d!/d^d and d!/(d+1)^(d-1) for d = 2..6", 1}, check_limits},
        };
        return all;
    }

    auto replace_spaces(std::string s) -> std::string
    {
        std::replace(s.begin(), s.end(), ' ', '_');
        return s;
    }

    auto find_check(const std::string & name) -> const Check &
    {
        for (const auto & c : checks())
            if (c.info.name == name)
                return c;
        throw InvalidArgument(fmt::format("unknown check '{}'", name));
    }
}

auto cubedens::list_checks() -> std::vector<CheckInfo>
{
    std::vector<CheckInfo> out;
    for (const auto & c : checks())
        out.push_back(c.info);
    return out;
}

auto cubedens::suite_names() -> std::vector<std::string>
{
    std::vector<std::string> out{"all", "acceptance", "cycle-d4"};
    for (const auto & c : checks())
        out.push_back(c.info.name);
    return out;
}

auto cubedens::run_check(const std::string & name) -> CheckResult
{
    const auto & check = find_check(name);
    CheckResult result{check.info.name, check.info.criterion, false, {}, {}, 0, check.info.limit_seconds};
    Recorder recorder{result};
    auto start = std::chrono::steady_clock::now();
    try {
        check.body(recorder);
    }
    catch (const std::exception & e) {
        result.failures.push_back(fmt::format("exception: {}", e.what()));
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.seconds > result.limit_seconds)
        result.failures.push_back(fmt::format("took {:.2f}s, limit {}s", result.seconds, result.limit_seconds));
    result.passed = result.failures.empty();
    return result;
}

auto cubedens::run_suite(const std::string & suite) -> std::vector<CheckResult>
{
    std::vector<std::string> names;
    if (suite == "all" || suite == "acceptance") {
        for (const auto & c : checks())
            if (suite == "all" || c.info.criterion)
                names.push_back(c.info.name);
    }
    else if (suite == "cycle-d4")
        names = {"c8-lower", "c8-upper"};
    else
        names = {find_check(suite).info.name};

    std::vector<CheckResult> results;
    for (const auto & n : names)
        results.push_back(run_check(n));
    return results;
}

auto cubedens::format_result_line(const CheckResult & r) -> std::string
{
    auto line = fmt::format("{} [{}] {} ({:.2f}s, limit {}s)", r.passed ? "PASS" : "FAIL",
        r.criterion ? std::to_string(*r.criterion) : std::string("-"), r.name, r.seconds, r.limit_seconds);
    for (const auto & [k, v] : r.measured)
        line += fmt::format(" {}={}", replace_spaces(k), v);
    for (const auto & f : r.failures)
        line += fmt::format(" | {}", f);
    return line;
}

#include "helpers.hpp"

#include <cubedens/configurations.hpp>
#include <cubedens/constructions.hpp>
#include <cubedens/density.hpp>
#include <cubedens/error.hpp>
#include <cubedens/seqfam.hpp>

#include <doctest.h>

using namespace cubedens;

namespace
{
    auto u(std::string_view text) -> SeqFamily { return parse_family(text, FamilyKind::U); }
    auto v(std::string_view text) -> SeqFamily { return parse_family(text, FamilyKind::V); }

    auto random_u_family(int d, int n, std::size_t size, std::mt19937_64 & rng) -> SeqFamily
    {
        auto universe = sequence_universe(d, n);
        std::shuffle(universe.begin(), universe.end(), rng);
        SeqFamily f{FamilyKind::U, d, n, {}, {}};
        for (std::size_t i = 0; i < std::min(size, universe.size()); ++i) {
            auto s = universe[i];
            if (rng() % 2)
                s = s.reversed();
            f.sequences.push_back(s);
        }
        return f;
    }

    auto random_v_family(int d, int n, std::size_t size, std::mt19937_64 & rng) -> SeqFamily
    {
        auto universe = bisequence_universe(d, n);
        std::shuffle(universe.begin(), universe.end(), rng);
        SeqFamily f{FamilyKind::V, d, n, {}, {}};
        for (std::size_t i = 0; i < std::min(size, universe.size()); ++i) {
            auto b = universe[i];
            if (rng() % 2)
                b = b.swapped();
            f.bisequences.push_back(b);
        }
        return f;
    }

    auto to_oracle(const SeqFamily & f) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out;
        for (const auto & s : f.sequences)
            out.push_back(s.elems);
        return out;
    }

    auto to_oracle_bi(const SeqFamily & f) -> std::vector<oracle::Bi>
    {
        std::vector<oracle::Bi> out;
        for (const auto & b : f.bisequences)
            out.push_back({b.left, b.right});
        return out;
    }
}

TEST_SUITE("seqfam")
{
    TEST_CASE("textual examples for sequences")
    {
        for (auto w : {"abceg", "gecba", "abegh", "hgeba", "ghiaj", "jaihg"})
            CHECK(check_property_U(u(std::string("[abcde, ") + w + "]")));
        for (auto w : {"fbdcg", "gcdbf", "edgbh", "hbgde"})
            CHECK_FALSE(check_property_U(u(std::string("[abcde, ") + w + "]")));
        CHECK_FALSE(check_property_U(u("[abc]")));

        auto violation = check_property_U(u("[abcde, abceg]"));
        REQUIRE(violation);
        CHECK(violation->reason == Violation::Reason::segment);
        CHECK(violation->owner == 1);
        CHECK(violation->other == 0);
        CHECK(format_symbols(violation->segment, SymbolStyle::letters) == "abce");

        auto reversal = check_property_U(u("[abc, cba]"));
        REQUIRE(reversal);
        CHECK(reversal->reason == Violation::Reason::reversal);
    }

    TEST_CASE("textual examples for bisequences")
    {
        CHECK(check_property_V(v("[bxy|, bxz|, byz|]")));
        CHECK(check_property_V(v("[bxz|, byz|, bxy|]")));
        CHECK(check_property_V(v("[bx|c, bx|d, dx|c]")));
        CHECK(check_property_V(v("[bx|c, dx|c, dx|b]")));
        CHECK_FALSE(check_property_V(v("[bxy|, bxz|]")));
        CHECK_FALSE(check_property_V(v("[bx|c, bx|d]")));
        CHECK_FALSE(check_property_V(v("[a|bc]")));
        CHECK(check_property_V(v("[a|bc, bc|a]")));
        CHECK(check_property_V(v("[|abc, acb|]")));
    }

    TEST_CASE("sequence checker agrees with the oracle")
    {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 400; ++trial) {
            int d = 3 + static_cast<int>(rng() % 2);
            int n = d + static_cast<int>(rng() % 4);
            auto f = random_u_family(d, n, 2 + rng() % 4, rng);
            CHECK(check_property_U(f).has_value() == ! oracle::u_valid(to_oracle(f)));
        }
    }

    TEST_CASE("bisequence checker agrees with the oracle")
    {
        std::mt19937_64 rng(37);
        for (int trial = 0; trial < 400; ++trial) {
            int d = 2 + static_cast<int>(rng() % 3);
            int n = d + static_cast<int>(rng() % 3);
            auto f = random_v_family(d, n, 2 + rng() % 4, rng);
            CHECK(check_property_V(f).has_value() == ! oracle::v_valid(to_oracle_bi(f)));
        }
    }

    TEST_CASE("conflicts are symmetric and match the checker")
    {
        auto universe = sequence_universe(4, 6);
        for (std::size_t i = 0; i < universe.size(); i += 7)
            for (std::size_t j = 0; j < universe.size(); j += 5) {
                if (i == j)
                    continue;
                bool c = sequences_conflict(universe[i], universe[j]);
                CHECK(c == sequences_conflict(universe[j], universe[i]));
                SeqFamily f{FamilyKind::U, 4, 6, {universe[i], universe[j]}, {}};
                CHECK(c == check_property_U(f).has_value());
            }
    }

    TEST_CASE("no valid family repeats a support set")
    {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 300; ++trial) {
            auto f = random_u_family(3, 5, 3, rng);
            if (check_property_U(f))
                continue;
            std::set<std::vector<int>> supports;
            for (auto s : f.sequences) {
                std::sort(s.elems.begin(), s.elems.end());
                supports.insert(s.elems);
            }
            CHECK(supports.size() == f.size());
        }
    }

    TEST_CASE("universe sizes")
    {
        CHECK(sequence_universe(4, 8).size() == 840);
        CHECK(sequence_universe(3, 4).size() == 12);
        CHECK(bisequence_universe(3, 4).size() == 48);
        for (auto [d, n] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{3, 5}, std::pair{4, 5}})
            CHECK(bisequence_universe(d, n).size() == oracle::bisequences(d, n).size());
        for (const auto & s : sequence_universe(3, 5))
            CHECK(s == s.canonical());
        CHECK_THROWS_AS((void) sequence_universe(4, 3), InvalidArgument);
    }

    TEST_CASE("maximum families agree with plain search")
    {
        for (int n = 3; n <= 6; ++n)
            CHECK(max_family(FamilyKind::U, 3, n).size == oracle::max_u(3, n));
        for (int n = 4; n <= 5; ++n)
            CHECK(max_family(FamilyKind::U, 4, n).size == oracle::max_u(4, n));
        for (int n = 3; n <= 5; ++n)
            CHECK(max_family(FamilyKind::V, 3, n).size == oracle::max_v(3, n));
        CHECK(max_family(FamilyKind::V, 2, 4).size == oracle::max_v(2, 4));
    }

    TEST_CASE("known maxima")
    {
        CHECK(max_family(FamilyKind::U, 3, 4).size == 3);
        CHECK(max_family(FamilyKind::U, 3, 5).size == 6);
        CHECK(max_family(FamilyKind::V, 3, 4).size == 4);
        auto big = max_family(FamilyKind::U, 4, 8);
        CHECK(big.size == 16);
        CHECK(big.exact);
        CHECK(big.universe == 840);
        CHECK_FALSE(check_property_U(big.witness));
    }

    TEST_CASE("symmetry rooting does not change the answer")
    {
        MaxFamilyOptions plain;
        plain.use_symmetry = false;
        for (auto [kind, d, n] : {std::tuple{FamilyKind::U, 4, 7}, std::tuple{FamilyKind::V, 3, 6}, std::tuple{FamilyKind::U, 3, 7}}) {
            auto a = max_family(kind, d, n);
            auto b = max_family(kind, d, n, plain);
            CHECK(a.size == b.size);
            CHECK_FALSE(check_family(a.witness));
            CHECK_FALSE(check_family(b.witness));
            CHECK(a.witness.size() == a.size);
        }
    }

    TEST_CASE("oversized universes give a flagged greedy family")
    {
        MaxFamilyOptions small;
        small.max_universe = 10;
        auto r = max_family(FamilyKind::U, 3, 6, small);
        CHECK_FALSE(r.exact);
        CHECK(r.size > 0);
        CHECK(r.size <= 12);
        CHECK_FALSE(check_property_U(r.witness));
        CHECK_THROWS_AS((void) max_family(FamilyKind::U, 6, 20), ComputationRefused);
    }

    TEST_CASE("a time limit keeps the witness valid")
    {
        MaxFamilyOptions quick;
        quick.time_limit = std::chrono::milliseconds(0);
        auto r = max_family(FamilyKind::U, 4, 9, quick);
        CHECK_FALSE(check_property_U(r.witness));
        CHECK(r.witness.size() == r.size);
    }

    TEST_CASE("extremal three-sequence families")
    {
        for (int n = 3; n <= 12; ++n) {
            auto f = extremal_U3(n);
            CHECK(f.size() == extremal_U3_size(n));
            CHECK_FALSE(check_property_U(f));
        }
        CHECK(extremal_U3_size(4) == 3);
        CHECK(extremal_U3_size(6) == 12);
        CHECK(extremal_U3_size(7) == 20);
        CHECK_THROWS_AS((void) extremal_U3(2), InvalidArgument);
    }

    TEST_CASE("staircases")
    {
        auto s = staircase(Seq{{1, 2, 3}});
        CHECK(Configuration(3, s) == make_perfect_cycle(3));
        auto p = staircase(Biseq{{1}, {2, 3}});
        CHECK(exact_copy(Configuration(3, p), make_perfect_path(3)));
        CHECK(staircase(Biseq{{}, {3, 1, 2}}) == std::vector<VertexBits>{0, 4, 5, 7});
    }

    TEST_CASE("families read from pointed sets")
    {
        auto c6 = make_perfect_cycle(3);
        VertexSet s = VertexSet::from_vertices(3, c6.vertices());
        auto f = family_from_pointed_set(c6, 3, s, 0);
        REQUIRE(f.size() == 1);
        CHECK(f.sequences[0] == Seq{{1, 2, 3}});

        auto c8 = make_perfect_cycle(4);
        auto blow = blowup(equipartition_blowup(c8, 8));
        auto g = family_from_pointed_set(c8, 8, blow, 0);
        CHECK(g.size() == 16);
        CHECK_FALSE(check_property_U(g));

        auto path = make_perfect_path(3);
        auto pb = blowup(path_blowup(3, 4));
        auto h = family_from_pointed_set(path, 4, pb, 0);
        CHECK(h.kind == FamilyKind::V);
        CHECK(h.size() == 4);
        CHECK_FALSE(check_property_V(h));

        CHECK_THROWS_AS((void) family_from_pointed_set(adjacent_pair(3), 4, pb, 0), InvalidArgument);
        CHECK_THROWS_AS((void) family_from_pointed_set(c6, 3, s, 2), InvalidArgument);
    }

    TEST_CASE("family sizes equal local counts on random pointed sets")
    {
        std::mt19937_64 rng(43);
        auto c6 = make_perfect_cycle(3);
        auto path = make_perfect_path(3);
        for (int trial = 0; trial < 40; ++trial) {
            auto s = testing::random_set(5, 0.5, rng);
            s.insert(0);
            auto fu = family_from_pointed_set(c6, 5, s, 0);
            CHECK(BigInt(fu.size()) == local_count(c6, 5, s, 0, Side::in).count);
            CHECK_FALSE(check_property_U(fu));
            auto fv = family_from_pointed_set(path, 5, s, 0);
            CHECK(BigInt(fv.size()) == local_count(path, 5, s, 0, Side::in).count);
            CHECK_FALSE(check_property_V(fv));
            auto w = static_cast<VertexBits>(rng() % 32);
            if (s.contains(w))
                CHECK(BigInt(family_from_pointed_set(c6, 5, s, w).size()) == local_count(c6, 5, s, w, Side::in).count);
        }
    }

    TEST_CASE("pointed sets built from families")
    {
        auto single = pointed_set_from_family(parse_family("1 2 3", FamilyKind::U, 3, 5));
        CHECK(single.vertices() == std::vector<VertexBits>{0, 1, 3, 4, 6, 7});
        auto ext = extremal_U3(4);
        auto s = pointed_set_from_family(ext);
        CHECK(local_count(make_perfect_cycle(3), 4, s, 0, Side::in).count == 3);
        auto wit = max_family(FamilyKind::V, 3, 4).witness;
        CHECK(local_count(make_perfect_path(3), 4, pointed_set_from_family(wit), 0, Side::in).count == 4);
        CHECK_THROWS_AS((void) pointed_set_from_family(u("[abcde, abceg]")), InvalidArgument);
    }

    TEST_CASE("round trips keep maximum witnesses")
    {
        for (auto [kind, d, n] : {std::tuple{FamilyKind::U, 3, 6}, std::tuple{FamilyKind::U, 4, 8}, std::tuple{FamilyKind::V, 3, 5},
                 std::tuple{FamilyKind::V, 4, 5}}) {
            auto w = max_family(kind, d, n).witness;
            auto h = kind == FamilyKind::U ? make_perfect_cycle(d) : make_perfect_path(d);
            auto back = family_from_pointed_set(h, n, pointed_set_from_family(w), 0);
            CHECK(back.normalized().sequences == w.normalized().sequences);
            CHECK(back.normalized().bisequences == w.normalized().bisequences);
        }
    }

    TEST_CASE("parsing and formatting")
    {
        auto f = parse_family("1 2 3\n# comment\n4 5 6\n", FamilyKind::U);
        CHECK(f.d == 3);
        CHECK(f.n == 6);
        CHECK(format_family(f) == "1 2 3\n4 5 6\n");
        CHECK(format_family(f, SymbolStyle::letters) == "abc\ndef\n");
        auto g = parse_family("1 2 | 3\n| 4 5 6\n", FamilyKind::V);
        CHECK(g.bisequences[0] == Biseq{{1, 2}, {3}});
        CHECK(g.bisequences[1] == Biseq{{}, {4, 5, 6}});
        CHECK(parse_family(format_family(g), FamilyKind::V).bisequences == g.bisequences);
        CHECK(format_member(Biseq{{1}, {}}, SymbolStyle::numbers) == "1 |");
        auto h = parse_family("[bx;c, BX|d]", FamilyKind::V);
        CHECK(h.bisequences[1] == Biseq{{2, 24}, {4}});
        CHECK(uses_letters(" [abc]"));
        CHECK_FALSE(uses_letters("1 2 3"));
        CHECK(parse_family("1 2 3", FamilyKind::U, 3, 9).n == 9);
        CHECK_THROWS_AS((void) parse_family("1 2 3\n1 2", FamilyKind::U), ParseError);
        CHECK_THROWS_AS((void) parse_family("1 2 2", FamilyKind::U), ParseError);
        CHECK_THROWS_AS((void) parse_family("1 2 x", FamilyKind::U), ParseError);
        CHECK_THROWS_AS((void) parse_family("[ab1]", FamilyKind::U), ParseError);
        CHECK_THROWS_AS((void) parse_family("1 | 2", FamilyKind::U), ParseError);
        CHECK_THROWS_AS((void) parse_family("1 2 3\n1 2 3", FamilyKind::U), ParseError);
        CHECK_THROWS_AS((void) parse_family("1 2 3", FamilyKind::U, 3, 2), ParseError);
        CHECK_THROWS_AS((void) parse_family("[abc", FamilyKind::U), ParseError);
    }
}

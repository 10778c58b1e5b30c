#include "helpers.hpp"

#include <cubedens/bits.hpp>
#include <cubedens/cube.hpp>
#include <cubedens/error.hpp>

#include <doctest.h>

#include <set>

using namespace cubedens;

TEST_SUITE("cube")
{
    TEST_CASE("deposit and extract invert each other")
    {
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 1000; ++trial) {
            auto mask = static_cast<std::uint32_t>(rng());
            auto value = static_cast<std::uint32_t>(rng()) & ((std::uint32_t{1} << std::popcount(mask)) - 1);
            if (std::popcount(mask) == 32)
                value = static_cast<std::uint32_t>(rng());
            CHECK(extract_bits(deposit_bits(value, mask), mask) == value);
            CHECK((deposit_bits(value, mask) & ~mask) == 0);
        }
    }

    TEST_CASE("next_same_popcount walks all k-subsets")
    {
        int seen = 0;
        for (std::uint32_t x = 0b111; x < (1U << 7); x = next_same_popcount(x))
            ++seen;
        CHECK(seen == 35);
    }

    TEST_CASE("subcube counts and enumeration")
    {
        for (int n = 1; n <= 7; ++n)
            for (int d = 1; d <= n; ++d) {
                auto all = enumerate_subcubes(n, d);
                CHECK(BigInt(all.size()) == subcube_count(n, d));
                CHECK(all.size() == oracle::all_cubes(n, d).size());
                std::set<std::pair<VertexBits, VertexBits>> distinct;
                for (const auto & q : all) {
                    CHECK(q.dim() == d);
                    CHECK((q.base() & q.free_mask()) == 0);
                    distinct.insert({q.free_mask(), q.base()});
                }
                CHECK(distinct.size() == all.size());
            }
        CHECK(subcube_count(8, 4) == 1120);
        CHECK(subcube_count(6, 3) == 160);
    }

    TEST_CASE("subcube embedding follows sorted free coordinates")
    {
        Subcube q(5, 0b10110, 0b00001);
        CHECK(q.free_coords() == std::vector<int>{1, 2, 4});
        CHECK(q.embed(0) == 0b00001);
        CHECK(q.embed(0b001) == 0b00011);
        CHECK(q.embed(0b100) == 0b10001);
        CHECK(q.contains(0b10111));
        CHECK_FALSE(q.contains(0b01000));
        CHECK_THROWS_AS(Subcube(3, 0b011, 0b001), InvalidArgument);
    }

    TEST_CASE("automorphism group")
    {
        for (int d = 1; d <= 4; ++d) {
            std::uint64_t count = 0;
            std::set<std::vector<VertexBits>> images;
            for_each_automorphism(d, [&](const CubeAutomorphism & a) {
                ++count;
                std::vector<VertexBits> img;
                for (VertexBits v = 0; v < (VertexBits{1} << d); ++v)
                    img.push_back(a.apply(v));
                images.insert(img);
                // distances are preserved
                for (VertexBits u = 0; u < (VertexBits{1} << d); ++u)
                    for (VertexBits v = 0; v < (VertexBits{1} << d); ++v)
                        CHECK(hamming_distance(a.apply(u), a.apply(v)) == hamming_distance(u, v));
            });
            CHECK(BigInt(count) == automorphism_group_order(d));
            CHECK(images.size() == count);
        }
        CHECK(automorphism_group_order(4) == 384);
        CHECK_THROWS_AS(CubeAutomorphism({0, 0}, 0), InvalidArgument);
        CHECK_THROWS_AS(CubeAutomorphism({0, 1}, 4), InvalidArgument);
    }

    TEST_CASE("exact copies from the introduction")
    {
        auto h = parse_configuration("- 12", 3);
        CHECK(exact_copy(h, parse_configuration("2 123", 3)));
        CHECK_FALSE(exact_copy(h, parse_configuration("2 13", 3)));
        CHECK_THROWS_AS((void) exact_copy(h, parse_configuration("- 12", 2)), InvalidArgument);
    }

    TEST_CASE("exact_copy agrees with the oracle")
    {
        std::mt19937_64 rng(7);
        for (int d = 1; d <= 4; ++d)
            for (int trial = 0; trial < 150; ++trial) {
                auto h = testing::random_config(d, rng);
                auto k = testing::random_config(d, rng);
                if (trial % 3 == 0) {
                    // a guaranteed copy
                    std::vector<int> perm(static_cast<std::size_t>(d));
                    std::iota(perm.begin(), perm.end(), 0);
                    std::shuffle(perm.begin(), perm.end(), rng);
                    k = apply_automorphism(CubeAutomorphism(perm, static_cast<VertexBits>(rng()) & ((1U << d) - 1)), h);
                }
                bool expected = oracle::exact_copy(d, testing::to_list(h), testing::to_list(k));
                CHECK(exact_copy(h, k) == expected);
                CHECK((canonical_form(h) == canonical_form(k)) == expected);
            }
    }

    TEST_CASE("canonical form is an orbit invariant and a member of the orbit")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            auto h = testing::random_config(4, rng);
            auto c = canonical_form(h);
            CHECK(exact_copy(h, c));
            for_each_automorphism(4, [&](const CubeAutomorphism & a) {
                if ((a.flip() & 1U) == 0)
                    CHECK(canonical_form(apply_automorphism(a, h)) == c);
            });
        }
    }

    TEST_CASE("pattern orbit membership")
    {
        std::mt19937_64 rng(3);
        for (int d = 2; d <= 5; ++d)
            for (int trial = 0; trial < 20; ++trial) {
                auto h = testing::random_config(d, rng);
                PatternOrbit orbit(h);
                for (int probe = 0; probe < 20; ++probe) {
                    auto k = testing::random_config(d, rng);
                    CHECK(orbit.contains(k.mask()) == exact_copy(h, k));
                }
                CHECK(orbit.contains(h.mask()));
            }
    }

    TEST_CASE("subcube frame extracts the induced pattern")
    {
        std::mt19937_64 rng(5);
        auto s = testing::random_set(6, 0.5, rng);
        for (const auto & q : enumerate_subcubes(6, 3)) {
            SubcubeFrame frame(q.free_mask());
            CHECK(Configuration::from_mask(3, frame.pattern(s, q.base())) == induced_pattern(s, q));
        }
    }

    TEST_CASE("configuration parsing")
    {
        auto h = parse_configuration("{-, 1, 12, 123}");
        CHECK(h.dim() == 3);
        CHECK(h.size() == 4);
        CHECK(parse_configuration("000 100 110 111") == h);
        CHECK(parse_configuration("\xE2\x88\x85 1 12 123") == h);
        CHECK(parse_configuration("- 1 12 123 # a path", 4).dim() == 4);
        CHECK(parse_configuration("1", 1).vertices()[0] == 1);
        CHECK(parse_configuration("a").dim() == 10);
        CHECK(format_configuration(h) == "-\n1\n12\n123\n");
        CHECK(format_configuration(h, VertexNotation::binary) == "000\n100\n110\n111\n");
        CHECK(parse_configuration(format_configuration(h)) == h);
        CHECK(to_string(h) == "{-, 1, 12, 123}");
        CHECK_THROWS_AS((void) parse_configuration("1 1"), ParseError);
        CHECK_THROWS_AS((void) parse_configuration("1x!"), ParseError);
        CHECK_THROWS_AS((void) parse_configuration("123", 2), ParseError);
        CHECK_THROWS_AS((void) parse_configuration("00 011"), ParseError);
    }

    TEST_CASE("configuration validation")
    {
        CHECK_THROWS_AS(Configuration(2, {4}), InvalidArgument);
        CHECK_THROWS_AS(Configuration(2, {1, 1}), InvalidArgument);
        CHECK_THROWS_AS(Configuration(max_dimension + 1, {}), InvalidArgument);
        CHECK(Configuration(3, {5, 1}).vertices()[0] == 1);
        CHECK(Configuration::from_mask(2, 0b1001) == Configuration(2, {0, 3}));
    }

    TEST_CASE("vertex set encoding")
    {
        std::mt19937_64 rng(9);
        for (int n = 1; n <= 10; ++n) {
            auto s = testing::random_set(n, 0.4, rng);
            CHECK(VertexSet::from_hex(n, s.to_hex()) == s);
            CHECK(parse_vertex_set(serialize_vertex_set(s)) == s);
            auto c = s.complement();
            CHECK(c.count() + s.count() == s.universe_size());
            auto t = s.translated(1);
            for (std::uint64_t v = 0; v < s.universe_size(); ++v)
                CHECK(t.contains(static_cast<VertexBits>(v ^ 1U)) == s.contains(static_cast<VertexBits>(v)));
        }
        VertexSet s(3);
        s.insert(0);
        s.insert(5);
        CHECK(s.to_hex() == "12");
        CHECK(s.vertices() == std::vector<VertexBits>{0, 5});
        CHECK_THROWS_AS((void) parse_vertex_set("n 3\nzz"), ParseError);
        CHECK_THROWS_AS((void) parse_vertex_set("n 2\n1234"), ParseError);
        CHECK_THROWS_AS(VertexSet(max_dimension + 1), InvalidArgument);
    }
}

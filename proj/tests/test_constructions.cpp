#include "helpers.hpp"

#include <cubedens/configurations.hpp>
#include <cubedens/constructions.hpp>
#include <cubedens/density.hpp>
#include <cubedens/error.hpp>

#include <doctest.h>

using namespace cubedens;

TEST_SUITE("constructions")
{
    TEST_CASE("equipartition")
    {
        auto p = equipartition(8, 3);
        REQUIRE(p.size() == 3);
        CHECK(p[0] == std::vector<int>{0, 1, 2});
        CHECK(p[1] == std::vector<int>{3, 4, 5});
        CHECK(p[2] == std::vector<int>{6, 7});
        CHECK_THROWS_AS((void) equipartition(2, 3), InvalidArgument);
    }

    TEST_CASE("blow-up membership follows block parities")
    {
        auto h = make_perfect_cycle(3);
        for (int n = 3; n <= 8; ++n) {
            auto spec = equipartition_blowup(h, n);
            auto s = blowup(spec);
            for (VertexBits v = 0; v < (VertexBits{1} << n); ++v) {
                VertexBits parity = 0;
                for (std::size_t j = 0; j < spec.blocks.size(); ++j) {
                    int ones = 0;
                    for (int c : spec.blocks[j])
                        ones += (v >> c) & 1U;
                    parity |= static_cast<VertexBits>(ones & 1) << j;
                }
                CHECK(parity_vector(spec, v) == parity);
                CHECK(s.contains(v) == h.contains(parity));
            }
        }
    }

    TEST_CASE("guarantees are met")
    {
        for (int d = 2; d <= 4; ++d) {
            auto c = make_perfect_cycle(d);
            for (int n = d; n <= d + 3; ++n) {
                auto spec = equipartition_blowup(c, n);
                auto g = blowup_guarantee(spec, c);
                auto r = count_exact_copies(c, n, blowup(spec));
                CHECK(g <= r.count);
            }
        }
        for (int n = 4; n <= 7; ++n) {
            auto path = make_perfect_path(3);
            auto spec = path_blowup(3, n);
            CHECK(blowup_guarantee(spec, path) <= count_exact_copies(path, n, blowup(spec)).count);
        }
        auto c8 = make_perfect_cycle(4);
        CHECK(blowup_guarantee(equipartition_blowup(c8, 8), c8) == 256);
        CHECK(blowup_guarantee(path_blowup(3, 4), make_perfect_path(3)) == 8);
        CHECK_THROWS_AS((void) blowup_guarantee(equipartition_blowup(c8, 8), make_perfect_path(4)), InvalidArgument);
    }

    TEST_CASE("equipartition bounds")
    {
        CHECK(equipartition_bound(4, BoundKind::cycle) == make_rational(3, 32));
        CHECK(equipartition_bound(3, BoundKind::path) == make_rational(3, 8));
        CHECK(equipartition_bound(2, BoundKind::cycle) == make_rational(1, 2));
        CHECK(equipartition_bound(3, BoundKind::cycle) == make_rational(2, 9));
        CHECK(equipartition_bound(6, BoundKind::cycle) == make_rational(5, 324));
    }

    TEST_CASE("modular weight sets")
    {
        auto s = modular_weight_set(6, {1, 2}, 3);
        for (VertexBits v = 0; v < 64; ++v)
            CHECK(s.contains(v) == (std::popcount(v) % 3 != 0));
        CHECK_THROWS_AS((void) modular_weight_set(4, {3}, 3), InvalidArgument);
        auto h = half_parity_set(5);
        for (VertexBits v = 0; v < 32; ++v)
            CHECK(h.contains(v) == (std::popcount(v & 0b11U) % 2 == 0));
    }

    TEST_CASE("blow-up spec text")
    {
        auto spec = parse_blowup_spec("1 2\n3\n4 5\npatterns:\n000\n110\n011\n");
        CHECK(spec.n == 5);
        CHECK(spec.parts() == 3);
        CHECK(spec.blocks[2] == std::vector<int>{3, 4});
        CHECK(spec.patterns == std::vector<VertexBits>{0b000, 0b011, 0b110});
        CHECK(parse_blowup_spec(format_blowup_spec(spec)).patterns == spec.patterns);
        auto path = path_blowup(3, 6);
        auto round = parse_blowup_spec(format_blowup_spec(path));
        CHECK(round.blocks == path.blocks);
        CHECK(round.patterns == path.patterns);
        CHECK_THROWS_AS((void) parse_blowup_spec("1 2\n2\npatterns:\n00\n"), ParseError);
        CHECK_THROWS_AS((void) parse_blowup_spec("1\n2\npatterns:\n001\n"), ParseError);
        CHECK_THROWS_AS((void) parse_blowup_spec("1\n2\n"), ParseError);
    }
}

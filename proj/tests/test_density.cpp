#include "helpers.hpp"

#include <cubedens/configurations.hpp>
#include <cubedens/constructions.hpp>
#include <cubedens/density.hpp>
#include <cubedens/error.hpp>

#include <doctest.h>

using namespace cubedens;

TEST_SUITE("density")
{
    TEST_CASE("count_exact_copies agrees with the oracle")
    {
        std::mt19937_64 rng(21);
        for (auto [d, n] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}, std::pair{3, 5}, std::pair{4, 5}})
            for (int trial = 0; trial < 6; ++trial) {
                auto h = testing::random_config(d, rng);
                auto s = testing::random_set(n, 0.5, rng);
                auto r = count_exact_copies(h, n, s);
                CHECK(r.count == oracle::count(d, testing::to_list(h), n, testing::to_set(s)));
                CHECK(r.total == subcube_count(n, d));
                CHECK(r.fraction == make_rational(r.count, r.total));
                CHECK(r.mode == ProofMode::counted);
                CHECK(r.exact());
            }
    }

    TEST_CASE("thread count does not change the count")
    {
        std::mt19937_64 rng(2);
        auto s = testing::random_set(8, 0.5, rng);
        auto h = make_perfect_cycle(4);
        CHECK(count_exact_copies(h, 8, s, 1).count == count_exact_copies(h, 8, s, 3).count);
    }

    TEST_CASE("known counts")
    {
        auto c6 = make_perfect_cycle(3);
        auto r = count_exact_copies(c6, 6, modular_weight_set(6, {1, 2}, 3));
        CHECK(r.count == 40);
        CHECK(r.total == 160);
        CHECK(to_string(r.fraction) == "1/4");
        auto c8 = make_perfect_cycle(4);
        CHECK(count_exact_copies(c8, 8, blowup(equipartition_blowup(c8, 8))).count == 256);
        CHECK_THROWS_AS((void) count_exact_copies(c8, 3, VertexSet(3)), InvalidArgument);
        CHECK_THROWS_AS((void) count_exact_copies(c8, 5, VertexSet(6)), InvalidArgument);
    }

    TEST_CASE("complement density counts the complement configuration in the complement set")
    {
        std::mt19937_64 rng(4);
        for (int trial = 0; trial < 10; ++trial) {
            auto h = testing::random_config(3, rng);
            auto s = testing::random_set(5, 0.5, rng);
            auto r = complement_density(h, 5, s);
            auto expected = oracle::count(3, oracle::complement(3, testing::to_list(h)), 5, testing::to_set(s.complement()));
            CHECK(r.count == expected);
            // a set and its complement see H and its complement equally often
            CHECK(r.count == count_exact_copies(h, 5, s).count);
        }
    }

    TEST_CASE("local counts agree with the oracle")
    {
        std::mt19937_64 rng(8);
        for (int trial = 0; trial < 20; ++trial) {
            auto h = testing::random_config(3, rng);
            auto s = testing::random_set(5, 0.5, rng);
            auto v = static_cast<VertexBits>(rng() % 32);
            auto side = s.contains(v) ? Side::in : Side::out;
            auto r = local_count(h, 5, s, v, side);
            CHECK(r.count == oracle::local_count(3, testing::to_list(h), 5, testing::to_set(s), v));
            CHECK(r.total == 10);
            CHECK_THROWS_AS((void) local_count(h, 5, s, v, side == Side::in ? Side::out : Side::in), InvalidArgument);
        }
        auto c8 = make_perfect_cycle(4);
        auto s = blowup(equipartition_blowup(c8, 8));
        CHECK(local_count(c8, 8, s, 0, Side::in).count == 16);
    }

    TEST_CASE("exact maximum agrees with brute force over every set")
    {
        for (auto h : {adjacent_pair(), antipodal_pair(), single_vertex(2), make_perfect_path(2),
                 Configuration(2, {}), Configuration(2, {0, 1, 2, 3})})
            for (int n = 2; n <= 3; ++n) {
                auto r = max_density_exact(h, n);
                CHECK(r.mode == ProofMode::exhaustive);
                CHECK(r.count == oracle::max_count(2, testing::to_list(h), n));
                REQUIRE(r.witness);
                CHECK(count_exact_copies(h, n, *r.witness).count == r.count);
            }
        for (auto h : {make_perfect_path(3), make_perfect_cycle(3), single_vertex(3)}) {
            auto r = max_density_exact(h, 3);
            CHECK(r.count == oracle::max_count(3, testing::to_list(h), 3));
        }
        CHECK(max_density_exact(make_perfect_path(3), 3).fraction == 1);
        CHECK(max_density_exact(adjacent_pair(), 3).fraction == make_rational(2, 3));
        CHECK_THROWS_AS((void) max_density_exact(adjacent_pair(), 5), ComputationRefused);
    }

    TEST_CASE("exact maximum at n = 4 is at least every set sampled")
    {
        std::mt19937_64 rng(6);
        auto h = make_perfect_path(2);
        auto best = max_density_exact(h, 4);
        for (int trial = 0; trial < 300; ++trial)
            CHECK(count_exact_copies(h, 4, testing::random_set(4, 0.5, rng)).count <= best.count);
    }

    TEST_CASE("search reports a verified lower bound")
    {
        SearchOptions options;
        options.budget = 5000;
        auto c6 = make_perfect_cycle(3);
        auto r = max_density_search(c6, 6, options);
        CHECK(r.mode == ProofMode::heuristic);
        CHECK_FALSE(r.exact());
        REQUIRE(r.witness);
        CHECK(count_exact_copies(c6, 6, *r.witness).count == r.count);
        CHECK(r.count >= 40);
        auto again = max_density_search(c6, 6, options);
        CHECK(again.count == r.count);
        CHECK(*again.witness == *r.witness);

        auto path = make_perfect_path(3);
        auto p = max_density_search(path, 5, options);
        CHECK(p.count >= count_exact_copies(path, 5, blowup(path_blowup(3, 5))).count);
    }

    TEST_CASE("facet restriction and averaging")
    {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 10; ++trial) {
            auto s = testing::random_set(5, 0.5, rng);
            auto h = testing::random_config(3, rng);
            auto facets = facet_densities(h, 5, s);
            CHECK(facets.size() == 10);
            Rational sum = 0;
            for (const auto & f : facets)
                sum += f;
            CHECK(sum / 10 == count_exact_copies(h, 5, s).fraction);

            auto f = restrict_to_facet(s, 2, true);
            CHECK(f.dim() == 4);
            for (VertexBits v = 0; v < 16; ++v) {
                VertexBits low = v & 0b11, high = (v >> 2) << 3;
                CHECK(f.contains(v) == s.contains(low | 0b100 | high));
            }
        }
        CHECK_THROWS_AS((void) facet_densities(make_perfect_cycle(3), 3, VertexSet(3)), InvalidArgument);
    }
}

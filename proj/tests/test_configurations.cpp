#include "helpers.hpp"

#include <cubedens/configurations.hpp>
#include <cubedens/error.hpp>

#include <doctest.h>

using namespace cubedens;

namespace
{
    /// Whether the vertices, in the given order, form a closed walk of unit steps.
    auto is_cycle_order(const std::vector<VertexBits> & order) -> bool
    {
        for (std::size_t i = 0; i < order.size(); ++i)
            if (hamming_distance(order[i], order[(i + 1) % order.size()]) != 1)
                return false;
        return true;
    }

    auto induced_edges(const Configuration & h) -> int
    {
        int edges = 0;
        for (auto u : h.vertices())
            for (auto v : h.vertices())
                edges += u < v && hamming_distance(u, v) == 1 ? 1 : 0;
        return edges;
    }
}

TEST_SUITE("configurations")
{
    TEST_CASE("perfect paths")
    {
        for (int d = 1; d <= 6; ++d) {
            auto p = make_perfect_path(d);
            CHECK(p.size() == static_cast<std::size_t>(d + 1));
            CHECK(induced_edges(p) == d);
            CHECK(p.contains(0));
            CHECK(p.contains((VertexBits{1} << d) - 1));
        }
    }

    TEST_CASE("perfect cycles")
    {
        for (int d = 2; d <= 6; ++d) {
            auto c = make_perfect_cycle(d);
            CHECK(c.size() == static_cast<std::size_t>(2 * d));
            std::vector<VertexBits> order;
            VertexBits v = 0;
            for (int i = 0; i < d; ++i)
                order.push_back(v), v |= VertexBits{1} << i;
            for (int i = 0; i < d; ++i)
                order.push_back(v), v &= ~(VertexBits{1} << i);
            CHECK(is_cycle_order(order));
            for (int i = 0; i < d; ++i)
                CHECK(hamming_distance(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i + d)]) == d);
            std::vector<VertexBits> sorted = order;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::vector<VertexBits>(c.vertices().begin(), c.vertices().end()) == sorted);
        }
        CHECK_THROWS_AS((void) make_perfect_cycle(1), InvalidArgument);
    }

    TEST_CASE("the two other 8-cycles are induced cycles but not perfect")
    {
        for (const auto & h : {bad_cycle_a(), bad_cycle_b()}) {
            CHECK(h.size() == 8);
            CHECK(induced_edges(h) == 8);
            CHECK_FALSE(exact_copy(h, make_perfect_cycle(4)));
        }
        CHECK_FALSE(exact_copy(bad_cycle_a(), bad_cycle_b()));
    }

    TEST_CASE("self-complementarity")
    {
        CHECK(is_self_complementary(catalog_lookup("C8@4")));
        CHECK_FALSE(is_self_complementary(catalog_lookup("badcycleA@4")));
        CHECK_FALSE(is_self_complementary(catalog_lookup("badcycleB@4")));
        for (PatternMask m = 0; m < 256; ++m) {
            auto h = Configuration::from_mask(3, m);
            auto list = testing::to_list(h);
            CHECK(is_self_complementary(h) == oracle::exact_copy(3, list, oracle::complement(3, list)));
            if (std::popcount(m) == 4)
                CHECK(is_self_complementary(h));
        }
        CHECK(complement(complement(bad_cycle_a())) == bad_cycle_a());
    }

    TEST_CASE("catalog")
    {
        CHECK(catalog_lookup("P4@3") == make_perfect_path(3));
        CHECK(catalog_lookup("C6@3") == make_perfect_cycle(3));
        CHECK(catalog_lookup("C10@5") == make_perfect_cycle(5));
        CHECK(catalog_lookup("P6@5") == make_perfect_path(5));
        CHECK(catalog_lookup("W2@2").size() == 1);
        CHECK(catalog_lookup("adjacent@2") == adjacent_pair());
        CHECK(catalog_lookup("antipodal@2") == antipodal_pair());
        CHECK(exact_copy(catalog_lookup("adjacent@3"), Configuration(3, {0, 4})));
        for (const auto & name : catalog_names())
            CHECK_NOTHROW((void) catalog_lookup(name));
        CHECK_THROWS_AS((void) catalog_lookup("C7@3"), InvalidArgument);
        CHECK_THROWS_AS((void) catalog_lookup("nonsense"), InvalidArgument);
    }
}

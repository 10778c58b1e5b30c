#include "oracle.hpp"

#include <cubedens/mis.hpp>

#include <doctest.h>

#include <random>

using namespace cubedens;

namespace
{
    auto random_graph(std::size_t n, double p, std::mt19937_64 & rng)
        -> std::pair<std::vector<Bitset>, std::vector<std::vector<bool>>>
    {
        std::vector<Bitset> rows(n, Bitset(n));
        std::vector<std::vector<bool>> matrix(n, std::vector<bool>(n, false));
        std::bernoulli_distribution coin(p);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (coin(rng)) {
                    rows[i].set(j);
                    rows[j].set(i);
                    matrix[i][j] = matrix[j][i] = true;
                }
        return {rows, matrix};
    }

    auto independent(const std::vector<Bitset> & rows, const std::vector<std::size_t> & set) -> bool
    {
        for (auto a : set)
            for (auto b : set)
                if (rows[a].test(b))
                    return false;
        return true;
    }
}

TEST_SUITE("mis")
{
    TEST_CASE("maximum independent set agrees with brute force")
    {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 200; ++trial) {
            auto n = static_cast<std::size_t>(rng() % 20);
            auto p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
            auto [rows, matrix] = random_graph(n, p, rng);
            auto r = max_independent_set(rows);
            CHECK(r.exact);
            CHECK(r.vertices.size() == oracle::max_independent(matrix));
            CHECK(independent(rows, r.vertices));
        }
    }

    TEST_CASE("parallel search gives the same size")
    {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            auto [rows, matrix] = random_graph(40, 0.3, rng);
            auto serial = max_independent_set(rows, {std::nullopt, 1, 0});
            auto parallel = max_independent_set(rows, {std::nullopt, 3, 0});
            CHECK(serial.vertices.size() == parallel.vertices.size());
            CHECK(independent(rows, parallel.vertices));
        }
    }

    TEST_CASE("lower bound filters out sets that are not larger")
    {
        std::mt19937_64 rng(5);
        auto [rows, matrix] = random_graph(15, 0.4, rng);
        auto best = oracle::max_independent(matrix);
        CHECK(max_independent_set(rows, {std::nullopt, 1, best}).vertices.empty());
        CHECK(max_independent_set(rows, {std::nullopt, 1, best - 1}).vertices.size() == best);
    }

    TEST_CASE("edge cases")
    {
        CHECK(max_independent_set({}).vertices.empty());
        std::vector<Bitset> lonely(5, Bitset(5));
        CHECK(max_independent_set(lonely).vertices.size() == 5);
    }

    TEST_CASE("a zero time limit leaves the result inexact but valid")
    {
        std::mt19937_64 rng(9);
        auto [rows, matrix] = random_graph(200, 0.1, rng);
        auto r = max_independent_set(rows, {std::chrono::milliseconds(0), 1, 0});
        CHECK(independent(rows, r.vertices));
        CHECK_FALSE(r.exact);
    }
}

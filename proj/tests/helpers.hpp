#pragma once

#include "oracle.hpp"

#include <cubedens/cube.hpp>
#include <cubedens/vertex_set.hpp>

#include <random>

namespace testing
{
    inline auto to_list(const cubedens::Configuration & h) -> oracle::VertexList
    {
        return {h.vertices().begin(), h.vertices().end()};
    }

    inline auto to_set(const cubedens::VertexSet & s) -> oracle::Set
    {
        oracle::Set out(static_cast<std::size_t>(s.universe_size()));
        for (std::size_t v = 0; v < out.size(); ++v)
            out[v] = s.contains(static_cast<cubedens::VertexBits>(v));
        return out;
    }

    inline auto random_set(int n, double density, std::mt19937_64 & rng) -> cubedens::VertexSet
    {
        cubedens::VertexSet s(n);
        std::bernoulli_distribution coin(density);
        for (std::uint64_t v = 0; v < s.universe_size(); ++v)
            if (coin(rng))
                s.insert(static_cast<cubedens::VertexBits>(v));
        return s;
    }

    inline auto random_config(int d, std::mt19937_64 & rng) -> cubedens::Configuration
    {
        std::uniform_int_distribution<cubedens::PatternMask> pick(0, (cubedens::PatternMask{1} << (1U << d)) - 1);
        return cubedens::Configuration::from_mask(d, pick(rng));
    }
}

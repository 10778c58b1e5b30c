#pragma once

#include <cubedens/bits.hpp>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cubedens
{
    struct MisOptions
    {
        std::optional<std::chrono::milliseconds> time_limit;
        unsigned threads = 0;
        /// Only sets strictly larger than this are reported.
        std::size_t lower_bound = 0;
    };

    struct MisResult
    {
        /// Empty when nothing larger than the lower bound exists (or was found in time).
        std::vector<std::size_t> vertices;
        /// False when the time limit stopped the search before it closed.
        bool exact = true;
        std::uint64_t nodes = 0;
    };

    /// Maximum independent set of a conflict graph given as symmetric adjacency rows.
    /// Branch and bound on the complement (maximum clique), compatible-degree ordering,
    /// greedy colouring bound; the root's branches are shared between workers with a
    /// common incumbent.
    [[nodiscard]] auto max_independent_set(const std::vector<Bitset> & conflicts, const MisOptions & options = {})
        -> MisResult;
}

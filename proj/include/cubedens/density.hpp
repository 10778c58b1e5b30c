#pragma once

#include <cubedens/cube.hpp>
#include <cubedens/rational.hpp>
#include <cubedens/vertex_set.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cubedens
{
    /// How a reported value was obtained.
    enum class ProofMode
    {
        counted,    ///< direct count for a given set
        exhaustive, ///< exact maximum over all sets up to symmetry
        heuristic   ///< best set found by search; a lower bound only
    };

    [[nodiscard]] auto to_string(ProofMode mode) -> std::string;

    /// count good sub-d-cubes out of total; fraction is count/total in lowest terms.
    struct DensityReport
    {
        BigInt count;
        BigInt total;
        Rational fraction;
        std::optional<VertexSet> witness;
        ProofMode mode = ProofMode::counted;

        [[nodiscard]] auto exact() const -> bool { return mode != ProofMode::heuristic; }
    };

    enum class Side
    {
        in,
        out
    };

    /// Number of sub-d-cubes R of Q_n with S ∩ R an exact copy of H.
    [[nodiscard]] auto count_exact_copies(const Configuration & h, int n, const VertexSet & s, unsigned threads = 0)
        -> DensityReport;

    /// The same count for the complement configuration against the complement set.
    [[nodiscard]] auto complement_density(const Configuration & h, int n, const VertexSet & s) -> DensityReport;

    /// Largest n accepted by max_density_exact.
    inline constexpr int max_exact_dimension = 4;

    /// Exact maximum over all S ⊆ V(Q_n), with a witness. Only sets that are empty or
    /// contain ∅ and are minimal under coordinate permutation are examined.
    [[nodiscard]] auto max_density_exact(const Configuration & h, int n) -> DensityReport;

    struct SearchOptions
    {
        /// Evaluations (full counts or single-toggle deltas) the search may spend.
        std::uint64_t budget = 20000;
        std::uint64_t seed = 1;
        unsigned restarts = 4;
        unsigned threads = 0;
        std::vector<VertexSet> extra_seeds;
    };

    /// Seeded local search for a good S; the reported count is recomputed by
    /// count_exact_copies, so it is always a valid lower bound on Gmax.
    [[nodiscard]] auto max_density_search(const Configuration & h, int n, const SearchOptions & options = {})
        -> DensityReport;

    /// Good sub-d-cubes among the C(n,d) containing v; v must lie in S for side `in`
    /// and outside S for side `out`.
    [[nodiscard]] auto local_count(const Configuration & h, int n, const VertexSet & s, VertexBits v, Side side)
        -> DensityReport;

    /// S restricted to the facet x_{coord+1} = value, as a subset of V(Q_{n-1}).
    [[nodiscard]] auto restrict_to_facet(const VertexSet & s, int coord, bool value) -> VertexSet;

    /// The 2n facet densities g(H, d, n-1, S_j); their average is g(H, d, n, S) when d < n.
    [[nodiscard]] auto facet_densities(const Configuration & h, int n, const VertexSet & s) -> std::vector<Rational>;
}

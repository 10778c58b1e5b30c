#pragma once

#include <cubedens/cube.hpp>
#include <cubedens/rational.hpp>
#include <cubedens/vertex_set.hpp>

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cubedens
{
    /// Partition of the n coordinates into k blocks and a set of admissible k-bit
    /// parity patterns. A vertex belongs to the blow-up iff its vector of per-block
    /// parities is one of the patterns. Pattern bit j is the parity of block j.
    struct BlowupSpec
    {
        int n = 0;
        std::vector<std::vector<int>> blocks;
        std::vector<VertexBits> patterns;

        [[nodiscard]] auto parts() const -> int { return static_cast<int>(blocks.size()); }
    };

    /// Throws InvalidArgument unless the blocks partition [0, n) into nonempty
    /// parts and every pattern fits in k bits.
    auto validate(const BlowupSpec & spec) -> void;

    /// Per-block parity vector of v.
    [[nodiscard]] auto parity_vector(const BlowupSpec & spec, VertexBits v) -> VertexBits;

    [[nodiscard]] auto blowup(const BlowupSpec & spec) -> VertexSet;

    /// Contiguous blocks whose sizes differ by at most one, larger blocks first.
    [[nodiscard]] auto equipartition(int n, int k) -> std::vector<std::vector<int>>;

    /// Equipartition of [n] into d blocks with H's vertices as the patterns.
    [[nodiscard]] auto equipartition_blowup(const Configuration & h, int n) -> BlowupSpec;

    /// Equipartition of [n] into d+1 blocks with the perfect (2d+2)-cycle as the patterns.
    [[nodiscard]] auto path_blowup(int d, int n) -> BlowupSpec;

    /// Number of sub-d-cubes the blow-up is guaranteed to make good. With k = d parts
    /// (patterns an exact copy of H) this is prod|A_i| * 2^(n-d); with k = d+1 parts,
    /// H a perfect path and the patterns a perfect (2d+2)-cycle, it is
    /// sum_j prod_{i != j}|A_i| * 2^(n-d).
    [[nodiscard]] auto blowup_guarantee(const BlowupSpec & spec, const Configuration & h) -> BigInt;

    enum class BoundKind
    {
        cycle,
        path
    };

    /// d!/d^d for the cycle kind, d!/(d+1)^(d-1) for the path kind.
    [[nodiscard]] auto equipartition_bound(int d, BoundKind kind) -> Rational;

    /// { v : weight(v) mod modulus in residues }.
    [[nodiscard]] auto modular_weight_set(int n, const std::set<int> & residues, int modulus) -> VertexSet;

    /// Vertices whose coordinates 1..floor(n/2) sum to an even number.
    [[nodiscard]] auto half_parity_set(int n) -> VertexSet;

    /// One line per block listing 1-based coordinates, then a "patterns:" line
    /// followed by k-bit strings (first character is block 1).
    [[nodiscard]] auto parse_blowup_spec(std::string_view text) -> BlowupSpec;
    [[nodiscard]] auto format_blowup_spec(const BlowupSpec & spec) -> std::string;
}

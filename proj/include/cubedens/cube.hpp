#pragma once

#include <cubedens/rational.hpp>
#include <cubedens/vertex_set.hpp>

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubedens
{
    /// Configurations are small: their 2^d vertices fit one 64-bit pattern mask
    /// and the 2^d * d! automorphisms are enumerated directly.
    inline constexpr int max_config_dimension = 6;

    using PatternMask = std::uint64_t;

    /// A vertex of Q_n with its dimension attached.
    struct Vertex
    {
        VertexBits bits = 0;
        int dim = 0;

        [[nodiscard]] auto weight() const -> int { return std::popcount(bits); }

        friend auto operator==(const Vertex &, const Vertex &) -> bool = default;
    };

    [[nodiscard]] inline auto hamming_distance(VertexBits a, VertexBits b) -> int { return std::popcount(a ^ b); }

    /// A sub-d-cube of Q_n: the free coordinates vary, the rest are fixed to `base`.
    class Subcube
    {
    public:
        Subcube(int ambient_dim, VertexBits free_mask, VertexBits base);

        [[nodiscard]] auto dim() const -> int { return std::popcount(_free); }
        [[nodiscard]] auto ambient_dim() const -> int { return _n; }
        [[nodiscard]] auto free_mask() const -> VertexBits { return _free; }
        [[nodiscard]] auto base() const -> VertexBits { return _base; }

        /// Free coordinates as 0-based indices, ascending.
        [[nodiscard]] auto free_coords() const -> std::vector<int>;

        /// The ambient vertex whose re-coordinatized position in Q_d is `local`:
        /// bit i of `local` goes to the i-th smallest free coordinate.
        [[nodiscard]] auto embed(VertexBits local) const -> VertexBits;
        [[nodiscard]] auto contains(VertexBits v) const -> bool { return (v & ~_free) == _base; }

        friend auto operator==(const Subcube &, const Subcube &) -> bool = default;

    private:
        int _n;
        VertexBits _free;
        VertexBits _base;
    };

    /// Number of sub-d-cubes of Q_n, C(n,d) * 2^(n-d).
    [[nodiscard]] auto subcube_count(int n, int d) -> BigInt;

    /// Visits every sub-d-cube of Q_n exactly once, free masks in Gosper order, bases ascending.
    auto for_each_subcube(int n, int d, const std::function<void (const Subcube &)> & visit) -> void;
    [[nodiscard]] auto enumerate_subcubes(int n, int d) -> std::vector<Subcube>;

    /// All d-subsets of the n coordinates as masks, in Gosper order.
    [[nodiscard]] auto free_masks(int n, int d) -> std::vector<VertexBits>;

    /// Coordinate permutation followed by complementation: v -> flip XOR perm(v),
    /// where perm sends coordinate i to coordinate perm[i].
    class CubeAutomorphism
    {
    public:
        CubeAutomorphism(std::vector<int> perm, VertexBits flip);
        [[nodiscard]] static auto identity(int d) -> CubeAutomorphism;

        [[nodiscard]] auto dim() const -> int { return static_cast<int>(_perm.size()); }
        [[nodiscard]] auto perm() const -> const std::vector<int> & { return _perm; }
        [[nodiscard]] auto flip() const -> VertexBits { return _flip; }

        [[nodiscard]] auto apply(VertexBits v) const -> VertexBits;

    private:
        std::vector<int> _perm;
        VertexBits _flip;
    };

    /// Order of Aut(Q_d), 2^d * d!.
    [[nodiscard]] auto automorphism_group_order(int d) -> BigInt;

    /// Calls `visit` for every automorphism of Q_d (d <= max_config_dimension).
    auto for_each_automorphism(int d, const std::function<void (const CubeAutomorphism &)> & visit) -> void;

    /// A set of vertices of Q_d, kept as a sorted list.
    class Configuration
    {
    public:
        Configuration() = default;
        Configuration(int d, std::vector<VertexBits> vertices);

        [[nodiscard]] static auto from_mask(int d, PatternMask mask) -> Configuration;

        [[nodiscard]] auto dim() const -> int { return _d; }
        [[nodiscard]] auto size() const -> std::size_t { return _vertices.size(); }
        [[nodiscard]] auto vertices() const -> std::span<const VertexBits> { return _vertices; }
        [[nodiscard]] auto contains(VertexBits v) const -> bool;

        /// Bit v set iff vertex v is present; requires d <= max_config_dimension.
        [[nodiscard]] auto mask() const -> PatternMask;

        friend auto operator==(const Configuration &, const Configuration &) -> bool = default;

        /// (dimension, size, sorted vertex list), lexicographically.
        friend auto operator<=>(const Configuration & a, const Configuration & b) -> std::strong_ordering;

    private:
        int _d = 0;
        std::vector<VertexBits> _vertices;
    };

    [[nodiscard]] auto apply_automorphism(const CubeAutomorphism & a, const Configuration & h) -> Configuration;

    /// Lexicographically least image of `h` over all of Aut(Q_d).
    [[nodiscard]] auto canonical_form(const Configuration & h) -> Configuration;

    /// True iff some automorphism of Q_d sends h to k.
    [[nodiscard]] auto exact_copy(const Configuration & h, const Configuration & k) -> bool;

    /// All images of one configuration, as pattern masks, for fast membership tests.
    class PatternOrbit
    {
    public:
        explicit PatternOrbit(const Configuration & h);

        [[nodiscard]] auto dim() const -> int { return _d; }
        [[nodiscard]] auto size() const -> std::size_t { return _masks.size(); }
        [[nodiscard]] auto contains(PatternMask mask) const -> bool;
        [[nodiscard]] auto masks() const -> const std::vector<PatternMask> & { return _masks; }

    private:
        int _d;
        std::vector<PatternMask> _masks;
        std::vector<bool> _dense;
    };

    /// S intersected with R, re-coordinatized into Q_d through R's sorted free coordinates.
    [[nodiscard]] auto induced_pattern(const VertexSet & s, const Subcube & r) -> Configuration;

    /// Precomputed embedding offsets for one free mask; pattern extraction without allocation.
    class SubcubeFrame
    {
    public:
        explicit SubcubeFrame(VertexBits free_mask);

        [[nodiscard]] auto dim() const -> int { return _d; }
        [[nodiscard]] auto free_mask() const -> VertexBits { return _free; }
        [[nodiscard]] auto offset(std::size_t local) const -> VertexBits { return _offsets[local]; }

        [[nodiscard]] auto pattern(const VertexSet & s, VertexBits base) const -> PatternMask
        {
            PatternMask m = 0;
            for (std::size_t i = 0; i < _offsets.size(); ++i)
                if (s.contains(base | _offsets[i]))
                    m |= PatternMask{1} << i;
            return m;
        }

    private:
        VertexBits _free;
        int _d;
        std::vector<VertexBits> _offsets;
    };

    /// Subset notation: "-" for the empty set, otherwise coordinates 1..9 as digits
    /// and 10.. as letters a, b, ...; "134" is {1,3,4}.
    [[nodiscard]] auto vertex_to_subset_string(VertexBits v) -> std::string;
    [[nodiscard]] auto vertex_to_binary_string(VertexBits v, int d) -> std::string;

    enum class VertexNotation
    {
        subset,
        binary
    };

    /// One vertex per line; subset strings ("∅", "-", "134") or fixed-width 0/1 strings,
    /// detected automatically. Blank lines and '#' comments are ignored. Without a
    /// dimension the smallest one containing every vertex is used.
    [[nodiscard]] auto parse_configuration(std::string_view text, std::optional<int> dim = std::nullopt) -> Configuration;
    [[nodiscard]] auto format_configuration(const Configuration & h, VertexNotation notation = VertexNotation::subset) -> std::string;

    /// "{-, 1, 12}" style single-line rendering.
    [[nodiscard]] auto to_string(const Configuration & h) -> std::string;
}

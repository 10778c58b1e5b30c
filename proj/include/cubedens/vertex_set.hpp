#pragma once

#include <cubedens/error.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubedens
{
#ifndef CUBEDENS_MAX_DIMENSION
#define CUBEDENS_MAX_DIMENSION 24
#endif

    /// Largest ambient dimension n accepted anywhere; bounds the 2^n-bit vertex sets.
    inline constexpr int max_dimension = CUBEDENS_MAX_DIMENSION;

    /// A vertex of Q_n as a bitmask: bit i set iff coordinate i+1 is 1.
    using VertexBits = std::uint32_t;

    /// A subset S of V(Q_n), stored as a 2^n-bit vector indexed by vertex bitmask.
    class VertexSet
    {
    public:
        VertexSet() = default;
        explicit VertexSet(int n);

        [[nodiscard]] static auto full(int n) -> VertexSet;
        [[nodiscard]] static auto from_vertices(int n, std::span<const VertexBits> vertices) -> VertexSet;

        [[nodiscard]] auto dim() const -> int { return _n; }
        [[nodiscard]] auto universe_size() const -> std::uint64_t { return std::uint64_t{1} << _n; }

        [[nodiscard]] auto contains(VertexBits v) const -> bool { return (_words[v >> 6] >> (v & 63)) & 1U; }
        auto insert(VertexBits v) -> void { _words[v >> 6] |= std::uint64_t{1} << (v & 63); }
        auto erase(VertexBits v) -> void { _words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
        auto toggle(VertexBits v) -> void { _words[v >> 6] ^= std::uint64_t{1} << (v & 63); }

        [[nodiscard]] auto count() const -> std::uint64_t;
        [[nodiscard]] auto empty() const -> bool { return count() == 0; }
        [[nodiscard]] auto vertices() const -> std::vector<VertexBits>;

        /// V(Q_n) \ S.
        [[nodiscard]] auto complement() const -> VertexSet;

        /// { s XOR shift : s in S }, the image under a translation automorphism.
        [[nodiscard]] auto translated(VertexBits shift) const -> VertexSet;

        /// Nibble k holds vertices 4k..4k+3, vertex 4k in the nibble's low bit; nibbles in vertex order.
        [[nodiscard]] auto to_hex() const -> std::string;
        [[nodiscard]] static auto from_hex(int n, std::string_view hex) -> VertexSet;

        [[nodiscard]] auto words() const -> const std::vector<std::uint64_t> & { return _words; }

        friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

    private:
        auto trim() -> void;

        int _n = 0;
        std::vector<std::uint64_t> _words = std::vector<std::uint64_t>(1, 0);
    };

    /// "n <dim>" header line followed by the hex body on the next line.
    [[nodiscard]] auto serialize_vertex_set(const VertexSet & s) -> std::string;
    [[nodiscard]] auto parse_vertex_set(std::string_view text) -> VertexSet;
}

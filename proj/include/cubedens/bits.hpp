#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cubedens
{
    /// Scatter the low bits of `value` into the set positions of `mask`, lowest first.
    [[nodiscard]] constexpr auto deposit_bits(std::uint32_t value, std::uint32_t mask) -> std::uint32_t
    {
        std::uint32_t result = 0;
        for (std::uint32_t bit = 1; mask != 0; bit <<= 1) {
            std::uint32_t lowest = mask & (~mask + 1);
            if (value & bit)
                result |= lowest;
            mask &= mask - 1;
        }
        return result;
    }

    /// Inverse of deposit_bits: gather the bits of `value` at the positions of `mask`.
    [[nodiscard]] constexpr auto extract_bits(std::uint32_t value, std::uint32_t mask) -> std::uint32_t
    {
        std::uint32_t result = 0;
        for (std::uint32_t bit = 1; mask != 0; bit <<= 1) {
            std::uint32_t lowest = mask & (~mask + 1);
            if (value & lowest)
                result |= bit;
            mask &= mask - 1;
        }
        return result;
    }

    /// Next integer with the same popcount (Gosper's hack). Undefined for x == 0.
    [[nodiscard]] constexpr auto next_same_popcount(std::uint32_t x) -> std::uint32_t
    {
        std::uint32_t c = x & (~x + 1);
        std::uint32_t r = x + c;
        return (((r ^ x) >> 2) / c) | r;
    }

    /// Fixed-width dynamic bitset, sized once. Used for adjacency rows and candidate sets.
    class Bitset
    {
    public:
        Bitset() = default;
        explicit Bitset(std::size_t size) : _size(size), _words((size + 63) / 64, 0) {}

        [[nodiscard]] auto size() const -> std::size_t { return _size; }

        [[nodiscard]] auto test(std::size_t i) const -> bool { return (_words[i >> 6] >> (i & 63)) & 1U; }
        auto set(std::size_t i) -> void { _words[i >> 6] |= std::uint64_t{1} << (i & 63); }
        auto reset(std::size_t i) -> void { _words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
        auto flip(std::size_t i) -> void { _words[i >> 6] ^= std::uint64_t{1} << (i & 63); }

        auto set_all() -> void
        {
            for (auto & w : _words)
                w = ~std::uint64_t{0};
            trim();
        }

        [[nodiscard]] auto count() const -> std::size_t
        {
            std::size_t c = 0;
            for (auto w : _words)
                c += static_cast<std::size_t>(std::popcount(w));
            return c;
        }

        [[nodiscard]] auto any() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return true;
            return false;
        }

        [[nodiscard]] auto none() const -> bool { return ! any(); }

        /// Index of the lowest set bit, or size() if empty.
        [[nodiscard]] auto first() const -> std::size_t
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i])
                    return i * 64 + static_cast<std::size_t>(std::countr_zero(_words[i]));
            return _size;
        }

        /// Index of the lowest set bit strictly after `i`, or size().
        [[nodiscard]] auto next(std::size_t i) const -> std::size_t
        {
            ++i;
            if (i >= _size)
                return _size;
            std::size_t wi = i >> 6;
            std::uint64_t w = _words[wi] & (~std::uint64_t{0} << (i & 63));
            while (true) {
                if (w)
                    return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
                if (++wi == _words.size())
                    return _size;
                w = _words[wi];
            }
        }

        [[nodiscard]] auto intersect_count(const Bitset & other) const -> std::size_t
        {
            std::size_t c = 0;
            for (std::size_t i = 0; i < _words.size(); ++i)
                c += static_cast<std::size_t>(std::popcount(_words[i] & other._words[i]));
            return c;
        }

        auto operator&=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= other._words[i];
            return *this;
        }

        auto operator|=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] |= other._words[i];
            return *this;
        }

        auto subtract(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= ~other._words[i];
            return *this;
        }

        [[nodiscard]] friend auto operator&(Bitset a, const Bitset & b) -> Bitset { return a &= b; }

        [[nodiscard]] auto words() const -> const std::vector<std::uint64_t> & { return _words; }

        friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

    private:
        auto trim() -> void
        {
            if (_size & 63)
                _words.back() &= (std::uint64_t{1} << (_size & 63)) - 1;
        }

        std::size_t _size = 0;
        std::vector<std::uint64_t> _words;
    };
}

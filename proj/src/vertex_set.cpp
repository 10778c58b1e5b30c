#include <cubedens/vertex_set.hpp>

#include <fmt/core.h>

#include <bit>
#include <cctype>
#include <sstream>

using namespace cubedens;

namespace
{
    auto word_count(int n) -> std::size_t
    {
        return ((std::size_t{1} << n) + 63) / 64;
    }
}

VertexSet::VertexSet(int n) : _n(n)
{
    if (n < 0 || n > max_dimension)
        throw InvalidArgument(fmt::format("ambient dimension {} outside [0, {}]", n, max_dimension));
    _words.assign(word_count(n), 0);
}

auto VertexSet::full(int n) -> VertexSet
{
    VertexSet s(n);
    for (auto & w : s._words)
        w = ~std::uint64_t{0};
    s.trim();
    return s;
}

auto VertexSet::from_vertices(int n, std::span<const VertexBits> vertices) -> VertexSet
{
    VertexSet s(n);
    for (auto v : vertices) {
        if (v >= s.universe_size())
            throw InvalidArgument(fmt::format("vertex {} does not fit in Q_{}", v, n));
        s.insert(v);
    }
    return s;
}

auto VertexSet::trim() -> void
{
    auto size = universe_size();
    if (size < 64)
        _words.back() &= (std::uint64_t{1} << size) - 1;
}

auto VertexSet::count() const -> std::uint64_t
{
    std::uint64_t c = 0;
    for (auto w : _words)
        c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

auto VertexSet::vertices() const -> std::vector<VertexBits>
{
    std::vector<VertexBits> result;
    for (std::size_t i = 0; i < _words.size(); ++i) {
        auto w = _words[i];
        while (w) {
            result.push_back(static_cast<VertexBits>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
            w &= w - 1;
        }
    }
    return result;
}

auto VertexSet::complement() const -> VertexSet
{
    VertexSet s = *this;
    for (auto & w : s._words)
        w = ~w;
    s.trim();
    return s;
}

auto VertexSet::translated(VertexBits shift) const -> VertexSet
{
    if (shift >= universe_size())
        throw InvalidArgument(fmt::format("translation {} does not fit in Q_{}", shift, _n));
    VertexSet s(_n);
    for (VertexBits v = 0; v < universe_size(); ++v)
        if (contains(v))
            s.insert(v ^ shift);
    return s;
}

auto VertexSet::to_hex() const -> std::string
{
    static constexpr char digits[] = "0123456789abcdef";
    auto nibbles = (universe_size() + 3) / 4;
    std::string out;
    out.reserve(nibbles);
    for (std::uint64_t k = 0; k < nibbles; ++k) {
        unsigned nib = 0;
        for (unsigned b = 0; b < 4; ++b) {
            auto v = k * 4 + b;
            if (v < universe_size() && contains(static_cast<VertexBits>(v)))
                nib |= 1U << b;
        }
        out.push_back(digits[nib]);
    }
    return out;
}

auto VertexSet::from_hex(int n, std::string_view hex) -> VertexSet
{
    VertexSet s(n);
    auto nibbles = (s.universe_size() + 3) / 4;
    if (hex.size() != nibbles)
        throw ParseError(fmt::format("hex body for n={} must have {} digits, got {}", n, nibbles, hex.size()));
    for (std::uint64_t k = 0; k < nibbles; ++k) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[k])));
        unsigned nib;
        if (c >= '0' && c <= '9')
            nib = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            nib = static_cast<unsigned>(c - 'a' + 10);
        else
            throw ParseError(fmt::format("invalid hex digit '{}'", hex[k]));
        for (unsigned b = 0; b < 4; ++b)
            if (nib & (1U << b)) {
                auto v = k * 4 + b;
                if (v >= s.universe_size())
                    throw ParseError("hex body sets bits beyond 2^n");
                s.insert(static_cast<VertexBits>(v));
            }
    }
    return s;
}

auto cubedens::serialize_vertex_set(const VertexSet & s) -> std::string
{
    return fmt::format("n {}\n{}\n", s.dim(), s.to_hex());
}

auto cubedens::parse_vertex_set(std::string_view text) -> VertexSet
{
    std::istringstream in{std::string{text}};
    std::string tag, hex;
    int n = -1;
    if (! (in >> tag >> n) || tag != "n")
        throw ParseError("vertex set must start with an 'n <dim>' header");
    if (n < 0 || n > max_dimension)
        throw ParseError(fmt::format("dimension {} outside [0, {}]", n, max_dimension));
    if (! (in >> hex))
        throw ParseError("vertex set is missing its hex body");
    return VertexSet::from_hex(n, hex);
}

#include <cubedens/cube.hpp>

#include <fmt/core.h>

#include <algorithm>

using namespace cubedens;

namespace
{
    constexpr std::string_view empty_set_utf8 = "\xE2\x88\x85";

    auto coordinate_char(int coord) -> char
    {
        // coord is 0-based; coordinate 1 prints as '1', coordinate 10 as 'a'
        return coord < 9 ? static_cast<char>('1' + coord) : static_cast<char>('a' + coord - 9);
    }

    auto coordinate_from_char(char c) -> int
    {
        if (c >= '1' && c <= '9')
            return c - '1';
        if (c >= 'a' && c <= 'z')
            return c - 'a' + 9;
        if (c >= 'A' && c <= 'Z')
            return c - 'A' + 9;
        return -1;
    }

    auto tokenize(std::string_view text) -> std::vector<std::string>
    {
        std::vector<std::string> tokens;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto eol = text.find('\n', pos);
            auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            std::string current;
            for (char c : line) {
                if (c == ' ' || c == '\t' || c == '\r' || c == ',' || c == '{' || c == '}' || c == '[' || c == ']') {
                    if (! current.empty())
                        tokens.push_back(std::move(current));
                    current.clear();
                }
                else
                    current.push_back(c);
            }
            if (! current.empty())
                tokens.push_back(std::move(current));
            if (eol == std::string_view::npos)
                break;
            pos = eol + 1;
        }
        return tokens;
    }

    auto is_binary_token(const std::string & t) -> bool
    {
        return ! t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c == '0' || c == '1'; });
    }

    auto parse_subset_token(const std::string & t) -> VertexBits
    {
        if (t == "-" || t == empty_set_utf8 || t == "0")
            return 0;
        VertexBits v = 0;
        for (char c : t) {
            int coord = coordinate_from_char(c);
            if (coord < 0 || coord >= max_dimension)
                throw ParseError(fmt::format("invalid coordinate '{}' in vertex '{}'", c, t));
            auto bit = VertexBits{1} << coord;
            if (v & bit)
                throw ParseError(fmt::format("coordinate '{}' repeated in vertex '{}'", c, t));
            v |= bit;
        }
        return v;
    }
}

auto cubedens::vertex_to_subset_string(VertexBits v) -> std::string
{
    if (v == 0)
        return "-";
    std::string out;
    for (int i = 0; i < 32; ++i)
        if (v & (VertexBits{1} << i))
            out.push_back(coordinate_char(i));
    return out;
}

auto cubedens::vertex_to_binary_string(VertexBits v, int d) -> std::string
{
    std::string out;
    for (int i = 0; i < d; ++i)
        out.push_back((v >> i) & 1U ? '1' : '0');
    return out;
}

auto cubedens::parse_configuration(std::string_view text, std::optional<int> dim) -> Configuration
{
    auto tokens = tokenize(text);

    bool binary = ! tokens.empty() && std::all_of(tokens.begin(), tokens.end(), is_binary_token);
    if (binary) {
        auto width = tokens.front().size();
        binary = std::all_of(tokens.begin(), tokens.end(), [&](const std::string & t) { return t.size() == width; });
        bool has_zero = std::any_of(tokens.begin(), tokens.end(),
            [](const std::string & t) { return t.find('0') != std::string::npos; });
        // a lone "1" means {1} in subset notation; only read it as binary when the width pins it
        binary = binary && (has_zero || width >= 2 || (dim && static_cast<std::size_t>(*dim) == width));
    }

    std::vector<VertexBits> verts;
    int needed = 0;
    if (binary) {
        auto width = static_cast<int>(tokens.front().size());
        if (width > max_dimension)
            throw ParseError(fmt::format("binary vertices of width {} exceed the supported dimension", width));
        for (const auto & t : tokens) {
            VertexBits v = 0;
            for (int i = 0; i < width; ++i)
                if (t[static_cast<std::size_t>(i)] == '1')
                    v |= VertexBits{1} << i;
            verts.push_back(v);
        }
        needed = width;
        if (dim && *dim != width)
            throw ParseError(fmt::format("binary vertices have width {} but dimension {} was requested", width, *dim));
    }
    else {
        for (const auto & t : tokens) {
            auto v = parse_subset_token(t);
            verts.push_back(v);
            needed = std::max(needed, 32 - std::countl_zero(v));
        }
    }

    int d = dim.value_or(needed);
    if (needed > d)
        throw ParseError(fmt::format("configuration uses coordinate {} but dimension is {}", needed, d));
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw ParseError("configuration lists a vertex twice");
    return Configuration{d, std::move(verts)};
}

auto cubedens::format_configuration(const Configuration & h, VertexNotation notation) -> std::string
{
    std::string out;
    for (auto v : h.vertices()) {
        out += notation == VertexNotation::subset ? vertex_to_subset_string(v) : vertex_to_binary_string(v, h.dim());
        out.push_back('\n');
    }
    return out;
}

auto cubedens::to_string(const Configuration & h) -> std::string
{
    std::string out = "{";
    bool first = true;
    for (auto v : h.vertices()) {
        if (! first)
            out += ", ";
        first = false;
        out += vertex_to_subset_string(v);
    }
    return out + "}";
}

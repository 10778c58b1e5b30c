#include <cubedens/configurations.hpp>

#include <fmt/core.h>

#include <charconv>

using namespace cubedens;

namespace
{
    auto prefix_vertex(int k) -> VertexBits
    {
        return (VertexBits{1} << k) - 1;
    }

    auto parse_int(std::string_view text) -> std::optional<int>
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            return std::nullopt;
        return value;
    }
}

auto cubedens::make_perfect_path(int d) -> Configuration
{
    if (d < 1 || d > max_dimension)
        throw InvalidArgument(fmt::format("perfect path needs 1 <= d <= {}, got {}", max_dimension, d));
    std::vector<VertexBits> verts;
    for (int k = 0; k <= d; ++k)
        verts.push_back(prefix_vertex(k));
    return Configuration{d, std::move(verts)};
}

auto cubedens::make_perfect_cycle(int d) -> Configuration
{
    if (d < 2 || d > max_dimension)
        throw InvalidArgument(fmt::format("perfect cycle needs 2 <= d <= {}, got {}", max_dimension, d));
    std::vector<VertexBits> verts;
    auto all = prefix_vertex(d);
    for (int k = 0; k <= d; ++k)
        verts.push_back(prefix_vertex(k));
    for (int k = 1; k < d; ++k)
        verts.push_back(all & ~prefix_vertex(k));
    return Configuration{d, std::move(verts)};
}

auto cubedens::single_vertex(int d) -> Configuration
{
    return Configuration{d, {0}};
}

auto cubedens::adjacent_pair(int d) -> Configuration
{
    if (d < 1)
        throw InvalidArgument("adjacent pair needs d >= 1");
    return Configuration{d, {0, 1}};
}

auto cubedens::antipodal_pair(int d) -> Configuration
{
    if (d < 1)
        throw InvalidArgument("antipodal pair needs d >= 1");
    return Configuration{d, {0, prefix_vertex(d)}};
}

auto cubedens::bad_cycle_a() -> Configuration
{
    return parse_configuration("- 1 12 123 23 234 34 4", 4);
}

auto cubedens::bad_cycle_b() -> Configuration
{
    return parse_configuration("- 1 12 123 1234 134 34 3", 4);
}

auto cubedens::complement(const Configuration & h) -> Configuration
{
    std::vector<VertexBits> verts;
    for (VertexBits v = 0; v < (VertexBits{1} << h.dim()); ++v)
        if (! h.contains(v))
            verts.push_back(v);
    return Configuration{h.dim(), std::move(verts)};
}

auto cubedens::is_self_complementary(const Configuration & h) -> bool
{
    return exact_copy(h, complement(h));
}

auto cubedens::catalog_lookup(std::string_view name) -> Configuration
{
    auto at = name.find('@');
    if (at == std::string_view::npos)
        throw InvalidArgument(fmt::format("catalog name '{}' lacks an '@<d>' suffix", name));
    auto stem = name.substr(0, at);
    auto d = parse_int(name.substr(at + 1));
    if (! d || *d < 1 || *d > max_config_dimension)
        throw InvalidArgument(fmt::format("catalog name '{}' has an invalid dimension", name));

    if (stem == "badcycleA" && *d == 4)
        return bad_cycle_a();
    if (stem == "badcycleB" && *d == 4)
        return bad_cycle_b();
    if (stem == "adjacent")
        return adjacent_pair(*d);
    if (stem == "antipodal")
        return antipodal_pair(*d);
    if (! stem.empty()) {
        auto k = parse_int(stem.substr(1));
        if (k) {
            if (stem[0] == 'P' && *k == *d + 1)
                return make_perfect_path(*d);
            if (stem[0] == 'C' && *k == 2 * *d && *d >= 2)
                return make_perfect_cycle(*d);
            if (stem[0] == 'W' && *k == *d)
                return single_vertex(*d);
        }
    }
    throw InvalidArgument(fmt::format("unknown catalog configuration '{}'", name));
}

auto cubedens::catalog_names() -> std::vector<std::string>
{
    return {"P4@3", "C8@4", "C6@3", "W2@2", "adjacent@2", "antipodal@2", "badcycleA@4", "badcycleB@4"};
}

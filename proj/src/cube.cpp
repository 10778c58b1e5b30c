#include <cubedens/bits.hpp>
#include <cubedens/cube.hpp>

#include <fmt/core.h>

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

using namespace cubedens;

namespace
{
    auto check_config_dim(int d) -> void
    {
        if (d < 0 || d > max_config_dimension)
            throw InvalidArgument(fmt::format("configuration dimension {} outside [0, {}]", d, max_config_dimension));
    }

    /// Vertex image tables for every automorphism of Q_d, built once per d.
    struct AutomorphismTables
    {
        int d = 0;
        std::vector<std::vector<std::uint8_t>> images;
    };

    auto automorphism_tables(int d) -> const AutomorphismTables &
    {
        check_config_dim(d);
        static std::array<AutomorphismTables, max_config_dimension + 1> tables;
        static std::array<std::once_flag, max_config_dimension + 1> flags;
        std::call_once(flags[static_cast<std::size_t>(d)], [d] {
            auto & t = tables[static_cast<std::size_t>(d)];
            t.d = d;
            for_each_automorphism(d, [&](const CubeAutomorphism & a) {
                std::vector<std::uint8_t> image(std::size_t{1} << d);
                for (VertexBits v = 0; v < image.size(); ++v)
                    image[v] = static_cast<std::uint8_t>(a.apply(v));
                t.images.push_back(std::move(image));
            });
        });
        return tables[static_cast<std::size_t>(d)];
    }

    auto image_mask(const std::vector<std::uint8_t> & image, PatternMask mask) -> PatternMask
    {
        PatternMask out = 0;
        while (mask) {
            auto v = std::countr_zero(mask);
            out |= PatternMask{1} << image[static_cast<std::size_t>(v)];
            mask &= mask - 1;
        }
        return out;
    }
}

Subcube::Subcube(int ambient_dim, VertexBits free_mask, VertexBits base) :
    _n(ambient_dim),
    _free(free_mask),
    _base(base)
{
    if (ambient_dim < 0 || ambient_dim > max_dimension)
        throw InvalidArgument(fmt::format("ambient dimension {} outside [0, {}]", ambient_dim, max_dimension));
    VertexBits all = ambient_dim == 32 ? ~VertexBits{0} : (VertexBits{1} << ambient_dim) - 1;
    if ((free_mask & ~all) || (base & ~all))
        throw InvalidArgument("subcube coordinates exceed the ambient dimension");
    if (base & free_mask)
        throw InvalidArgument("subcube base assigns a free coordinate");
}

auto Subcube::free_coords() const -> std::vector<int>
{
    std::vector<int> coords;
    for (int i = 0; i < _n; ++i)
        if (_free & (VertexBits{1} << i))
            coords.push_back(i);
    return coords;
}

auto Subcube::embed(VertexBits local) const -> VertexBits
{
    return _base | deposit_bits(local, _free);
}

auto cubedens::subcube_count(int n, int d) -> BigInt
{
    if (d < 0 || d > n)
        return 0;
    return binomial(static_cast<unsigned>(n), static_cast<unsigned>(d)) * pow2(static_cast<unsigned>(n - d));
}

auto cubedens::free_masks(int n, int d) -> std::vector<VertexBits>
{
    if (n < 0 || n > max_dimension)
        throw InvalidArgument(fmt::format("ambient dimension {} outside [0, {}]", n, max_dimension));
    if (d < 0 || d > n)
        throw InvalidArgument(fmt::format("cannot place a {}-cube inside Q_{}", d, n));
    std::vector<VertexBits> result;
    if (d == 0) {
        result.push_back(0);
        return result;
    }
    VertexBits limit = VertexBits{1} << n;
    for (VertexBits m = (VertexBits{1} << d) - 1; m < limit; m = next_same_popcount(m))
        result.push_back(m);
    return result;
}

auto cubedens::for_each_subcube(int n, int d, const std::function<void (const Subcube &)> & visit) -> void
{
    if (d < 1)
        throw InvalidArgument(fmt::format("subcube dimension must be at least 1, got {}", d));
    VertexBits all = (VertexBits{1} << n) - 1;
    for (auto free : free_masks(n, d)) {
        VertexBits fixed = all & ~free;
        VertexBits base = 0;
        do {
            visit(Subcube{n, free, base});
            base = (base - fixed) & fixed;
        } while (base != 0);
    }
}

auto cubedens::enumerate_subcubes(int n, int d) -> std::vector<Subcube>
{
    std::vector<Subcube> result;
    for_each_subcube(n, d, [&](const Subcube & r) { result.push_back(r); });
    return result;
}

CubeAutomorphism::CubeAutomorphism(std::vector<int> perm, VertexBits flip) :
    _perm(std::move(perm)),
    _flip(flip)
{
    auto d = static_cast<int>(_perm.size());
    if (d > max_dimension)
        throw InvalidArgument("automorphism dimension too large");
    std::vector<bool> seen(_perm.size(), false);
    for (int p : _perm) {
        if (p < 0 || p >= d || seen[static_cast<std::size_t>(p)])
            throw InvalidArgument("automorphism coordinate map is not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    if (d < 32 && (flip >> d) != 0)
        throw InvalidArgument("automorphism flip mask exceeds its dimension");
}

auto CubeAutomorphism::identity(int d) -> CubeAutomorphism
{
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    return CubeAutomorphism{std::move(perm), 0};
}

auto CubeAutomorphism::apply(VertexBits v) const -> VertexBits
{
    VertexBits out = 0;
    for (std::size_t i = 0; i < _perm.size(); ++i)
        if (v & (VertexBits{1} << i))
            out |= VertexBits{1} << _perm[i];
    return out ^ _flip;
}

auto cubedens::automorphism_group_order(int d) -> BigInt
{
    return pow2(static_cast<unsigned>(d)) * factorial(static_cast<unsigned>(d));
}

auto cubedens::for_each_automorphism(int d, const std::function<void (const CubeAutomorphism &)> & visit) -> void
{
    check_config_dim(d);
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (VertexBits flip = 0; flip < (VertexBits{1} << d); ++flip)
            visit(CubeAutomorphism{perm, flip});
    } while (std::next_permutation(perm.begin(), perm.end()));
}

Configuration::Configuration(int d, std::vector<VertexBits> vertices) :
    _d(d),
    _vertices(std::move(vertices))
{
    if (d < 0 || d > max_dimension)
        throw InvalidArgument(fmt::format("configuration dimension {} outside [0, {}]", d, max_dimension));
    std::sort(_vertices.begin(), _vertices.end());
    if (std::adjacent_find(_vertices.begin(), _vertices.end()) != _vertices.end())
        throw InvalidArgument("configuration lists a vertex twice");
    if (! _vertices.empty() && _vertices.back() >= (VertexBits{1} << d))
        throw InvalidArgument(fmt::format("vertex {} does not belong to Q_{}", _vertices.back(), d));
}

auto Configuration::from_mask(int d, PatternMask mask) -> Configuration
{
    check_config_dim(d);
    std::vector<VertexBits> verts;
    while (mask) {
        verts.push_back(static_cast<VertexBits>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return Configuration{d, std::move(verts)};
}

auto Configuration::contains(VertexBits v) const -> bool
{
    return std::binary_search(_vertices.begin(), _vertices.end(), v);
}

auto Configuration::mask() const -> PatternMask
{
    check_config_dim(_d);
    PatternMask m = 0;
    for (auto v : _vertices)
        m |= PatternMask{1} << v;
    return m;
}

namespace cubedens
{
    auto operator<=>(const Configuration & a, const Configuration & b) -> std::strong_ordering
    {
        if (auto c = a._d <=> b._d; c != 0)
            return c;
        if (auto c = a._vertices.size() <=> b._vertices.size(); c != 0)
            return c;
        return std::lexicographical_compare_three_way(a._vertices.begin(), a._vertices.end(),
            b._vertices.begin(), b._vertices.end());
    }
}

auto cubedens::apply_automorphism(const CubeAutomorphism & a, const Configuration & h) -> Configuration
{
    if (a.dim() != h.dim())
        throw InvalidArgument(fmt::format("automorphism of Q_{} applied to a configuration in Q_{}", a.dim(), h.dim()));
    std::vector<VertexBits> image;
    image.reserve(h.size());
    for (auto v : h.vertices())
        image.push_back(a.apply(v));
    return Configuration{h.dim(), std::move(image)};
}

auto cubedens::canonical_form(const Configuration & h) -> Configuration
{
    const auto & tables = automorphism_tables(h.dim());
    std::vector<VertexBits> best(h.vertices().begin(), h.vertices().end());
    std::vector<VertexBits> candidate(h.size());
    for (const auto & image : tables.images) {
        for (std::size_t i = 0; i < h.size(); ++i)
            candidate[i] = image[h.vertices()[i]];
        std::sort(candidate.begin(), candidate.end());
        if (candidate < best)
            best = candidate;
    }
    return Configuration{h.dim(), std::move(best)};
}

auto cubedens::exact_copy(const Configuration & h, const Configuration & k) -> bool
{
    if (h.dim() != k.dim())
        throw InvalidArgument(fmt::format("cannot compare configurations in Q_{} and Q_{}", h.dim(), k.dim()));
    if (h.size() != k.size())
        return false;
    return canonical_form(h) == canonical_form(k);
}

PatternOrbit::PatternOrbit(const Configuration & h) :
    _d(h.dim())
{
    const auto & tables = automorphism_tables(_d);
    auto mask = h.mask();
    _masks.reserve(tables.images.size());
    for (const auto & image : tables.images)
        _masks.push_back(image_mask(image, mask));
    std::sort(_masks.begin(), _masks.end());
    _masks.erase(std::unique(_masks.begin(), _masks.end()), _masks.end());
    if (_d <= 4) {
        _dense.assign(std::size_t{1} << (std::size_t{1} << _d), false);
        for (auto m : _masks)
            _dense[m] = true;
    }
}

auto PatternOrbit::contains(PatternMask mask) const -> bool
{
    if (! _dense.empty())
        return mask < _dense.size() && _dense[mask];
    return std::binary_search(_masks.begin(), _masks.end(), mask);
}

auto cubedens::induced_pattern(const VertexSet & s, const Subcube & r) -> Configuration
{
    if (s.dim() != r.ambient_dim())
        throw InvalidArgument(fmt::format("subcube of Q_{} used with a vertex set of Q_{}", r.ambient_dim(), s.dim()));
    std::vector<VertexBits> local;
    auto d = r.dim();
    for (VertexBits i = 0; i < (VertexBits{1} << d); ++i)
        if (s.contains(r.embed(i)))
            local.push_back(i);
    return Configuration{d, std::move(local)};
}

SubcubeFrame::SubcubeFrame(VertexBits free_mask) :
    _free(free_mask),
    _d(std::popcount(free_mask))
{
    if (_d > max_config_dimension)
        throw InvalidArgument(fmt::format("subcube dimension {} exceeds {}", _d, max_config_dimension));
    _offsets.resize(std::size_t{1} << _d);
    for (VertexBits i = 0; i < _offsets.size(); ++i)
        _offsets[i] = deposit_bits(i, free_mask);
}

#include <cubedens/configurations.hpp>
#include <cubedens/constructions.hpp>

#include <fmt/core.h>

#include <algorithm>
#include <sstream>

using namespace cubedens;

auto cubedens::validate(const BlowupSpec & spec) -> void
{
    if (spec.n < 1 || spec.n > max_dimension)
        throw InvalidArgument(fmt::format("blow-up dimension {} outside [1, {}]", spec.n, max_dimension));
    auto k = spec.parts();
    if (k < 1 || k > 31)
        throw InvalidArgument(fmt::format("blow-up needs between 1 and 31 blocks, got {}", k));
    std::vector<int> owner(static_cast<std::size_t>(spec.n), -1);
    for (int b = 0; b < k; ++b) {
        const auto & block = spec.blocks[static_cast<std::size_t>(b)];
        if (block.empty())
            throw InvalidArgument(fmt::format("blow-up block {} is empty", b + 1));
        for (int c : block) {
            if (c < 0 || c >= spec.n)
                throw InvalidArgument(fmt::format("coordinate {} outside [1, {}]", c + 1, spec.n));
            if (owner[static_cast<std::size_t>(c)] != -1)
                throw InvalidArgument(fmt::format("coordinate {} appears in two blocks", c + 1));
            owner[static_cast<std::size_t>(c)] = b;
        }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end())
        throw InvalidArgument("blow-up blocks do not cover every coordinate");
    for (auto p : spec.patterns)
        if (p >> k)
            throw InvalidArgument(fmt::format("pattern {} does not fit in {} bits", p, k));
}

auto cubedens::parity_vector(const BlowupSpec & spec, VertexBits v) -> VertexBits
{
    VertexBits out = 0;
    for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
        unsigned parity = 0;
        for (int c : spec.blocks[b])
            parity ^= (v >> c) & 1U;
        out |= parity << b;
    }
    return out;
}

auto cubedens::blowup(const BlowupSpec & spec) -> VertexSet
{
    validate(spec);
    std::vector<VertexBits> block_masks;
    for (const auto & block : spec.blocks) {
        VertexBits m = 0;
        for (int c : block)
            m |= VertexBits{1} << c;
        block_masks.push_back(m);
    }
    std::vector<bool> admissible(std::size_t{1} << spec.parts(), false);
    for (auto p : spec.patterns)
        admissible[p] = true;

    VertexSet s(spec.n);
    for (VertexBits v = 0; v < s.universe_size(); ++v) {
        VertexBits parity = 0;
        for (std::size_t b = 0; b < block_masks.size(); ++b)
            parity |= static_cast<VertexBits>(std::popcount(v & block_masks[b]) & 1) << b;
        if (admissible[parity])
            s.insert(v);
    }
    return s;
}

auto cubedens::equipartition(int n, int k) -> std::vector<std::vector<int>>
{
    if (k < 1 || k > n)
        throw InvalidArgument(fmt::format("cannot split {} coordinates into {} nonempty blocks", n, k));
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
    int next = 0;
    for (int b = 0; b < k; ++b) {
        int size = n / k + (b < n % k ? 1 : 0);
        for (int i = 0; i < size; ++i)
            blocks[static_cast<std::size_t>(b)].push_back(next++);
    }
    return blocks;
}

auto cubedens::equipartition_blowup(const Configuration & h, int n) -> BlowupSpec
{
    BlowupSpec spec{n, equipartition(n, h.dim()), {h.vertices().begin(), h.vertices().end()}};
    validate(spec);
    return spec;
}

auto cubedens::path_blowup(int d, int n) -> BlowupSpec
{
    auto cycle = make_perfect_cycle(d + 1);
    BlowupSpec spec{n, equipartition(n, d + 1), {cycle.vertices().begin(), cycle.vertices().end()}};
    validate(spec);
    return spec;
}

auto cubedens::blowup_guarantee(const BlowupSpec & spec, const Configuration & h) -> BigInt
{
    validate(spec);
    auto d = h.dim();
    auto k = spec.parts();
    if (d > spec.n)
        throw InvalidArgument(fmt::format("configuration dimension {} exceeds n = {}", d, spec.n));
    Configuration pattern_config{k, spec.patterns};

    std::vector<BigInt> sizes;
    for (const auto & block : spec.blocks)
        sizes.emplace_back(block.size());

    BigInt total = 0;
    if (k == d) {
        if (! exact_copy(pattern_config, h))
            throw InvalidArgument("blow-up patterns are not an exact copy of the configuration");
        total = 1;
        for (const auto & s : sizes)
            total *= s;
    }
    else if (k == d + 1) {
        if (! exact_copy(h, make_perfect_path(d)))
            throw InvalidArgument("a blow-up with d+1 blocks only guarantees copies of the perfect path");
        if (! exact_copy(pattern_config, make_perfect_cycle(k)))
            throw InvalidArgument("path blow-up patterns are not an exact copy of the perfect (2d+2)-cycle");
        for (int omit = 0; omit < k; ++omit) {
            BigInt term = 1;
            for (int i = 0; i < k; ++i)
                if (i != omit)
                    term *= sizes[static_cast<std::size_t>(i)];
            total += term;
        }
    }
    else
        throw InvalidArgument(fmt::format("blow-up has {} blocks; need d = {} or d+1", k, d));
    return total * pow2(static_cast<unsigned>(spec.n - d));
}

auto cubedens::equipartition_bound(int d, BoundKind kind) -> Rational
{
    if (d < 1)
        throw InvalidArgument("equipartition bound needs d >= 1");
    auto ud = static_cast<unsigned>(d);
    if (kind == BoundKind::cycle)
        return make_rational(factorial(ud), boost::multiprecision::pow(BigInt{ud}, ud));
    return make_rational(factorial(ud), boost::multiprecision::pow(BigInt{ud + 1}, ud - 1));
}

auto cubedens::modular_weight_set(int n, const std::set<int> & residues, int modulus) -> VertexSet
{
    if (modulus < 1)
        throw InvalidArgument(fmt::format("modulus must be positive, got {}", modulus));
    for (int r : residues)
        if (r < 0 || r >= modulus)
            throw InvalidArgument(fmt::format("residue {} outside [0, {})", r, modulus));
    VertexSet s(n);
    for (VertexBits v = 0; v < s.universe_size(); ++v)
        if (residues.contains(std::popcount(v) % modulus))
            s.insert(v);
    return s;
}

auto cubedens::half_parity_set(int n) -> VertexSet
{
    VertexSet s(n);
    VertexBits low = (VertexBits{1} << (n / 2)) - 1;
    for (VertexBits v = 0; v < s.universe_size(); ++v)
        if (std::popcount(v & low) % 2 == 0)
            s.insert(v);
    return s;
}

auto cubedens::parse_blowup_spec(std::string_view text) -> BlowupSpec
{
    BlowupSpec spec;
    std::istringstream in{std::string{text}};
    std::string line;
    bool in_patterns = false;
    int max_coord = 0;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream words{line};
        std::string word;
        std::vector<std::string> tokens;
        while (words >> word)
            tokens.push_back(word);
        if (tokens.empty())
            continue;
        if (tokens.front() == "patterns:") {
            if (in_patterns)
                throw ParseError("duplicate 'patterns:' section");
            in_patterns = true;
            tokens.erase(tokens.begin());
        }
        if (in_patterns) {
            for (const auto & t : tokens) {
                if (static_cast<int>(t.size()) != spec.parts())
                    throw ParseError(fmt::format("pattern '{}' must have {} bits", t, spec.parts()));
                VertexBits p = 0;
                for (std::size_t i = 0; i < t.size(); ++i) {
                    if (t[i] == '1')
                        p |= VertexBits{1} << i;
                    else if (t[i] != '0')
                        throw ParseError(fmt::format("pattern '{}' is not a 0/1 string", t));
                }
                spec.patterns.push_back(p);
            }
            continue;
        }
        std::vector<int> block;
        for (const auto & t : tokens) {
            int c = 0;
            try {
                std::size_t used = 0;
                c = std::stoi(t, &used);
                if (used != t.size())
                    throw ParseError("");
            }
            catch (const std::exception &) {
                throw ParseError(fmt::format("block coordinate '{}' is not an integer", t));
            }
            if (c < 1)
                throw ParseError(fmt::format("block coordinate {} must be positive", c));
            max_coord = std::max(max_coord, c);
            block.push_back(c - 1);
        }
        spec.blocks.push_back(std::move(block));
    }
    if (! in_patterns)
        throw ParseError("blow-up spec lacks a 'patterns:' section");
    spec.n = max_coord;
    std::sort(spec.patterns.begin(), spec.patterns.end());
    spec.patterns.erase(std::unique(spec.patterns.begin(), spec.patterns.end()), spec.patterns.end());
    try {
        validate(spec);
    }
    catch (const InvalidArgument & e) {
        throw ParseError(e.what());
    }
    return spec;
}

auto cubedens::format_blowup_spec(const BlowupSpec & spec) -> std::string
{
    std::string out;
    for (const auto & block : spec.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i)
            out += fmt::format("{}{}", i ? " " : "", block[i] + 1);
        out += "\n";
    }
    out += "patterns:\n";
    for (auto p : spec.patterns)
        out += vertex_to_binary_string(p, spec.parts()) + "\n";
    return out;
}

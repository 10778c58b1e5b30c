#include <cubedens/error.hpp>
#include <cubedens/graphlab.hpp>
#include <cubedens/parallel.hpp>

#include <fmt/core.h>

#include <algorithm>
#include <array>
#include <sstream>

using namespace cubedens;

namespace
{
    auto check_size(std::size_t vertices) -> void
    {
        if (vertices > max_graph_vertices)
            throw InvalidArgument(fmt::format("graph with {} vertices exceeds the limit of {}", vertices, max_graph_vertices));
    }

    auto index_of(const std::vector<int> & symbols, int s) -> std::size_t
    {
        auto it = std::lower_bound(symbols.begin(), symbols.end(), s);
        if (it == symbols.end() || *it != s)
            return symbols.size();
        return static_cast<std::size_t>(it - symbols.begin());
    }

    auto parse_label(const std::string & word, char part, std::size_t limit) -> std::size_t
    {
        if (word.size() < 2 || (word[0] != part && word[0] != static_cast<char>(part - 'a' + 'A')))
            throw ParseError(fmt::format("expected a '{}' vertex label, got '{}'", part, word));
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(word.substr(1), &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used + 1 != word.size() || value < 1 || value > limit)
            throw ParseError(fmt::format("vertex label '{}' outside 1..{}", word, limit));
        return value - 1;
    }
}

BipartiteGraph::BipartiteGraph(std::size_t m, std::size_t p) : _m(m), _p(p)
{
    check_size(m + p);
    _rows.assign(m, Bitset(p));
}

auto BipartiteGraph::add_edge(std::size_t i, std::size_t j) -> void
{
    if (i >= _m || j >= _p)
        throw InvalidArgument(fmt::format("edge ({}, {}) outside parts of size {} and {}", i, j, _m, _p));
    _rows[i].set(j);
}

auto BipartiteGraph::edge_count() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto & r : _rows)
        total += r.count();
    return total;
}

auto BipartiteGraph::column_degree(std::size_t j) const -> std::size_t
{
    return static_cast<std::size_t>(std::count_if(_rows.begin(), _rows.end(), [j](const Bitset & r) { return r.test(j); }));
}

auto cubedens::count_2k2_formula(const BipartiteGraph & g, unsigned threads) -> std::uint64_t
{
    return parallel_sum(g.m(), threads, [&](std::size_t i) {
        std::uint64_t sum = 0;
        auto ri = g.row_degree(i);
        for (std::size_t j = i + 1; j < g.m(); ++j) {
            auto t = g.row(i).intersect_count(g.row(j));
            sum += static_cast<std::uint64_t>(ri - t) * (g.row_degree(j) - t);
        }
        return sum;
    });
}

auto cubedens::count_2k2_direct(const BipartiteGraph & g) -> std::uint64_t
{
    auto total = g.m() + g.p();
    if (total > max_direct_vertices)
        throw ComputationRefused(fmt::format("direct 2K2 enumeration is limited to {} vertices, got {}",
            max_direct_vertices, total));
    std::vector<std::uint64_t> adj(total, 0);
    for (std::size_t i = 0; i < g.m(); ++i)
        for (std::size_t j = 0; j < g.p(); ++j)
            if (g.has_edge(i, j)) {
                adj[i] |= std::uint64_t{1} << (g.m() + j);
                adj[g.m() + j] |= std::uint64_t{1} << i;
            }

    std::uint64_t count = 0;
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = a + 1; b < total; ++b)
            for (std::size_t c = b + 1; c < total; ++c)
                for (std::size_t d = c + 1; d < total; ++d) {
                    std::array<std::size_t, 4> q{a, b, c, d};
                    std::uint64_t mask = 0;
                    for (auto v : q)
                        mask |= std::uint64_t{1} << v;
                    int edges = 0;
                    bool matching = true;
                    for (auto v : q) {
                        auto deg = std::popcount(adj[v] & mask);
                        edges += deg;
                        matching = matching && deg == 1;
                    }
                    if (matching && edges == 4)
                        ++count;
                }
    return count;
}

auto cubedens::pair_sum_direct(const BipartiteGraph & g) -> std::uint64_t
{
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < g.m(); ++i)
        for (std::size_t j = i + 1; j < g.m(); ++j) {
            auto t = g.row(i).intersect_count(g.row(j));
            sum += (g.row_degree(i) - t) + (g.row_degree(j) - t);
        }
    return sum;
}

auto cubedens::pair_sum_closed(const BipartiteGraph & g) -> std::uint64_t
{
    std::uint64_t degrees = 0;
    for (std::size_t i = 0; i < g.m(); ++i)
        degrees += g.row_degree(i);
    std::uint64_t codegrees = 0;
    for (std::size_t j = 0; j < g.p(); ++j) {
        std::uint64_t c = g.column_degree(j);
        codegrees += c * (c - (c > 0 ? 1 : 0)) / 2;
    }
    auto m = static_cast<std::uint64_t>(g.m());
    return (m > 0 ? m - 1 : 0) * degrees - 2 * codegrees;
}

auto cubedens::extremal_2k2_graph(std::size_t n) -> BipartiteGraph
{
    if (n == 0 || n % 4 != 0)
        throw InvalidArgument(fmt::format("extremal 2K2 graph needs n divisible by 4, got {}", n));
    auto q = n / 4;
    BipartiteGraph g(2 * q, 2 * q);
    for (std::size_t block = 0; block < 2; ++block)
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                g.add_edge(block * q + i, block * q + j);
    return g;
}

auto cubedens::sequence_conflict_bipartite(const SeqFamily & family) -> LabelledBipartite
{
    if (family.kind != FamilyKind::U || family.d != 4)
        throw InvalidArgument("the 2K2 graph is built from U families with d = 4");
    if (check_property_U(family))
        throw InvalidArgument("family violates the end-segment property");

    std::vector<int> ends, middles;
    for (const auto & s : family.sequences) {
        ends.push_back(s.elems.front());
        ends.push_back(s.elems.back());
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    for (int s = 1; s <= family.n; ++s)
        if (! std::binary_search(ends.begin(), ends.end(), s))
            middles.push_back(s);

    LabelledBipartite out{BipartiteGraph(ends.size(), middles.size()), ends, middles};
    auto link = [&](int a, int b) {
        auto i = index_of(ends, a), j = index_of(middles, b);
        if (i < ends.size() && j < middles.size())
            out.graph.add_edge(i, j);
    };
    for (const auto & s : family.sequences) {
        link(s.elems[0], s.elems[1]);
        link(s.elems[3], s.elems[2]);
    }
    return out;
}

auto cubedens::member_induces_2k2(const LabelledBipartite & g, const Seq & member) -> bool
{
    if (member.elems.size() != 4)
        return false;
    auto a1 = index_of(g.row_symbols, member.elems[0]);
    auto a2 = index_of(g.row_symbols, member.elems[3]);
    auto b1 = index_of(g.column_symbols, member.elems[1]);
    auto b2 = index_of(g.column_symbols, member.elems[2]);
    auto rows = g.row_symbols.size(), cols = g.column_symbols.size();
    if (a1 >= rows || a2 >= rows || b1 >= cols || b2 >= cols)
        return false;
    const auto & h = g.graph;
    return h.has_edge(a1, b1) && h.has_edge(a2, b2) && ! h.has_edge(a1, b2) && ! h.has_edge(a2, b1);
}

SimpleGraph::SimpleGraph(std::size_t w)
{
    check_size(w);
    _rows.assign(w, Bitset(w));
}

auto SimpleGraph::add_edge(std::size_t i, std::size_t j) -> void
{
    if (i >= size() || j >= size() || i == j)
        throw InvalidArgument(fmt::format("invalid edge ({}, {}) in a graph on {} vertices", i, j, size()));
    _rows[i].set(j);
    _rows[j].set(i);
}

auto SimpleGraph::edge_count() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto & r : _rows)
        total += r.count();
    return total / 2;
}

auto cubedens::turan_triangle_bound(const SimpleGraph & g) -> TuranReport
{
    TuranReport report;
    auto w = static_cast<std::uint64_t>(g.size());
    report.edge_bound = w * w / 4;
    report.edges = g.edge_count();
    for (std::size_t i = 0; i < g.size() && report.triangle_free; ++i)
        for (auto j = g.row(i).first(); j < g.size(); j = g.row(i).next(j))
            if (j > i && g.row(i).intersect_count(g.row(j)) > 0) {
                report.triangle_free = false;
                break;
            }
    return report;
}

auto cubedens::first_symbols(const SeqFamily & family) -> std::vector<int>
{
    if (family.kind != FamilyKind::V)
        throw InvalidArgument("first symbols are defined for V families");
    std::vector<int> out;
    for (const auto & b : family.bisequences) {
        if (! b.left.empty())
            out.push_back(b.left.front());
        if (! b.right.empty())
            out.push_back(b.right.front());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

auto cubedens::graph_for_first(const SeqFamily & family, int e) -> LabelledGraph
{
    auto firsts = first_symbols(family);
    std::vector<int> rest;
    for (int s = 1; s <= family.n; ++s)
        if (! std::binary_search(firsts.begin(), firsts.end(), s))
            rest.push_back(s);
    LabelledGraph out{SimpleGraph(rest.size()), rest};
    for (const auto & b : family.bisequences) {
        const auto & side = b.left.empty() ? b.right : b.left;
        if (! (b.left.empty() || b.right.empty()) || side.size() != 3 || side[0] != e)
            continue;
        auto x = index_of(rest, side[1]), y = index_of(rest, side[2]);
        if (x < rest.size() && y < rest.size())
            out.graph.add_edge(x, y);
    }
    return out;
}

auto cubedens::graph_for_second(const SeqFamily & family, int x) -> LabelledGraph
{
    auto firsts = first_symbols(family);
    LabelledGraph out{SimpleGraph(firsts.size()), firsts};
    for (const auto & b : family.bisequences) {
        for (const auto & [two, one] : {std::pair{&b.left, &b.right}, std::pair{&b.right, &b.left}}) {
            if (two->size() != 2 || one->size() != 1 || (*two)[1] != x)
                continue;
            auto i = index_of(firsts, (*two)[0]), j = index_of(firsts, (*one)[0]);
            if (i < firsts.size() && j < firsts.size() && i != j)
                out.graph.add_edge(i, j);
        }
    }
    return out;
}

auto cubedens::parse_bipartite(std::string_view text) -> BipartiteGraph
{
    std::istringstream in{std::string{text}};
    std::string line;
    std::optional<BipartiteGraph> g;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream words{line};
        std::string first, second, extra;
        if (! (words >> first))
            continue;
        if (first == "parts") {
            unsigned long m = 0, p = 0;
            if (g || ! (words >> m >> p) || (words >> extra))
                throw ParseError(fmt::format("malformed parts line '{}'", line));
            g.emplace(m, p);
            continue;
        }
        if (! g)
            throw ParseError("edge list must start with a 'parts M P' line");
        if (! (words >> second) || (words >> extra))
            throw ParseError(fmt::format("malformed edge line '{}'", line));
        if (first[0] == 'p' || first[0] == 'P')
            std::swap(first, second);
        g->add_edge(parse_label(first, 'm', g->m()), parse_label(second, 'p', g->p()));
    }
    if (! g)
        throw ParseError("edge list must start with a 'parts M P' line");
    return *g;
}

auto cubedens::format_bipartite(const BipartiteGraph & g) -> std::string
{
    auto out = fmt::format("parts {} {}\n", g.m(), g.p());
    for (std::size_t i = 0; i < g.m(); ++i)
        for (std::size_t j = 0; j < g.p(); ++j)
            if (g.has_edge(i, j))
                out += fmt::format("m{} p{}\n", i + 1, j + 1);
    return out;
}

#pragma once

#include <cubedens/bits.hpp>
#include <cubedens/seqfam.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cubedens
{
    /// Largest m + p accepted by graph constructors.
    inline constexpr std::size_t max_graph_vertices = std::size_t{1} << 16;

    /// Bipartite graph with parts M (rows, size m) and P (columns, size p).
    class BipartiteGraph
    {
    public:
        BipartiteGraph(std::size_t m, std::size_t p);

        [[nodiscard]] auto m() const -> std::size_t { return _m; }
        [[nodiscard]] auto p() const -> std::size_t { return _p; }
        [[nodiscard]] auto row(std::size_t i) const -> const Bitset & { return _rows[i]; }
        [[nodiscard]] auto has_edge(std::size_t i, std::size_t j) const -> bool { return _rows[i].test(j); }
        auto add_edge(std::size_t i, std::size_t j) -> void;
        [[nodiscard]] auto edge_count() const -> std::size_t;
        [[nodiscard]] auto row_degree(std::size_t i) const -> std::size_t { return _rows[i].count(); }
        [[nodiscard]] auto column_degree(std::size_t j) const -> std::size_t;

        friend auto operator==(const BipartiteGraph &, const BipartiteGraph &) -> bool = default;

    private:
        std::size_t _m;
        std::size_t _p;
        std::vector<Bitset> _rows;
    };

    /// Sum over row pairs i < j of (r_i - t_ij)(r_j - t_ij), t_ij the common neighbourhood size.
    [[nodiscard]] auto count_2k2_formula(const BipartiteGraph & g, unsigned threads = 0) -> std::uint64_t;

    /// Largest m + p accepted by count_2k2_direct.
    inline constexpr std::size_t max_direct_vertices = 64;

    /// 4-subsets of M ∪ P whose induced subgraph is exactly two disjoint edges, by enumeration.
    [[nodiscard]] auto count_2k2_direct(const BipartiteGraph & g) -> std::uint64_t;

    /// Sum over i < j of (r_i - t_ij) + (r_j - t_ij), directly.
    [[nodiscard]] auto pair_sum_direct(const BipartiteGraph & g) -> std::uint64_t;
    /// The same sum as (m - 1) Σ r_i - 2 Σ_j C(c_j, 2).
    [[nodiscard]] auto pair_sum_closed(const BipartiteGraph & g) -> std::uint64_t;

    /// Two disjoint copies of K_{n/4,n/4}, with m = p = n/2.
    [[nodiscard]] auto extremal_2k2_graph(std::size_t n) -> BipartiteGraph;

    struct LabelledBipartite
    {
        BipartiteGraph graph;
        std::vector<int> row_symbols;
        std::vector<int> column_symbols;
    };

    /// For a U family with d = 4: rows are the symbols that end some member, columns the
    /// rest of [n]; [a, b] is an edge when a and b are adjacent in some member.
    [[nodiscard]] auto sequence_conflict_bipartite(const SeqFamily & family) -> LabelledBipartite;

    /// Whether member a b c e of the family is a 4-set inducing two disjoint edges.
    [[nodiscard]] auto member_induces_2k2(const LabelledBipartite & g, const Seq & member) -> bool;

    class SimpleGraph
    {
    public:
        explicit SimpleGraph(std::size_t w);

        [[nodiscard]] auto size() const -> std::size_t { return _rows.size(); }
        [[nodiscard]] auto has_edge(std::size_t i, std::size_t j) const -> bool { return _rows[i].test(j); }
        auto add_edge(std::size_t i, std::size_t j) -> void;
        [[nodiscard]] auto edge_count() const -> std::size_t;
        [[nodiscard]] auto row(std::size_t i) const -> const Bitset & { return _rows[i]; }

    private:
        std::vector<Bitset> _rows;
    };

    struct TuranReport
    {
        bool triangle_free = true;
        std::uint64_t edge_bound = 0;
        std::uint64_t edges = 0;
    };

    /// Triangle-freeness by row intersections, and the bound floor(w^2 / 4).
    [[nodiscard]] auto turan_triangle_bound(const SimpleGraph & g) -> TuranReport;

    struct LabelledGraph
    {
        SimpleGraph graph;
        std::vector<int> symbols;
    };

    /// Symbols that start a nonempty side of some member of a V family.
    [[nodiscard]] auto first_symbols(const SeqFamily & family) -> std::vector<int>;

    /// On the non-first symbols: [x, y] when {e x y | } or {e y x | } is a member.
    [[nodiscard]] auto graph_for_first(const SeqFamily & family, int e) -> LabelledGraph;

    /// On the first symbols: [b, c] when {b x | c} or {c x | b} is a member.
    [[nodiscard]] auto graph_for_second(const SeqFamily & family, int x) -> LabelledGraph;

    /// Text form: a "parts M P" line, then one "mI pJ" edge per line (1-based, '#' comments).
    [[nodiscard]] auto parse_bipartite(std::string_view text) -> BipartiteGraph;
    [[nodiscard]] auto format_bipartite(const BipartiteGraph & g) -> std::string;
}

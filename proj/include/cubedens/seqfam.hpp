#pragma once

#include <cubedens/bits.hpp>
#include <cubedens/cube.hpp>
#include <cubedens/vertex_set.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubedens
{
    /// U: d-sequences with end-segment consistency. V: d-bisequences with
    /// initial-segment consistency.
    enum class FamilyKind
    {
        U,
        V
    };

    [[nodiscard]] auto to_string(FamilyKind kind) -> std::string;

    /// An ordered list of distinct symbols from [1, n].
    struct Seq
    {
        std::vector<int> elems;

        [[nodiscard]] auto reversed() const -> Seq;
        /// The lexicographically smaller of the sequence and its reversal.
        [[nodiscard]] auto canonical() const -> Seq;

        friend auto operator<=>(const Seq &, const Seq &) = default;
    };

    /// Two sequences read outward from a common start; either may be empty.
    struct Biseq
    {
        std::vector<int> left;
        std::vector<int> right;

        [[nodiscard]] auto swapped() const -> Biseq;
        /// The lexicographically smaller of (left, right) and (right, left).
        [[nodiscard]] auto canonical() const -> Biseq;
        [[nodiscard]] auto length() const -> std::size_t { return left.size() + right.size(); }

        friend auto operator<=>(const Biseq &, const Biseq &) = default;
    };

    /// A family of sequences (kind U) or bisequences (kind V) of length d over [1, n].
    struct SeqFamily
    {
        FamilyKind kind = FamilyKind::U;
        int d = 0;
        int n = 0;
        std::vector<Seq> sequences;
        std::vector<Biseq> bisequences;

        [[nodiscard]] auto size() const -> std::size_t
        {
            return kind == FamilyKind::U ? sequences.size() : bisequences.size();
        }

        /// Members replaced by their canonical representatives and sorted.
        [[nodiscard]] auto normalized() const -> SeqFamily;
    };

    /// Why two members cannot coexist. `owner` and `other` index the family in
    /// listing order; for a segment violation `segment` is the offending end-segment
    /// (kind U) or initial segment (kind V) of member `owner`.
    struct Violation
    {
        enum class Reason
        {
            segment,
            reversal
        };

        Reason reason = Reason::segment;
        std::size_t owner = 0;
        std::size_t other = 0;
        std::vector<int> segment;
    };

    /// Throws InvalidArgument for malformed families: wrong lengths, repeated or
    /// out-of-range symbols, or a member listed twice.
    auto validate(const SeqFamily & family) -> void;

    /// Every member's end-segments are checked against every other member: a
    /// first-j (or last-j) block whose symbols all occur in x must be x's first j
    /// in order, or x's last j reversed. Also rejects a sequence next to its reversal.
    [[nodiscard]] auto check_property_U(const SeqFamily & family) -> std::optional<Violation>;

    /// Every initial segment of either side whose symbols all occur in x must be an
    /// initial segment of one of x's sides, in order. Also rejects a bisequence next
    /// to its swap.
    [[nodiscard]] auto check_property_V(const SeqFamily & family) -> std::optional<Violation>;

    [[nodiscard]] auto check_family(const SeqFamily & family) -> std::optional<Violation>;

    /// Pairwise conflict between two canonical members of the same kind.
    [[nodiscard]] auto sequences_conflict(const Seq & a, const Seq & b) -> bool;
    [[nodiscard]] auto bisequences_conflict(const Biseq & a, const Biseq & b) -> bool;

    /// Canonical representatives of every reversal class, sorted.
    [[nodiscard]] auto sequence_universe(int d, int n) -> std::vector<Seq>;
    [[nodiscard]] auto bisequence_universe(int d, int n) -> std::vector<Biseq>;

    /// Conflict graph over the universe of the given kind, in universe order.
    [[nodiscard]] auto conflict_graph(FamilyKind kind, int d, int n) -> std::vector<Bitset>;

    struct MaxFamilyOptions
    {
        std::optional<std::chrono::milliseconds> time_limit;
        unsigned threads = 0;
        /// Root the search at one representative per symmetric-group orbit.
        bool use_symmetry = true;
        /// Larger universes get a greedy family flagged inexact.
        std::size_t max_universe = 20000;
    };

    struct MaxFamilyResult
    {
        std::size_t size = 0;
        SeqFamily witness;
        bool exact = true;
        std::uint64_t nodes = 0;
        std::size_t universe = 0;
    };

    /// Symbols run over [1, n] with n at most this; letter input covers a to z.
    inline constexpr int max_family_symbols = 32;

    /// Universes beyond this are refused outright.
    inline constexpr std::size_t max_greedy_universe = 200000;

    /// T(d,n) for kind U, B(d,n) for kind V: the largest family with the property.
    /// Exact unless the time limit interrupts the search.
    [[nodiscard]] auto max_family(FamilyKind kind, int d, int n, const MaxFamilyOptions & options = {}) -> MaxFamilyResult;

    /// max over m of C(m,2) * (n - m).
    [[nodiscard]] auto extremal_U3_size(int n) -> std::uint64_t;

    /// {a b a' : a < a' in A, b in B} with |A| = m maximizing C(m,2)(n - m), A = {1..m}.
    [[nodiscard]] auto extremal_U3(int n) -> SeqFamily;

    /// Vertices of the perfect cycle (kind U) or perfect path (kind V) a member encodes
    /// in the subcube through ∅ spanned by its symbols (symbol s is coordinate s).
    [[nodiscard]] auto staircase(const Seq & s) -> std::vector<VertexBits>;
    [[nodiscard]] auto staircase(const Biseq & b) -> std::vector<VertexBits>;

    /// The family of good sub-d-cubes through v: H must be a perfect cycle (giving a
    /// U family) or a perfect path (giving a V family), and v must lie in S.
    [[nodiscard]] auto family_from_pointed_set(const Configuration & h, int n, const VertexSet & s, VertexBits v)
        -> SeqFamily;

    /// The union of all members' staircases: a set containing ∅ whose good subcubes
    /// through ∅ include every member's.
    [[nodiscard]] auto pointed_set_from_family(const SeqFamily & family) -> VertexSet;

    enum class SymbolStyle
    {
        numbers,
        letters
    };

    /// Line format: "a b c" per sequence, "a b | c" per bisequence ("| a b c" for an
    /// empty side), positive integers. Inline format: "[abcde, abceg]" or
    /// "[bx|c, bx;d]" with a = 1, b = 2, ... . When d or n are absent they are taken
    /// from the members.
    [[nodiscard]] auto parse_family(std::string_view text, FamilyKind kind, std::optional<int> d = std::nullopt,
        std::optional<int> n = std::nullopt) -> SeqFamily;

    /// Whether the text is in the inline letter form.
    [[nodiscard]] auto uses_letters(std::string_view text) -> bool;

    [[nodiscard]] auto format_member(const Seq & s, SymbolStyle style = SymbolStyle::numbers) -> std::string;
    [[nodiscard]] auto format_member(const Biseq & b, SymbolStyle style = SymbolStyle::numbers) -> std::string;
    [[nodiscard]] auto format_family(const SeqFamily & family, SymbolStyle style = SymbolStyle::numbers) -> std::string;
    [[nodiscard]] auto format_symbols(const std::vector<int> & symbols, SymbolStyle style = SymbolStyle::numbers) -> std::string;
}

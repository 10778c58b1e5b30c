#include <cubedens/configurations.hpp>
#include <cubedens/mis.hpp>
#include <cubedens/rational.hpp>
#include <cubedens/seqfam.hpp>

#include <fmt/core.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

using namespace cubedens;

namespace
{
    using Clock = std::chrono::steady_clock;

    auto contains_all(std::span<const int> segment, std::span<const int> symbols) -> bool
    {
        return std::all_of(segment.begin(), segment.end(),
            [&](int s) { return std::find(symbols.begin(), symbols.end(), s) != symbols.end(); });
    }

    auto starts_with(std::span<const int> seq, std::span<const int> prefix) -> bool
    {
        return seq.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), seq.begin());
    }

    auto ends_with_reversed(std::span<const int> seq, std::span<const int> segment) -> bool
    {
        return seq.size() >= segment.size() && std::equal(segment.begin(), segment.end(), seq.rbegin());
    }

    /// An end-segment of w (read from its end inward) whose symbols all occur in x
    /// but which x does not carry at one of its ends in the same order.
    auto end_segment_violation(const std::vector<int> & w, const std::vector<int> & x) -> std::optional<std::vector<int>>
    {
        std::vector<int> reversed(w.rbegin(), w.rend());
        const std::vector<int> * orientations[] = {&w, &reversed};
        for (const auto * oriented : orientations) {
            for (std::size_t j = 1; j < oriented->size(); ++j) {
                std::span<const int> segment(oriented->data(), j);
                if (! contains_all(segment, x))
                    break;
                if (starts_with(x, segment) || ends_with_reversed(x, segment))
                    continue;
                return std::vector<int>(segment.begin(), segment.end());
            }
        }
        return std::nullopt;
    }

    auto support(const Biseq & b) -> std::vector<int>
    {
        std::vector<int> out = b.left;
        out.insert(out.end(), b.right.begin(), b.right.end());
        return out;
    }

    auto initial_segment_violation(const Biseq & w, const Biseq & x) -> std::optional<std::vector<int>>
    {
        auto symbols = support(x);
        for (const auto * side : {&w.left, &w.right}) {
            for (std::size_t j = 1; j <= side->size(); ++j) {
                std::span<const int> segment(side->data(), j);
                if (! contains_all(segment, symbols))
                    break;
                if (starts_with(x.left, segment) || starts_with(x.right, segment))
                    continue;
                return std::vector<int>(segment.begin(), segment.end());
            }
        }
        return std::nullopt;
    }

    auto check_symbols(const std::vector<int> & symbols, int n, std::vector<bool> & seen) -> void
    {
        for (int s : symbols) {
            if (s < 1 || s > n)
                throw InvalidArgument(fmt::format("symbol {} outside [1, {}]", s, n));
            if (seen[static_cast<std::size_t>(s)])
                throw InvalidArgument(fmt::format("symbol {} repeated within a member", s));
            seen[static_cast<std::size_t>(s)] = true;
        }
    }

    template <typename Member>
    auto check_no_duplicates(const std::vector<Member> & members) -> void
    {
        std::vector<Member> sorted = members;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidArgument("a member is listed twice");
    }

    auto for_each_injective(int d, int n, const std::function<void (const std::vector<int> &)> & visit) -> void
    {
        std::vector<int> current;
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        std::function<void ()> rec = [&] {
            if (static_cast<int>(current.size()) == d) {
                visit(current);
                return;
            }
            for (int s = 1; s <= n; ++s) {
                if (used[static_cast<std::size_t>(s)])
                    continue;
                used[static_cast<std::size_t>(s)] = true;
                current.push_back(s);
                rec();
                current.pop_back();
                used[static_cast<std::size_t>(s)] = false;
            }
        };
        rec();
    }

    auto check_dims(int d, int n) -> void
    {
        if (d < 1)
            throw InvalidArgument(fmt::format("sequence length must be at least 1, got {}", d));
        if (n < d || n > max_family_symbols)
            throw InvalidArgument(fmt::format("need d <= n <= {}, got d = {}, n = {}", max_family_symbols, d, n));
    }

    auto permuted(const Seq & s, const std::vector<int> & perm) -> Seq
    {
        Seq out;
        for (int e : s.elems)
            out.elems.push_back(perm[static_cast<std::size_t>(e)]);
        return out.canonical();
    }

    auto permuted(const Biseq & b, const std::vector<int> & perm) -> Biseq
    {
        Biseq out;
        for (int e : b.left)
            out.left.push_back(perm[static_cast<std::size_t>(e)]);
        for (int e : b.right)
            out.right.push_back(perm[static_cast<std::size_t>(e)]);
        return out.canonical();
    }

    /// Orbit representatives (smallest index per orbit) of a sorted universe under S_n,
    /// generated by a transposition and an n-cycle.
    template <typename Member>
    auto orbit_representatives(const std::vector<Member> & universe, int n) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> parent(universe.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t (std::size_t)> find = [&](std::size_t i) {
            while (parent[i] != i)
                i = parent[i] = parent[parent[i]];
            return i;
        };

        std::vector<std::vector<int>> generators;
        if (n >= 2) {
            std::vector<int> swap12(static_cast<std::size_t>(n) + 1);
            std::iota(swap12.begin(), swap12.end(), 0);
            std::swap(swap12[1], swap12[2]);
            generators.push_back(std::move(swap12));
            std::vector<int> cycle(static_cast<std::size_t>(n) + 1, 0);
            for (int s = 1; s <= n; ++s)
                cycle[static_cast<std::size_t>(s)] = s % n + 1;
            generators.push_back(std::move(cycle));
        }
        for (std::size_t i = 0; i < universe.size(); ++i)
            for (const auto & g : generators) {
                auto image = permuted(universe[i], g);
                auto it = std::lower_bound(universe.begin(), universe.end(), image);
                if (it == universe.end() || *it != image)
                    throw Error("internal error: universe is not closed under symbol permutations");
                auto a = find(i), b = find(static_cast<std::size_t>(it - universe.begin()));
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }

        std::vector<std::size_t> reps;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (find(i) == i)
                reps.push_back(i);
        return reps;
    }

    auto letter_of(int s) -> std::string
    {
        if (s >= 1 && s <= 26)
            return std::string(1, static_cast<char>('a' + s - 1));
        return fmt::format("<{}>", s);
    }

    auto trim(std::string_view s) -> std::string_view
    {
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    auto parse_letters(std::string_view text) -> std::vector<int>
    {
        std::vector<int> out;
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c)))
                continue;
            auto lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            if (lower < 'a' || lower > 'z')
                throw ParseError(fmt::format("'{}' is not a letter symbol", c));
            out.push_back(lower - 'a' + 1);
        }
        return out;
    }

    auto parse_numbers(std::string_view text) -> std::vector<int>
    {
        std::vector<int> out;
        std::istringstream in{std::string{text}};
        std::string word;
        while (in >> word) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(word, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != word.size() || value < 1)
                throw ParseError(fmt::format("'{}' is not a positive integer symbol", word));
            out.push_back(value);
        }
        return out;
    }
}

auto cubedens::to_string(FamilyKind kind) -> std::string
{
    return kind == FamilyKind::U ? "U" : "V";
}

auto Seq::reversed() const -> Seq
{
    return Seq{{elems.rbegin(), elems.rend()}};
}

auto Seq::canonical() const -> Seq
{
    auto r = reversed();
    return r < *this ? r : *this;
}

auto Biseq::swapped() const -> Biseq
{
    return Biseq{right, left};
}

auto Biseq::canonical() const -> Biseq
{
    auto s = swapped();
    return s < *this ? s : *this;
}

auto SeqFamily::normalized() const -> SeqFamily
{
    SeqFamily out{kind, d, n, {}, {}};
    for (const auto & s : sequences)
        out.sequences.push_back(s.canonical());
    for (const auto & b : bisequences)
        out.bisequences.push_back(b.canonical());
    std::sort(out.sequences.begin(), out.sequences.end());
    std::sort(out.bisequences.begin(), out.bisequences.end());
    return out;
}

auto cubedens::validate(const SeqFamily & family) -> void
{
    check_dims(family.d, family.n);
    if (family.kind == FamilyKind::U) {
        if (! family.bisequences.empty())
            throw InvalidArgument("a U family cannot hold bisequences");
        for (const auto & s : family.sequences) {
            if (static_cast<int>(s.elems.size()) != family.d)
                throw InvalidArgument(fmt::format("sequence of length {} in a family with d = {}", s.elems.size(), family.d));
            std::vector<bool> seen(static_cast<std::size_t>(family.n) + 1, false);
            check_symbols(s.elems, family.n, seen);
        }
        check_no_duplicates(family.sequences);
    }
    else {
        if (! family.sequences.empty())
            throw InvalidArgument("a V family cannot hold plain sequences");
        for (const auto & b : family.bisequences) {
            if (static_cast<int>(b.length()) != family.d)
                throw InvalidArgument(fmt::format("bisequence of length {} in a family with d = {}", b.length(), family.d));
            std::vector<bool> seen(static_cast<std::size_t>(family.n) + 1, false);
            check_symbols(b.left, family.n, seen);
            check_symbols(b.right, family.n, seen);
        }
        check_no_duplicates(family.bisequences);
    }
}

auto cubedens::check_property_U(const SeqFamily & family) -> std::optional<Violation>
{
    if (family.kind != FamilyKind::U)
        throw InvalidArgument("Property U applies to sequence families");
    validate(family);
    const auto & m = family.sequences;
    for (std::size_t j = 1; j < m.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (family.d > 1 && m[j] == m[i].reversed())
                return Violation{Violation::Reason::reversal, j, i, {}};
            if (auto seg = end_segment_violation(m[j].elems, m[i].elems))
                return Violation{Violation::Reason::segment, j, i, *seg};
            if (auto seg = end_segment_violation(m[i].elems, m[j].elems))
                return Violation{Violation::Reason::segment, i, j, *seg};
        }
    return std::nullopt;
}

auto cubedens::check_property_V(const SeqFamily & family) -> std::optional<Violation>
{
    if (family.kind != FamilyKind::V)
        throw InvalidArgument("Property V applies to bisequence families");
    validate(family);
    const auto & m = family.bisequences;
    for (std::size_t j = 1; j < m.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (m[j] == m[i].swapped())
                return Violation{Violation::Reason::reversal, j, i, {}};
            if (auto seg = initial_segment_violation(m[j], m[i]))
                return Violation{Violation::Reason::segment, j, i, *seg};
            if (auto seg = initial_segment_violation(m[i], m[j]))
                return Violation{Violation::Reason::segment, i, j, *seg};
        }
    return std::nullopt;
}

auto cubedens::check_family(const SeqFamily & family) -> std::optional<Violation>
{
    return family.kind == FamilyKind::U ? check_property_U(family) : check_property_V(family);
}

auto cubedens::sequences_conflict(const Seq & a, const Seq & b) -> bool
{
    if (a.elems.size() > 1 && a == b.reversed())
        return true;
    return end_segment_violation(a.elems, b.elems) || end_segment_violation(b.elems, a.elems);
}

auto cubedens::bisequences_conflict(const Biseq & a, const Biseq & b) -> bool
{
    if (a == b.swapped())
        return true;
    return initial_segment_violation(a, b) || initial_segment_violation(b, a);
}

auto cubedens::sequence_universe(int d, int n) -> std::vector<Seq>
{
    check_dims(d, n);
    std::vector<Seq> out;
    for_each_injective(d, n, [&](const std::vector<int> & s) {
        Seq seq{s};
        if (seq == seq.canonical())
            out.push_back(std::move(seq));
    });
    std::sort(out.begin(), out.end());
    return out;
}

auto cubedens::bisequence_universe(int d, int n) -> std::vector<Biseq>
{
    check_dims(d, n);
    std::vector<Biseq> out;
    for_each_injective(d, n, [&](const std::vector<int> & s) {
        for (std::size_t split = 0; split <= s.size(); ++split) {
            Biseq b{{s.begin(), s.begin() + static_cast<std::ptrdiff_t>(split)},
                {s.begin() + static_cast<std::ptrdiff_t>(split), s.end()}};
            if (b == b.canonical())
                out.push_back(std::move(b));
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

auto cubedens::conflict_graph(FamilyKind kind, int d, int n) -> std::vector<Bitset>
{
    auto build = [](const auto & universe, auto conflict) {
        std::vector<Bitset> rows(universe.size(), Bitset(universe.size()));
        for (std::size_t i = 0; i < universe.size(); ++i)
            for (std::size_t j = i + 1; j < universe.size(); ++j)
                if (conflict(universe[i], universe[j])) {
                    rows[i].set(j);
                    rows[j].set(i);
                }
        return rows;
    };
    if (kind == FamilyKind::U)
        return build(sequence_universe(d, n), sequences_conflict);
    return build(bisequence_universe(d, n), bisequences_conflict);
}

auto cubedens::max_family(FamilyKind kind, int d, int n, const MaxFamilyOptions & options) -> MaxFamilyResult
{
    check_dims(d, n);
    BigInt classes = factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(n - d));
    classes = kind == FamilyKind::U ? (d > 1 ? classes / 2 : classes) : classes * (d + 1) / 2;
    if (classes > max_greedy_universe)
        throw ComputationRefused(fmt::format("universe of {} classes exceeds the limit of {}", to_string(classes),
            max_greedy_universe));
    std::vector<Seq> seqs;
    std::vector<Biseq> biseqs;
    if (kind == FamilyKind::U)
        seqs = sequence_universe(d, n);
    else
        biseqs = bisequence_universe(d, n);
    auto universe_size = kind == FamilyKind::U ? seqs.size() : biseqs.size();
    if (universe_size > options.max_universe) {
        // too large for the exact search: a greedy family, reported as a lower bound
        MaxFamilyResult result;
        result.universe = universe_size;
        result.exact = false;
        result.witness = SeqFamily{kind, d, n, {}, {}};
        for (const auto & s : seqs)
            if (std::none_of(result.witness.sequences.begin(), result.witness.sequences.end(),
                    [&](const Seq & t) { return sequences_conflict(s, t); }))
                result.witness.sequences.push_back(s);
        for (const auto & b : biseqs)
            if (std::none_of(result.witness.bisequences.begin(), result.witness.bisequences.end(),
                    [&](const Biseq & t) { return bisequences_conflict(b, t); }))
                result.witness.bisequences.push_back(b);
        result.size = result.witness.size();
        return result;
    }

    std::vector<Bitset> conflicts(universe_size, Bitset(universe_size));
    for (std::size_t i = 0; i < universe_size; ++i)
        for (std::size_t j = i + 1; j < universe_size; ++j) {
            bool c = kind == FamilyKind::U ? sequences_conflict(seqs[i], seqs[j]) : bisequences_conflict(biseqs[i], biseqs[j]);
            if (c) {
                conflicts[i].set(j);
                conflicts[j].set(i);
            }
        }

    std::optional<Clock::time_point> deadline;
    if (options.time_limit)
        deadline = Clock::now() + *options.time_limit;
    auto remaining = [&]() -> std::optional<std::chrono::milliseconds> {
        if (! deadline)
            return std::nullopt;
        return std::max(std::chrono::milliseconds{0},
            std::chrono::duration_cast<std::chrono::milliseconds>(*deadline - Clock::now()));
    };

    MaxFamilyResult result;
    result.universe = universe_size;
    std::vector<std::size_t> best;

    if (! options.use_symmetry) {
        auto mis = max_independent_set(conflicts, {remaining(), options.threads, 0});
        best = mis.vertices;
        result.exact = mis.exact;
        result.nodes = mis.nodes;
    }
    else {
        // every nonempty family can be relabelled to contain some orbit representative
        auto reps = kind == FamilyKind::U ? orbit_representatives(seqs, n) : orbit_representatives(biseqs, n);
        for (auto r : reps) {
            std::vector<std::size_t> compatible;
            for (std::size_t v = 0; v < universe_size; ++v)
                if (v != r && ! conflicts[r].test(v))
                    compatible.push_back(v);
            std::vector<Bitset> sub(compatible.size(), Bitset(compatible.size()));
            for (std::size_t i = 0; i < compatible.size(); ++i)
                for (std::size_t j = i + 1; j < compatible.size(); ++j)
                    if (conflicts[compatible[i]].test(compatible[j])) {
                        sub[i].set(j);
                        sub[j].set(i);
                    }
            auto mis = max_independent_set(sub, {remaining(), options.threads, best.empty() ? 0 : best.size() - 1});
            result.nodes += mis.nodes;
            result.exact = result.exact && mis.exact;
            if (! mis.vertices.empty() && mis.vertices.size() + 1 > best.size()) {
                best.assign(1, r);
                for (auto i : mis.vertices)
                    best.push_back(compatible[i]);
            }
            else if (best.empty())
                best.assign(1, r);
        }
    }

    result.size = best.size();
    result.witness = SeqFamily{kind, d, n, {}, {}};
    std::sort(best.begin(), best.end());
    for (auto i : best) {
        if (kind == FamilyKind::U)
            result.witness.sequences.push_back(seqs[i]);
        else
            result.witness.bisequences.push_back(biseqs[i]);
    }
    return result;
}

auto cubedens::extremal_U3_size(int n) -> std::uint64_t
{
    std::uint64_t best = 0;
    for (int m = 0; m <= n; ++m) {
        auto value = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(std::max(m - 1, 0)) / 2
            * static_cast<std::uint64_t>(n - m);
        best = std::max(best, value);
    }
    return best;
}

auto cubedens::extremal_U3(int n) -> SeqFamily
{
    if (n < 3)
        throw InvalidArgument(fmt::format("extremal U family needs n >= 3, got {}", n));
    auto target = extremal_U3_size(n);
    auto value = [n](int m) {
        return static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m - 1) / 2 * static_cast<std::uint64_t>(n - m);
    };
    int m = (2 * n + 2) / 3;
    if (value(m) != target)
        for (m = 2; m <= n && value(m) != target; ++m)
            ;

    SeqFamily family{FamilyKind::U, 3, n, {}, {}};
    for (int a = 1; a <= m; ++a)
        for (int a2 = a + 1; a2 <= m; ++a2)
            for (int b = m + 1; b <= n; ++b)
                family.sequences.push_back(Seq{{a, b, a2}});
    return family;
}

auto cubedens::staircase(const Seq & s) -> std::vector<VertexBits>
{
    std::vector<VertexBits> out;
    VertexBits v = 0;
    out.push_back(v);
    for (int e : s.elems) {
        v |= VertexBits{1} << (e - 1);
        out.push_back(v);
    }
    for (std::size_t k = 0; k + 1 < s.elems.size(); ++k) {
        v &= ~(VertexBits{1} << (s.elems[k] - 1));
        out.push_back(v);
    }
    return out;
}

auto cubedens::staircase(const Biseq & b) -> std::vector<VertexBits>
{
    std::vector<VertexBits> out{0};
    for (const auto * side : {&b.left, &b.right}) {
        VertexBits v = 0;
        for (int e : *side) {
            v |= VertexBits{1} << (e - 1);
            out.push_back(v);
        }
    }
    return out;
}

auto cubedens::family_from_pointed_set(const Configuration & h, int n, const VertexSet & s, VertexBits v) -> SeqFamily
{
    auto d = h.dim();
    if (d < 2 || d > max_config_dimension || d > n)
        throw InvalidArgument(fmt::format("need 2 <= d <= min(n, {}), got d = {}", max_config_dimension, d));
    if (s.dim() != n)
        throw InvalidArgument(fmt::format("vertex set lives in Q_{}, expected Q_{}", s.dim(), n));
    if (v >= s.universe_size() || ! s.contains(v))
        throw InvalidArgument("the base vertex must belong to S");

    FamilyKind kind;
    if (exact_copy(h, make_perfect_cycle(d)))
        kind = FamilyKind::U;
    else if (exact_copy(h, make_perfect_path(d)))
        kind = FamilyKind::V;
    else
        throw InvalidArgument("family extraction needs a perfect cycle or a perfect path");

    // local staircase mask -> member over local symbols 1..d
    std::map<PatternMask, Seq> seq_of;
    std::map<PatternMask, Biseq> biseq_of;
    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 1);
    auto mask_of = [](const std::vector<VertexBits> & verts) {
        PatternMask m = 0;
        for (auto x : verts)
            m |= PatternMask{1} << x;
        return m;
    };
    do {
        if (kind == FamilyKind::U) {
            Seq seq{order};
            seq_of.emplace(mask_of(staircase(seq)), seq.canonical());
        }
        else
            for (std::size_t split = 0; split <= order.size(); ++split) {
                Biseq b{{order.begin(), order.begin() + static_cast<std::ptrdiff_t>(split)},
                    {order.begin() + static_cast<std::ptrdiff_t>(split), order.end()}};
                biseq_of.emplace(mask_of(staircase(b)), b.canonical());
            }
    } while (std::next_permutation(order.begin(), order.end()));

    PatternOrbit orbit{h};
    auto shifted = s.translated(v);
    SeqFamily family{kind, d, n, {}, {}};
    for (auto free : free_masks(n, d)) {
        SubcubeFrame frame{free};
        auto pattern = frame.pattern(shifted, 0);
        if (! orbit.contains(pattern))
            continue;
        std::vector<int> coords;
        for (int c = 0; c < n; ++c)
            if (free & (VertexBits{1} << c))
                coords.push_back(c + 1);
        auto relabel = [&](const std::vector<int> & local) {
            std::vector<int> out;
            for (int e : local)
                out.push_back(coords[static_cast<std::size_t>(e - 1)]);
            return out;
        };
        if (kind == FamilyKind::U) {
            auto it = seq_of.find(pattern);
            if (it == seq_of.end())
                throw Error("internal error: a good subcube through the base vertex is not a staircase");
            family.sequences.push_back(Seq{relabel(it->second.elems)}.canonical());
        }
        else {
            auto it = biseq_of.find(pattern);
            if (it == biseq_of.end())
                throw Error("internal error: a good subcube through the base vertex is not a staircase");
            family.bisequences.push_back(Biseq{relabel(it->second.left), relabel(it->second.right)}.canonical());
        }
    }
    return family.normalized();
}

auto cubedens::pointed_set_from_family(const SeqFamily & family) -> VertexSet
{
    if (auto violation = check_family(family))
        throw InvalidArgument("cannot build a pointed set from a family that violates its property");
    if (family.n > max_dimension)
        throw InvalidArgument(fmt::format("pointed sets need n <= {}, got {}", max_dimension, family.n));
    VertexSet s(family.n);
    s.insert(0);
    for (const auto & seq : family.sequences)
        for (auto v : staircase(seq))
            s.insert(v);
    for (const auto & b : family.bisequences)
        for (auto v : staircase(b))
            s.insert(v);
    return s;
}

auto cubedens::uses_letters(std::string_view text) -> bool
{
    auto t = trim(text);
    return ! t.empty() && t.front() == '[';
}

auto cubedens::parse_family(std::string_view text, FamilyKind kind, std::optional<int> d, std::optional<int> n) -> SeqFamily
{
    std::vector<std::vector<int>> lefts, rights;
    std::vector<bool> split;

    auto add_member = [&](std::string_view body, bool letters) {
        auto bar = body.find_first_of(letters ? "|;" : "|");
        auto parse = [&](std::string_view part) { return letters ? parse_letters(part) : parse_numbers(part); };
        if (bar == std::string_view::npos) {
            lefts.push_back(parse(body));
            rights.emplace_back();
            split.push_back(false);
        }
        else {
            if (body.find_first_of("|;", bar + 1) != std::string_view::npos)
                throw ParseError(fmt::format("member '{}' has more than one separator", body));
            lefts.push_back(parse(body.substr(0, bar)));
            rights.push_back(parse(body.substr(bar + 1)));
            split.push_back(true);
        }
    };

    if (uses_letters(text)) {
        auto t = trim(text);
        if (t.back() != ']')
            throw ParseError("inline family must end with ']'");
        auto body = t.substr(1, t.size() - 2);
        std::size_t pos = 0;
        while (pos <= body.size()) {
            auto comma = body.find(',', pos);
            auto item = trim(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
            if (! item.empty())
                add_member(item, true);
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
    }
    else {
        std::istringstream in{std::string{text}};
        std::string line;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.resize(hash);
            auto item = trim(line);
            if (! item.empty())
                add_member(item, false);
        }
    }

    SeqFamily family{kind, 0, 0, {}, {}};
    int max_symbol = 0;
    for (std::size_t i = 0; i < lefts.size(); ++i) {
        for (const auto * side : {&lefts[i], &rights[i]})
            for (int s : *side)
                max_symbol = std::max(max_symbol, s);
        if (kind == FamilyKind::U) {
            if (split[i])
                throw ParseError("sequence families do not use '|' separators");
            family.sequences.push_back(Seq{lefts[i]});
        }
        else
            family.bisequences.push_back(Biseq{lefts[i], rights[i]});
    }
    if (d)
        family.d = *d;
    else if (! lefts.empty())
        family.d = static_cast<int>(lefts.front().size() + rights.front().size());
    family.n = n.value_or(std::max(max_symbol, family.d));
    try {
        validate(family);
    }
    catch (const InvalidArgument & e) {
        throw ParseError(e.what());
    }
    return family;
}

auto cubedens::format_symbols(const std::vector<int> & symbols, SymbolStyle style) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (style == SymbolStyle::letters)
            out += letter_of(symbols[i]);
        else
            out += fmt::format("{}{}", i ? " " : "", symbols[i]);
    }
    return out;
}

auto cubedens::format_member(const Seq & s, SymbolStyle style) -> std::string
{
    return format_symbols(s.elems, style);
}

auto cubedens::format_member(const Biseq & b, SymbolStyle style) -> std::string
{
    if (style == SymbolStyle::letters)
        return format_symbols(b.left, style) + "|" + format_symbols(b.right, style);
    auto left = format_symbols(b.left, style);
    auto right = format_symbols(b.right, style);
    return (left.empty() ? "|" : left + " |") + (right.empty() ? "" : " " + right);
}

auto cubedens::format_family(const SeqFamily & family, SymbolStyle style) -> std::string
{
    std::string out;
    for (const auto & s : family.sequences)
        out += format_member(s, style) + "\n";
    for (const auto & b : family.bisequences)
        out += format_member(b, style) + "\n";
    return out;
}

#include <cubedens/bits.hpp>
#include <cubedens/configurations.hpp>
#include <cubedens/constructions.hpp>
#include <cubedens/density.hpp>
#include <cubedens/parallel.hpp>

#include <fmt/core.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

using namespace cubedens;

namespace
{
    auto check_dims(const Configuration & h, int n, const VertexSet & s) -> void
    {
        if (h.dim() < 1)
            throw InvalidArgument("configuration dimension must be at least 1");
        if (h.dim() > n)
            throw InvalidArgument(fmt::format("configuration dimension {} exceeds n = {}", h.dim(), n));
        if (s.dim() != n)
            throw InvalidArgument(fmt::format("vertex set lives in Q_{}, expected Q_{}", s.dim(), n));
    }

    auto make_report(std::uint64_t count, BigInt total, ProofMode mode) -> DensityReport
    {
        DensityReport r;
        r.count = count;
        r.total = std::move(total);
        r.fraction = make_rational(r.count, r.total);
        r.mode = mode;
        return r;
    }

    /// Orbit of H plus one frame per free mask; shared by all counting loops.
    class Evaluator
    {
    public:
        Evaluator(const Configuration & h, int n) :
            _orbit(h),
            _n(n)
        {
            for (auto free : free_masks(n, h.dim()))
                _frames.emplace_back(free);
        }

        [[nodiscard]] auto frames() const -> const std::vector<SubcubeFrame> & { return _frames; }
        [[nodiscard]] auto orbit() const -> const PatternOrbit & { return _orbit; }

        [[nodiscard]] auto count_frame(const VertexSet & s, std::size_t f) const -> std::uint64_t
        {
            const auto & frame = _frames[f];
            VertexBits fixed = ((VertexBits{1} << _n) - 1) & ~frame.free_mask();
            std::uint64_t good = 0;
            VertexBits base = 0;
            do {
                good += _orbit.contains(frame.pattern(s, base));
                base = (base - fixed) & fixed;
            } while (base != 0);
            return good;
        }

        [[nodiscard]] auto count(const VertexSet & s, unsigned threads = 1) const -> std::uint64_t
        {
            return parallel_sum(_frames.size(), threads, [&](std::size_t f) { return count_frame(s, f); });
        }

        /// Good subcubes through v.
        [[nodiscard]] auto local(const VertexSet & s, VertexBits v) const -> std::uint64_t
        {
            std::uint64_t good = 0;
            for (const auto & frame : _frames)
                good += _orbit.contains(frame.pattern(s, v & ~frame.free_mask()));
            return good;
        }

        /// Change in the global count if v is toggled.
        [[nodiscard]] auto toggle_delta(const VertexSet & s, VertexBits v) const -> std::int64_t
        {
            std::int64_t delta = 0;
            for (const auto & frame : _frames) {
                auto before = frame.pattern(s, v & ~frame.free_mask());
                auto after = before ^ (PatternMask{1} << extract_bits(v, frame.free_mask()));
                delta += static_cast<std::int64_t>(_orbit.contains(after)) - static_cast<std::int64_t>(_orbit.contains(before));
            }
            return delta;
        }

    private:
        PatternOrbit _orbit;
        int _n;
        std::vector<SubcubeFrame> _frames;
    };

    /// Is `mask` (a subset of V(Q_n), n <= 4) minimal among its coordinate-permutation images?
    auto permutation_minimal(std::uint32_t mask, const std::vector<std::vector<std::uint8_t>> & vertex_maps) -> bool
    {
        for (const auto & map : vertex_maps) {
            std::uint32_t image = 0;
            for (std::uint32_t m = mask; m; m &= m - 1)
                image |= std::uint32_t{1} << map[static_cast<std::size_t>(std::countr_zero(m))];
            if (image < mask)
                return false;
        }
        return true;
    }

    struct Seed
    {
        std::string origin;
        VertexSet set;
        std::optional<BlowupSpec> partition;
        std::uint64_t count = 0;
    };

    auto build_seeds(const Configuration & h, int n, const SearchOptions & options, std::mt19937_64 & rng) -> std::vector<Seed>
    {
        std::vector<Seed> seeds;
        auto d = h.dim();
        if (n >= d) {
            auto spec = equipartition_blowup(h, n);
            seeds.push_back({"blowup-equi", blowup(spec), spec});
        }
        if (d >= 1 && n >= d + 1 && exact_copy(h, make_perfect_path(d))) {
            auto spec = path_blowup(d, n);
            seeds.push_back({"blowup-path", blowup(spec), spec});
        }
        for (int modulus = 2; modulus <= 4; ++modulus)
            for (unsigned bits = 1; bits + 1 < (1U << modulus); ++bits) {
                std::set<int> residues;
                for (int r = 0; r < modulus; ++r)
                    if (bits & (1U << r))
                        residues.insert(r);
                seeds.push_back({fmt::format("mod{}-{:b}", modulus, bits), modular_weight_set(n, residues, modulus), std::nullopt});
            }
        if (n >= 2) {
            BlowupSpec two{n, equipartition(n, 2), {}};
            for (unsigned bits = 1; bits < 15; ++bits) {
                two.patterns.clear();
                for (VertexBits p = 0; p < 4; ++p)
                    if (bits & (1U << p))
                        two.patterns.push_back(p);
                seeds.push_back({fmt::format("two-block-{:04b}", bits), blowup(two), two});
            }
        }
        std::bernoulli_distribution coin(static_cast<double>(h.size()) / static_cast<double>(std::uint64_t{1} << d));
        for (int i = 0; i < 4; ++i) {
            VertexSet s(n);
            for (VertexBits v = 0; v < s.universe_size(); ++v)
                if (coin(rng))
                    s.insert(v);
            seeds.push_back({fmt::format("random-{}", i), std::move(s), std::nullopt});
        }
        for (std::size_t i = 0; i < options.extra_seeds.size(); ++i) {
            if (options.extra_seeds[i].dim() != n)
                throw InvalidArgument("search seed has the wrong dimension");
            seeds.push_back({fmt::format("user-{}", i), options.extra_seeds[i], std::nullopt});
        }
        return seeds;
    }

    struct ClimbResult
    {
        VertexSet set;
        std::uint64_t count = 0;
    };

    auto climb(const Evaluator & eval, Seed start, std::uint64_t budget, std::mt19937_64 & rng, bool perturb) -> ClimbResult
    {
        auto & s = start.set;
        auto size = s.universe_size();
        if (perturb) {
            std::uniform_int_distribution<VertexBits> pick(0, static_cast<VertexBits>(size - 1));
            for (std::uint64_t i = 0; i < std::max<std::uint64_t>(1, size / 16); ++i)
                s.toggle(pick(rng));
        }
        std::uint64_t count = eval.count(s);
        std::uint64_t spent = 1;

        std::vector<VertexSet> classes;
        if (start.partition) {
            auto k = start.partition->parts();
            classes.assign(std::size_t{1} << k, VertexSet(s.dim()));
            for (VertexBits v = 0; v < size; ++v)
                classes[parity_vector(*start.partition, v)].insert(v);
        }

        while (spent < budget) {
            std::int64_t best_delta = 0;
            VertexBits best_vertex = 0;
            std::optional<std::size_t> best_class;
            for (VertexBits v = 0; v < size && spent < budget; ++v, ++spent) {
                auto delta = eval.toggle_delta(s, v);
                if (delta > best_delta) {
                    best_delta = delta;
                    best_vertex = v;
                }
            }
            for (std::size_t c = 0; c < classes.size() && spent < budget; ++c, ++spent) {
                auto trial = s;
                for (auto v : classes[c].vertices())
                    trial.toggle(v);
                auto delta = static_cast<std::int64_t>(eval.count(trial)) - static_cast<std::int64_t>(count);
                if (delta > best_delta) {
                    best_delta = delta;
                    best_class = c;
                }
            }
            if (best_delta <= 0)
                break;
            if (best_class) {
                for (auto v : classes[*best_class].vertices())
                    s.toggle(v);
            }
            else
                s.toggle(best_vertex);
            count = static_cast<std::uint64_t>(static_cast<std::int64_t>(count) + best_delta);
        }
        return {std::move(s), count};
    }
}

auto cubedens::to_string(ProofMode mode) -> std::string
{
    switch (mode) {
        case ProofMode::counted: return "counted";
        case ProofMode::exhaustive: return "exhaustive";
        case ProofMode::heuristic: return "heuristic";
    }
    return "unknown";
}

auto cubedens::count_exact_copies(const Configuration & h, int n, const VertexSet & s, unsigned threads) -> DensityReport
{
    check_dims(h, n, s);
    Evaluator eval{h, n};
    return make_report(eval.count(s, threads), subcube_count(n, h.dim()), ProofMode::counted);
}

auto cubedens::complement_density(const Configuration & h, int n, const VertexSet & s) -> DensityReport
{
    return count_exact_copies(complement(h), n, s.complement());
}

auto cubedens::max_density_exact(const Configuration & h, int n) -> DensityReport
{
    if (n > max_exact_dimension)
        throw ComputationRefused(fmt::format(
            "exact maximization is limited to n <= {}; use the heuristic search (max_density_search) for n = {}",
            max_exact_dimension, n));
    if (h.dim() < 1 || h.dim() > n)
        throw InvalidArgument(fmt::format("configuration dimension {} must lie in [1, {}]", h.dim(), n));

    Evaluator eval{h, n};
    std::uint32_t size = std::uint32_t{1} << n;

    std::vector<std::vector<std::uint8_t>> vertex_maps;
    {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            CubeAutomorphism a{perm, 0};
            std::vector<std::uint8_t> map(size);
            for (VertexBits v = 0; v < size; ++v)
                map[v] = static_cast<std::uint8_t>(a.apply(v));
            vertex_maps.push_back(std::move(map));
        }
    }

    auto to_set = [&](std::uint64_t mask) {
        VertexSet s(n);
        for (VertexBits v = 0; v < size; ++v)
            if ((mask >> v) & 1U)
                s.insert(v);
        return s;
    };

    // the empty set first, then every set containing ∅
    std::uint64_t best_mask = 0;
    std::uint64_t best = eval.count(to_set(0));
    std::uint64_t limit = std::uint64_t{1} << size;
    for (std::uint64_t mask = 1; mask < limit; mask += 2) {
        if (! permutation_minimal(static_cast<std::uint32_t>(mask), vertex_maps))
            continue;
        auto c = eval.count(to_set(mask));
        if (c > best) {
            best = c;
            best_mask = mask;
        }
    }

    auto report = make_report(best, subcube_count(n, h.dim()), ProofMode::exhaustive);
    report.witness = to_set(best_mask);
    return report;
}

auto cubedens::max_density_search(const Configuration & h, int n, const SearchOptions & options) -> DensityReport
{
    check_dims(h, n, VertexSet(n));
    Evaluator eval{h, n};
    std::mt19937_64 rng{options.seed};
    auto seeds = build_seeds(h, n, options, rng);
    for (auto & seed : seeds)
        seed.count = eval.count(seed.set);
    std::stable_sort(seeds.begin(), seeds.end(), [](const Seed & a, const Seed & b) { return a.count > b.count; });

    VertexSet best_set = seeds.front().set;
    std::uint64_t best_count = seeds.front().count;

    auto restarts = std::max(1U, options.restarts);
    auto spent_on_seeds = static_cast<std::uint64_t>(seeds.size());
    if (options.budget > spent_on_seeds) {
        auto per_restart = (options.budget - spent_on_seeds) / restarts;
        std::vector<ClimbResult> results(restarts);
        auto run = [&](unsigned r) {
            std::mt19937_64 local_rng{options.seed * 1000003ULL + r + 1};
            bool perturb = r >= seeds.size();
            const auto & start = seeds[perturb ? 0 : r];
            results[r] = climb(eval, start, per_restart, local_rng, perturb);
        };
        auto threads = options.threads ? options.threads : default_threads();
        if (threads <= 1)
            for (unsigned r = 0; r < restarts; ++r)
                run(r);
        else {
            std::atomic<unsigned> next{0};
            std::vector<std::jthread> workers;
            for (unsigned w = 0; w < std::min(threads, restarts); ++w)
                workers.emplace_back([&] {
                    for (unsigned r = next++; r < restarts; r = next++)
                        run(r);
                });
        }
        for (auto & result : results)
            if (result.count > best_count) {
                best_count = result.count;
                best_set = result.set;
            }
    }

    auto report = count_exact_copies(h, n, best_set);
    if (report.count != best_count)
        throw Error("internal error: search bookkeeping disagrees with a direct recount");
    report.mode = ProofMode::heuristic;
    report.witness = std::move(best_set);
    return report;
}

auto cubedens::local_count(const Configuration & h, int n, const VertexSet & s, VertexBits v, Side side) -> DensityReport
{
    check_dims(h, n, s);
    if (v >= s.universe_size())
        throw InvalidArgument(fmt::format("vertex {} does not belong to Q_{}", v, n));
    if (side == Side::in && ! s.contains(v))
        throw InvalidArgument(fmt::format("vertex {} is not in S but side 'in' was requested", vertex_to_subset_string(v)));
    if (side == Side::out && s.contains(v))
        throw InvalidArgument(fmt::format("vertex {} is in S but side 'out' was requested", vertex_to_subset_string(v)));
    Evaluator eval{h, n};
    return make_report(eval.local(s, v), binomial(static_cast<unsigned>(n), static_cast<unsigned>(h.dim())),
        ProofMode::counted);
}

auto cubedens::restrict_to_facet(const VertexSet & s, int coord, bool value) -> VertexSet
{
    auto n = s.dim();
    if (coord < 0 || coord >= n)
        throw InvalidArgument(fmt::format("facet coordinate {} outside [1, {}]", coord + 1, n));
    VertexSet out(n - 1);
    VertexBits low = (VertexBits{1} << coord) - 1;
    for (VertexBits u = 0; u < out.universe_size(); ++u) {
        VertexBits v = (u & low) | ((u & ~low) << 1) | (value ? VertexBits{1} << coord : 0);
        if (s.contains(v))
            out.insert(u);
    }
    return out;
}

auto cubedens::facet_densities(const Configuration & h, int n, const VertexSet & s) -> std::vector<Rational>
{
    check_dims(h, n, s);
    if (h.dim() >= n)
        throw InvalidArgument("facet densities need d < n");
    std::vector<Rational> out;
    for (int coord = 0; coord < n; ++coord)
        for (bool value : {false, true})
            out.push_back(count_exact_copies(h, n - 1, restrict_to_facet(s, coord, value)).fraction);
    return out;
}

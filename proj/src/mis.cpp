#include <cubedens/mis.hpp>
#include <cubedens/error.hpp>
#include <cubedens/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

using namespace cubedens;

namespace
{
    using Clock = std::chrono::steady_clock;

    struct Shared
    {
        std::vector<Bitset> adj; // compatibility graph, in search order
        std::atomic<std::size_t> best{0};
        std::atomic<bool> aborted{false};
        std::atomic<std::uint64_t> nodes{0};
        std::optional<Clock::time_point> deadline;
        std::mutex witness_mutex;
        std::vector<std::size_t> witness;
    };

    class Worker
    {
    public:
        explicit Worker(Shared & shared) : _shared(shared) {}

        auto colour(const Bitset & p, std::size_t current, std::vector<std::size_t> & order, std::vector<std::size_t> & colours)
            -> void
        {
            order.clear();
            colours.clear();
            auto best = _shared.best.load(std::memory_order_relaxed);
            // classes below kmin cannot lift current past best by themselves
            std::size_t kmin = best + 1 > current ? best + 1 - current : 1;
            Bitset uncoloured = p;
            std::size_t k = 0;
            while (uncoloured.any()) {
                ++k;
                Bitset q = uncoloured;
                for (auto v = q.first(); v < q.size(); v = q.first()) {
                    q.reset(v);
                    q.subtract(_shared.adj[v]);
                    uncoloured.reset(v);
                    if (k >= kmin) {
                        order.push_back(v);
                        colours.push_back(k);
                    }
                }
            }
        }

        auto expand(std::vector<std::size_t> & clique, Bitset p) -> void
        {
            if (_shared.aborted.load(std::memory_order_relaxed))
                return;
            auto n = ++_shared.nodes;
            if (_shared.deadline && (n & 1023) == 0 && Clock::now() > *_shared.deadline) {
                _shared.aborted = true;
                return;
            }

            std::vector<std::size_t> order, colours;
            colour(p, clique.size(), order, colours);
            for (std::size_t i = order.size(); i-- > 0;) {
                if (clique.size() + colours[i] <= _shared.best.load(std::memory_order_relaxed))
                    return;
                auto v = order[i];
                clique.push_back(v);
                auto next = p & _shared.adj[v];
                if (next.none())
                    offer(clique);
                else
                    expand(clique, std::move(next));
                clique.pop_back();
                p.reset(v);
                if (_shared.aborted.load(std::memory_order_relaxed))
                    return;
            }
        }

        auto offer(const std::vector<std::size_t> & clique) -> void
        {
            std::lock_guard lock{_shared.witness_mutex};
            if (clique.size() > _shared.best.load()) {
                _shared.best = clique.size();
                _shared.witness = clique;
            }
        }

    private:
        Shared & _shared;
    };
}

auto cubedens::max_independent_set(const std::vector<Bitset> & conflicts, const MisOptions & options) -> MisResult
{
    auto size = conflicts.size();
    for (const auto & row : conflicts)
        if (row.size() != size)
            throw InvalidArgument("conflict graph rows must all have one bit per vertex");

    // order by compatible degree, largest first
    std::vector<std::size_t> compat_degree(size);
    for (std::size_t v = 0; v < size; ++v)
        compat_degree[v] = size - 1 - conflicts[v].count() + (conflicts[v].test(v) ? 1 : 0);
    std::vector<std::size_t> order(size);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
        [&](std::size_t a, std::size_t b) { return compat_degree[a] > compat_degree[b]; });

    Shared shared;
    shared.best = options.lower_bound;
    if (options.time_limit)
        shared.deadline = Clock::now() + *options.time_limit;
    shared.adj.assign(size, Bitset(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (i != j && ! conflicts[order[i]].test(order[j]))
                shared.adj[i].set(j);

    Bitset all(size);
    all.set_all();

    auto threads = options.threads ? options.threads : default_threads();
    if (threads <= 1 || size < 64) {
        Worker worker{shared};
        std::vector<std::size_t> clique;
        if (size > 0)
            worker.expand(clique, all);
    }
    else {
        // root branches become tasks, taken in the sequential order
        Worker root{shared};
        std::vector<std::size_t> root_order, root_colours;
        root.colour(all, 0, root_order, root_colours);
        std::vector<Bitset> candidates(root_order.size());
        Bitset remaining = all;
        for (std::size_t i = root_order.size(); i-- > 0;) {
            candidates[i] = remaining & shared.adj[root_order[i]];
            remaining.reset(root_order[i]);
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w)
            workers.emplace_back([&] {
                Worker worker{shared};
                std::vector<std::size_t> clique;
                for (std::size_t t = next++; t < root_order.size(); t = next++) {
                    auto i = root_order.size() - 1 - t;
                    if (root_colours[i] <= shared.best.load())
                        continue;
                    clique.assign(1, root_order[i]);
                    if (candidates[i].none())
                        worker.offer(clique);
                    else
                        worker.expand(clique, candidates[i]);
                }
            });
    }

    MisResult result;
    result.exact = ! shared.aborted.load();
    result.nodes = shared.nodes.load();
    for (auto v : shared.witness)
        result.vertices.push_back(order[v]);
    std::sort(result.vertices.begin(), result.vertices.end());
    return result;
}

#include <cubedens/parallel.hpp>

namespace
{
    std::atomic<unsigned> configured_threads{1};
}

auto cubedens::default_threads() -> unsigned
{
    return configured_threads.load();
}

auto cubedens::set_default_threads(unsigned threads) -> void
{
    configured_threads.store(threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads);
}

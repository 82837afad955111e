#pragma once

#include <cstddef>
#include <functional>

namespace homoglab
{
    /// Worker count: HOMOGLAB_THREADS if set, else hardware concurrency (at least 1).
    auto thread_count() -> unsigned;

    /// Runs body(i) for i in [0, count), spread over thread_count() workers.
    /// body must only write to per-index state.
    auto parallel_for(std::size_t count, const std::function<void (std::size_t)> & body) -> void;
}

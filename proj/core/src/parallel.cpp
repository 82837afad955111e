#include <homoglab/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace homoglab
{
    auto thread_count() -> unsigned
    {
        if (const char * env = std::getenv("HOMOGLAB_THREADS")) {
            try {
                int n = std::stoi(env);
                if (n >= 1)
                    return unsigned(n);
            }
            catch (const std::exception &) {
            }
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }

    auto parallel_for(std::size_t count, const std::function<void (std::size_t)> & body) -> void
    {
        unsigned workers = unsigned(std::min<std::size_t>(thread_count(), count));
        if (workers <= 1) {
            for (std::size_t i = 0 ; i < count ; ++i)
                body(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (std::size_t i = next++ ; i < count ; i = next++) {
                try {
                    body(i);
                }
                catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        };

        std::vector<std::thread> threads;
        for (unsigned t = 1 ; t < workers ; ++t)
            threads.emplace_back(work);
        work();
        for (auto & t : threads)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }
}

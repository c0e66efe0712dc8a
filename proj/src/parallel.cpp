#include "dblasso/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace dblasso {

int worker_count() {
    if (const char* env = std::getenv("DEBIAS_THREADS")) {
        const int k = std::atoi(env);
        if (k >= 1) return k;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(int count, const std::function<void(int)>& f) {
    if (count <= 0) return;
    const int workers = std::min(worker_count(), count);
    if (workers == 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};

    auto run = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                f(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace dblasso

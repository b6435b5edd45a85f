#include "xent/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace xent {

int worker_count() {
    int hw = int(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    const char* env = std::getenv("XENT_THREADS");
    if (env != nullptr) {
        try {
            const int requested = std::stoi(env);
            if (requested >= 1) return std::min(requested, hw);
        } catch (const std::exception&) {
            // unparsable values fall through to the hardware default
        }
    }
    return hw;
}

void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int workers = std::min<std::size_t>(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_lock;
    std::exception_ptr error;

    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> hold(error_lock);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace xent

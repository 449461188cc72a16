#include "ansatzforge/threads.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ansatzforge {

std::size_t thread_budget() {
    const char* env = std::getenv("ANSATZ_FORGE_THREADS");
    if (!env) return 1;
    try {
        const long v = std::stol(env);
        if (v < 1) return 1;
        const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
        return std::min(static_cast<std::size_t>(v), hw);
    } catch (const std::exception&) {
        return 1;
    }
}

void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min(thread_budget(), count == 0 ? 1 : count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < count; i += workers) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace ansatzforge

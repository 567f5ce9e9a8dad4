#pragma once

#include <cstdlib>
#include <optional>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace ozeta {

/// Worker count from OZETA_THREADS (default 1, capped at hardware).
inline unsigned env_thread_count() {
    const char* env = std::getenv("OZETA_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (v < 1) return 1;
    return static_cast<unsigned>(v) > hw ? hw : static_cast<unsigned>(v);
}

/// Apply fn to every item, possibly in parallel; results come back in item
/// order so downstream merges are schedule-independent.
template <class Item, class Out>
std::vector<Out> parallel_map(const std::vector<Item>& items,
                              const std::function<Out(const Item&)>& fn) {
    unsigned workers = env_thread_count();
    std::vector<std::optional<Out>> slots(items.size());
    if (workers <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) slots[i].emplace(fn(items[i]));
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (items.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t lo = w * chunk, hi = std::min(items.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) slots[i].emplace(fn(items[i]));
            });
        }
        for (auto& t : pool) t.join();
    }
    std::vector<Out> results;
    results.reserve(items.size());
    for (auto& s : slots) results.push_back(std::move(*s));
    return results;
}

}  // namespace ozeta

/*
   Copyright 2026 The serendipity-fe Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SERENDIPITY_PARALLEL_HPP
#define SERENDIPITY_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <type_traits>
#include <vector>

namespace serendipity {

/// Applies `fn` to every item on up to `workers` threads (0 = hardware
/// concurrency) and returns results in input order. The first exception
/// thrown by any task is rethrown after all workers join.
template <typename T, typename Fn>
auto ordered_parallel_map(const std::vector<T>& items, Fn fn, std::size_t workers = 0)
    -> std::vector<std::invoke_result_t<Fn&, const T&>>
{
    using R = std::invoke_result_t<Fn&, const T&>;
    std::vector<R> results(items.size());
    if (workers == 0) {
        workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    workers = std::min(workers, items.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) {
            results[i] = fn(items[i]);
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(items.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < items.size(); i = next++) {
                try {
                    results[i] = fn(items[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

} // namespace serendipity

#endif // SERENDIPITY_PARALLEL_HPP

// SPDX-License-Identifier: Apache-2.0
//
// xluaa: near-field channel modelling for uniform arc arrays
// Copyright (C) 2026 The xluaa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef XLUAA_PARALLEL_HPP
#define XLUAA_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace xluaa
{
    /// Evaluates fn(0) .. fn(n-1) on up to `workers` threads and returns the
    /// results in index order. The first exception thrown by fn is rethrown.
    template <class F>
    auto ordered_parallel_map(std::size_t n, unsigned workers, F fn) -> std::vector<std::invoke_result_t<F &, std::size_t>>
    {
        using T = std::invoke_result_t<F &, std::size_t>;
        std::vector<std::optional<T>> slots(n);
        const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), n));

        if (threads <= 1)
        {
            for (std::size_t i = 0; i < n; ++i)
                slots[i].emplace(fn(i));
        }
        else
        {
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            auto work = [&] {
                for (std::size_t i = next++; i < n; i = next++)
                {
                    try
                    {
                        slots[i].emplace(fn(i));
                    }
                    catch (...)
                    {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                        next = n;
                    }
                }
            };
            std::vector<std::jthread> pool;
            pool.reserve(threads);
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(work);
            pool.clear(); // join
            if (failure)
                std::rethrow_exception(failure);
        }

        std::vector<T> out;
        out.reserve(n);
        for (auto &s : slots)
            out.push_back(std::move(*s));
        return out;
    }
} // namespace xluaa

#endif
